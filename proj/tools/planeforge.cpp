// planeforge: command-line front end for the plane library.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 parse or
// precondition error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "planeforge/amalgam.hpp"
#include "planeforge/builder.hpp"
#include "planeforge/enumerate.hpp"
#include "planeforge/io.hpp"
#include "planeforge/predimension.hpp"
#include "planeforge/witnesses.hpp"

namespace pf = planeforge;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

pf::IdSet split_ids(const std::string& text) {
  std::istringstream in(text);
  pf::IdSet ids;
  for (std::string id; in >> id;) ids.push_back(id);
  return ids;
}

pf::PointSet select(const pf::Plane& p, const std::string& text) { return p.subset(split_ids(text)); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) throw pf::Error("cannot write " + path);
}

int verdict(bool ok) { return ok ? kTrue : kFalse; }

std::string set_text(const pf::Plane& p, const pf::PointSet& s) { return "{" + pf::join_ids(p.names(s)) + "}"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planeforge: predimension tools for finite planes"};
  app.require_subcommand(1);

  std::string file, file_b, subset, within, over, mode = "canonical", output, fixed;
  int k = -1, steps = 0, ext_bound = 1, base_bound = 2, radius = 1, max_points = 5;
  bool seed = false;

  auto* validate = app.add_subcommand("validate", "check a plane file");
  validate->add_option("plane", file)->required();

  auto* delta = app.add_subcommand("delta", "δ of a subset, or the K0 report of the plane");
  delta->add_option("plane", file)->required();
  delta->add_option("--subset", subset, "point ids, space separated");

  auto* alpha = app.add_subcommand("alpha", "α of a subset or of the plane");
  alpha->add_option("plane", file)->required();
  alpha->add_option("--subset", subset);

  auto* icl = app.add_subcommand("icl", "intrinsic closure of a subset");
  icl->add_option("plane", file)->required();
  icl->add_option("--subset", subset)->required();
  icl->add_option("--output", output, "write the closure as a plane file");

  auto* strong = app.add_subcommand("strong", "is the subset strong in --within (default: the plane)");
  strong->add_option("plane", file)->required();
  strong->add_option("--subset", subset)->required();
  strong->add_option("--within", within);
  strong->add_option("--k", k, "check k-strongness instead");

  auto* amalgamate = app.add_subcommand("amalgamate", "free or canonical amalgam of two planes");
  amalgamate->add_option("a", file)->required();
  amalgamate->add_option("b", file_b)->required();
  amalgamate->add_option("--mode", mode)->check(CLI::IsMember({"free", "canonical"}));
  amalgamate->add_option("--over", over, "common part (default: shared ids)");
  amalgamate->add_option("--output", output);

  auto* decompose = app.add_subcommand("decompose", "primitive decomposition of --subset inside --within");
  decompose->add_option("plane", file)->required();
  decompose->add_option("--subset", subset)->required();
  decompose->add_option("--within", within);

  auto* embed = app.add_subcommand("embed", "embedding of a pattern plane into a target plane");
  embed->add_option("pattern", file)->required();
  embed->add_option("target", file_b)->required();
  embed->add_option("--fixed", fixed, "pinned pairs as pattern=target, space separated");

  auto* census = app.add_subcommand("census", "K0 planes up to isomorphism");
  census->add_option("--max-points", max_points)->check(CLI::Range(0, pf::kMaxEnumeratedPoints));
  census->add_option("--output", output, "directory for the plane files");

  auto* build = app.add_subcommand("build", "fair construction of a generic approximation");
  build->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  build->add_option("--ext-bound", ext_bound)->check(CLI::Range(1, pf::kMaxExtensionPoints));
  build->add_option("--base-bound", base_bound)->check(CLI::NonNegativeNumber);
  build->add_flag("--seed-fixtures", seed, "realize the non-Desarguesian plane first");
  build->add_option("--output", output, "directory for stage files and chain.log");

  auto* audit = app.add_subcommand("audit", "genericity audit of a plane");
  audit->add_option("plane", file)->required();
  audit->add_option("--radius", radius)->check(CLI::Range(0, pf::kMaxExtensionPoints));

  std::string witness_name;
  auto* witness = app.add_subcommand("witness", "named witness configuration");
  witness->add_option("name", witness_name)->required();
  witness->add_option("--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    auto load = [](const std::string& path) { return pf::io::read_plane_file(path).plane; };

    if (*validate) {
      auto np = pf::io::read_plane_file(file);
      std::cout << "valid: true\nname: " << np.name << "\npoints: " << np.plane.size()
                << "\nlines: " << np.plane.lines().size() << "\n";
      return kTrue;
    }
    if (*delta) {
      auto p = load(file);
      if (!subset.empty()) {
        std::cout << "delta: " << pf::delta(p, select(p, subset)) << "\n";
        return kTrue;
      }
      auto r = pf::in_k0(p);
      std::cout << pf::format_report(p, r);
      return verdict(r.in_k0);
    }
    if (*alpha) {
      auto p = load(file);
      std::cout << "alpha: " << pf::alpha(p, subset.empty() ? p.all() : select(p, subset)) << "\n";
      return kTrue;
    }
    if (*icl) {
      auto p = load(file);
      auto r = pf::icl_report(p, select(p, subset));
      std::cout << "icl: " << set_text(p, r.closure) << "\nd: " << r.d << "\nsearch: " << pf::to_string(r.method)
                << "\nfrontier: " << (r.is_ambient ? "true" : "false") << "\n";
      if (!output.empty()) pf::io::write_plane_file(output, pf::restrict(p, r.closure), "icl");
      return kTrue;
    }
    if (*strong) {
      auto p = load(file);
      auto a = select(p, subset);
      auto b = within.empty() ? p.all() : select(p, within);
      bool ok = k >= 0 ? pf::is_k_strong(p, a, b, k) : pf::is_strong(p, a, b);
      std::cout << (k >= 0 ? "k_strong: " : "strong: ") << (ok ? "true" : "false") << "\n";
      return verdict(ok);
    }
    if (*amalgamate) {
      auto a = load(file);
      auto b = load(file_b);
      pf::AmalgamResult r;
      try {
        if (mode == "free")
          r = over.empty() ? pf::free_amalgam(a, b) : pf::free_amalgam(a, b, split_ids(over));
        else
          r = over.empty() ? pf::canonical_amalgam(a, b) : pf::canonical_amalgam(a, b, split_ids(over));
      } catch (const pf::ExchangeViolation& e) {
        std::cout << "exchange_violation: {" << pf::join_ids(e.shared_pair()) << "} on {" << pf::join_ids(e.first_line())
                  << "} and {" << pf::join_ids(e.second_line()) << "}\n";
        return kFalse;
      }
      std::cout << pf::format_amalgam(r, "amalgam");
      if (!output.empty()) write_text(output, pf::format_amalgam(r, "amalgam"));
      return kTrue;
    }
    if (*decompose) {
      auto p = load(file);
      auto b = select(p, subset);
      auto c = within.empty() ? p.all() : select(p, within);
      auto d = pf::decompose(p, b, c);
      std::cout << "length: " << d.length() << "\n";
      for (std::size_t i = 0; i < d.chain.size(); ++i) std::cout << "X" << i << ": " << set_text(p, d.chain[i]) << "\n";
      return kTrue;
    }
    if (*embed) {
      auto a = load(file);
      auto b = load(file_b);
      std::map<std::string, std::string> pins;
      for (const auto& pair : split_ids(fixed)) {
        auto eq = pair.find('=');
        if (eq == std::string::npos) throw pf::PreconditionViolated("--fixed expects pattern=target pairs");
        pins[pair.substr(0, eq)] = pair.substr(eq + 1);
      }
      auto e = pf::find_embedding(a, b, pins);
      if (!e) {
        std::cout << "embedding: none\n";
        return kFalse;
      }
      std::cout << "embedding:";
      for (const auto& [from, to] : e->map) std::cout << " " << from << "->" << to;
      std::cout << "\n";
      return kTrue;
    }
    if (*census) {
      std::size_t total = 0;
      for (int n = 0; n <= max_points; ++n) {
        auto planes = pf::enumerate_planes(n);
        std::cout << "points_" << n << ": " << planes.size() << "\n";
        if (!output.empty()) {
          std::filesystem::create_directories(output);
          for (std::size_t i = 0; i < planes.size(); ++i) {
            std::string name = "n" + std::to_string(n) + "_" + std::to_string(i);
            pf::io::write_plane_file((std::filesystem::path(output) / (name + ".plane")).string(), planes[i], name);
          }
        }
        total += planes.size();
      }
      std::cout << "total: " << total << "\n";
      return kTrue;
    }
    if (*build) {
      pf::BuildOptions opt;
      opt.steps = steps;
      opt.ext_bound = ext_bound;
      opt.base_bound = base_bound;
      opt.seed_fixtures = seed;
      auto chain = pf::build_generic(opt);
      const auto& m = chain.last();
      std::cout << "steps: " << chain.steps.size() << "\npoints: " << m.size() << "\nlines: " << m.lines().size()
                << "\ndelta: " << pf::delta(m, m.all()) << "\n";
      std::cout << "contains_non_desarguesian: "
                << (pf::find_embedding(pf::non_desarguesian_plane(), m) ? "true" : "false") << "\n";
      if (!output.empty()) pf::write_chain(chain, output);
      return kTrue;
    }
    if (*audit) {
      auto p = load(file);
      pf::AuditOptions opt;
      opt.radius = radius;
      auto r = pf::check_genericity(p, opt);
      std::cout << pf::format_genericity(r);
      return verdict(r.pass());
    }
    if (*witness) {
      auto w = pf::witness_by_name(witness_name);
      std::cout << pf::format_witness(w);
      if (!output.empty()) write_text(output, pf::format_witness(w));
      return verdict(w.all_passed());
    }
  } catch (const pf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const pf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
