#include "planeforge/witnesses.hpp"

#include <set>

#include "planeforge/amalgam.hpp"
#include "planeforge/builder.hpp"
#include "planeforge/io.hpp"
#include "planeforge/predimension.hpp"

namespace planeforge {
namespace {

void check(WitnessBundle& w, std::string what, bool ok) { w.assertions.emplace_back(std::move(what), ok); }

Plane four_point_line() { return Plane::validate({"a", "b", "a'", "b'"}, {{"a", "b", "a'", "b'"}}); }

}  // namespace

bool WitnessBundle::all_passed() const {
  for (const auto& [what, ok] : assertions)
    if (!ok) return false;
  return true;
}

std::string format_witness(const WitnessBundle& w) {
  std::string out = io::format_plane(w.plane, w.name);
  out += "# assertions\n";
  for (const auto& [what, ok] : w.assertions) out += std::string("# ") + (ok ? "PASS" : "FAIL") + ": " + what + "\n";
  return out;
}

Plane non_desarguesian_plane() {
  return Plane::validate({"O", "A1", "A2", "A3", "B1", "B2", "B3", "C12", "C13", "C23"},
                         {{"O", "A1", "B1"},
                          {"O", "A2", "B2"},
                          {"O", "A3", "B3"},
                          {"A1", "A2", "C12"},
                          {"A1", "A3", "C13"},
                          {"A2", "A3", "C23"},
                          {"B1", "B2", "C12"},
                          {"B1", "B3", "C13"},
                          {"B2", "B3", "C23"}});
}

Plane figure2() {
  return Plane::validate({"a", "b", "c", "d", "e", "f"}, {{"a", "d", "f"}, {"c", "d", "e"}, {"b", "e", "f"}});
}

Plane morley_plane(int k) {
  std::vector<std::string> ids{"p1", "p2", "p3"};
  std::vector<std::string> line{"p1", "p2"};
  for (int m = 0; m <= k; ++m) {
    ids.push_back("q" + std::to_string(m));
    line.push_back(ids.back());
  }
  return Plane::validate(ids, {line});
}

WitnessBundle witness_non_desarguesian() {
  WitnessBundle w{"non-desarguesian", non_desarguesian_plane(), {}};
  const Plane& p = w.plane;
  check(w, "10 points", p.size() == 10);
  check(w, "9 nontrivial lines", p.lines().size() == 9);
  bool nullity_one = true;
  for (const auto& l : p.lines()) nullity_one = nullity_one && nullity(p, l) == 1;
  check(w, "every line has nullity 1", nullity_one);
  check(w, "delta = 1", delta(p, p.all()) == 1);
  check(w, "alpha = -2", alpha(p, p.all()) == -2);
  auto rep = in_k0(p);
  check(w, "in K0 by full subset search", rep.in_k0 && rep.method == SearchMethod::exhaustive);
  return w;
}

WitnessBundle witness_not_one_based() {
  WitnessBundle w{"not-one-based",
                  Plane::validate({"p1", "p2", "p3", "q1", "q2"}, {{"p1", "q1", "q2"}}), {}};
  const Plane& d = w.plane;
  auto c = d.subset({"p1", "p2", "p3"});
  auto a = d.subset({"p1", "p2", "p3", "q2"});
  auto b = d.subset({"p1", "p2", "p3", "q1"});
  check(w, "delta(A) = 4, delta(B) = 4, delta(D) = 4",
        delta(d, a) == 4 && delta(d, b) == 4 && delta(d, d.all()) == 4);
  check(w, "C <= A <= D", is_strong(d, c, a) && is_strong(d, a, d.all()));
  check(w, "C <= B <= D", is_strong(d, c, b) && is_strong(d, b, d.all()));
  check(w, "A meet B = C", (a & b) == c);
  auto rep = independence_report(d, a, b, c);
  check(w, "d(A/C) = 1", rep.d_a_over_c == 1);
  check(w, "d(A/B) = 0", rep.d_a_over_b == 0);
  check(w, "A and B are not d-independent over C", !rep.numeric && !rep.structural());
  return w;
}

WitnessBundle witness_weak_ei() {
  BuildOptions opt;
  opt.steps = 6;
  opt.ext_bound = 2;
  Plane stage = build_generic(opt).last();
  Plane ambient = canonical_amalgam(stage, four_point_line(), {}).plane;

  WitnessBundle w{"weak-ei", ambient, {}};
  const Plane& m = w.plane;
  auto ab = m.subset({"a", "b"});
  auto ab2 = m.subset({"a'", "b'"});
  check(w, "the line a b is strong in the ambient", is_strong(m, m.subset({"a", "b", "a'", "b'"}), m.all()));
  auto l1 = m.line_of(m.index_of("a"), m.index_of("b"));
  auto l2 = m.line_of(m.index_of("a'"), m.index_of("b'"));
  check(w, "line(a b) = line(a' b')", l1 && l2 && *l1 == *l2);
  check(w, "icl(a b) = {a b}", icl(m, ab) == ab);
  check(w, "icl(a' b') = {a' b'}", icl(m, ab2) == ab2);
  check(w, "{a b} meet {a' b'} is empty", (ab & ab2).empty());
  return w;
}

WitnessBundle witness_morley_chain(int k) {
  if (k < 0) throw PreconditionViolated("chain index must be non-negative");
  if (k > 8) throw BudgetExceeded("morley chain is limited to k <= 8");
  WitnessBundle w{"morley-chain-" + std::to_string(k), morley_plane(k), {}};
  const Plane& q = w.plane;
  auto b = q.subset({"p1", "p2", "p3"});
  check(w, "B <= Q_k", is_strong(q, b, q.all()));
  PointSet bq = b;
  bq.insert(q.index_of("q" + std::to_string(k)));
  check(w, "d(q_k/B) = 0", d_value(q, bq) - d_value(q, b) == 0);

  std::vector<std::size_t> lengths;
  bool case0 = true;
  for (int m = 0; m <= k; ++m) {
    Plane qm = morley_plane(m);
    auto dec = decompose(qm, qm.subset({"p1", "p2", "p3"}), qm.all());
    lengths.push_back(dec.length());
    if (m == k)
      for (std::size_t i = 0; i + 1 < dec.chain.size(); ++i)
        case0 = case0 && classify_primitive(qm, dec.chain[i], dec.chain[i + 1]).kind == PrimitiveCase::case0;
  }
  check(w, "decomposition length of Q_k = " + std::to_string(lengths.back()), lengths.back() == static_cast<std::size_t>(k) + 1);
  bool inc = true;
  for (std::size_t m = 0; m + 1 < lengths.size(); ++m) inc = inc && lengths[m + 1] == lengths[m] + 1;
  check(w, "length(Q_{m+1}) = length(Q_m) + 1 for m < k", inc);
  check(w, "every step is a Case0 primitive extension", case0);
  return w;
}

WitnessBundle witness_figure2() {
  WitnessBundle w{"figure2", figure2(), {}};
  const Plane& p = w.plane;
  auto b = p.subset({"a", "b", "c"});
  check(w, "delta = 3", delta(p, p.all()) == 3);
  check(w, "{a b c} <= plane", is_strong(p, b, p.all()));
  check(w, "{a b c} <= plane is primitive", is_primitive(p, b, p.all()));
  check(w, "delta(C/B) = 0", delta(p, p.all()) - delta(p, b) == 0);
  check(w, "|C - B| = 3", (p.all() - b).count() == 3);
  check(w, "classified as Case0", classify_primitive(p, b, p.all()).kind == PrimitiveCase::case0);
  return w;
}

Plane iterated_amalgam(const Plane& a_prime, const Plane& b_prime, int k) {
  if (k < 1) throw PreconditionViolated("copy count must be at least 1");
  for (const auto& id : a_prime.ids())
    if (!b_prime.find(id)) throw PreconditionViolated("A' is not contained in B'");
  PointSet a = b_prime.subset(a_prime.ids());
  if (restrict(b_prime, a) != a_prime) throw PreconditionViolated("A' is not the induced subplane of B'");
  if (!is_strong(b_prime, a, b_prime.all())) throw NotStrong("iterated amalgam needs A' <= B'");
  if (k == 1) return b_prime;

  auto copy = [&](int i) {
    auto name = [&](const std::string& id) { return a.contains(b_prime.index_of(id)) ? id : id + "." + std::to_string(i); };
    std::vector<std::string> ids;
    for (const auto& id : b_prime.ids()) ids.push_back(name(id));
    std::vector<std::vector<std::string>> lines;
    for (const auto& l : b_prime.line_ids()) {
      lines.emplace_back();
      for (const auto& id : l) lines.back().push_back(name(id));
    }
    return Plane::validate(ids, lines);
  };
  Plane out = copy(1);
  for (int i = 2; i <= k; ++i) out = canonical_amalgam(out, copy(i), a_prime.ids()).plane;
  return out;
}

WitnessBundle witness_iterated_amalgam(const Plane& a_prime, const Plane& b_prime, int k) {
  WitnessBundle w{"iterated-amalgam-" + std::to_string(k), iterated_amalgam(a_prime, b_prime, k), {}};
  const Plane& m = w.plane;
  const PointSet a_in_b = b_prime.subset(a_prime.ids());
  const int expect = k * delta(b_prime, b_prime.all()) - (k - 1) * delta(a_prime, a_prime.all());
  check(w, "delta = k delta(B') - (k-1) delta(A')", delta(m, m.all()) == expect);

  std::map<std::string, std::string> fixed;
  for (const auto& id : a_prime.ids()) fixed[id] = id;
  std::set<std::vector<PointIndex>> images;
  StrongnessOracle oracle(m);
  for_each_embedding(b_prime, m, fixed, [&](const std::vector<PointIndex>& image) {
    PointSet img(m.size());
    std::vector<PointIndex> added;
    for (PointIndex i = 0; i < image.size(); ++i) {
      img.insert(image[i]);
      if (!a_in_b.contains(i)) added.push_back(image[i]);
    }
    std::sort(added.begin(), added.end());
    if (oracle.strong(img)) images.insert(added);
    return false;
  });
  bool copies_strong = true;
  for (int i = 1; i <= k; ++i) {
    PointSet c(m.size());
    for (const auto& id : b_prime.ids()) {
      bool base = a_in_b.contains(b_prime.index_of(id));
      c.insert(m.index_of(base || k == 1 ? id : id + "." + std::to_string(i)));
    }
    copies_strong = copies_strong && oracle.strong(c);
  }
  check(w, "each copy of B' is strong", copies_strong);
  check(w, "exactly k strong copies of B' over A' (found " + std::to_string(images.size()) + ")",
        images.size() == static_cast<std::size_t>(k));
  return w;
}

WitnessBundle witness_by_name(const std::string& name) {
  auto numbered = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix + ":", 0) != 0) return std::nullopt;
    try {
      std::size_t used = 0;
      std::string digits = name.substr(prefix.size() + 1);
      int k = std::stoi(digits, &used);
      if (used != digits.size()) throw PreconditionViolated("bad witness index in " + name);
      return k;
    } catch (const std::logic_error&) {
      throw PreconditionViolated("bad witness index in " + name);
    }
  };
  if (name == "non-desarguesian") return witness_non_desarguesian();
  if (name == "not-one-based") return witness_not_one_based();
  if (name == "weak-ei") return witness_weak_ei();
  if (name == "figure2") return witness_figure2();
  if (auto k = numbered("morley-chain")) return witness_morley_chain(*k);
  if (auto k = numbered("iterated-amalgam")) {
    Plane a = Plane::validate({"a", "b"}, {});
    Plane b = Plane::validate({"a", "b", "p"}, {{"a", "b", "p"}});
    return witness_iterated_amalgam(a, b, *k);
  }
  throw PreconditionViolated("unknown witness " + name);
}

}  // namespace planeforge
