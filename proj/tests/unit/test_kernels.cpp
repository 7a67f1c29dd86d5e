#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "planeforge/kernels/delta_kernel.hpp"

using namespace planeforge::kernels;

namespace {

// value(Y) straight from the definition in the kernel header.
std::int32_t reference(const OffsetLines& l, std::uint32_t y) {
  std::int32_t v = l.base + std::popcount(y);
  for (std::size_t i = 0; i < l.masks.size(); ++i) v -= std::max(0, l.offsets[i] + std::popcount(l.masks[i] & y));
  return v;
}

OffsetLines random_lines(std::mt19937& rng, int free_points) {
  OffsetLines l;
  std::uniform_int_distribution<int> count(0, 40), offset(-2, 3), base(0, 30);
  std::uniform_int_distribution<std::uint32_t> bits;
  const std::uint32_t keep = free_points == 32 ? ~0u : (1u << free_points) - 1;
  l.base = base(rng);
  for (int i = count(rng); i > 0; --i) {
    l.masks.push_back(bits(rng) & bits(rng) & keep);
    l.offsets.push_back(offset(rng));
  }
  return l;
}

std::vector<const Kernel*> variants() {
  std::vector<const Kernel*> out{&scalar_kernel()};
  if (auto* k = avx2_kernel()) out.push_back(k);
  if (auto* k = neon_kernel()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("scalar kernel matches the definition") {
  std::mt19937 rng(1);
  for (int round = 0; round < 50; ++round) {
    auto l = random_lines(rng, 12);
    std::vector<std::int32_t> out(4096);
    scalar_kernel().range(l, 0, 4096, out.data());
    for (std::uint32_t y = 0; y < 4096; ++y) REQUIRE(out[y] == reference(l, y));
    CHECK(evaluate_one(l, 4095) == reference(l, 4095));
  }
}

TEST_CASE("every compiled variant agrees with the scalar kernel") {
  std::mt19937 rng(2);
  MESSAGE("variants: " << variants().size() << ", active: " << std::string(active_kernel().name));
  for (const Kernel* k : variants()) {
    for (int round = 0; round < 200; ++round) {
      auto l = random_lines(rng, 1 + round % 32);
      // odd lengths and offsets exercise the vector tails
      std::uint32_t first = rng() % 1000, count = 1 + rng() % 67;
      std::vector<std::int32_t> want(count), got(count);
      scalar_kernel().range(l, first, count, want.data());
      k->range(l, first, count, got.data());
      REQUIRE_MESSAGE(want == got, k->name);

      std::vector<std::uint32_t> subsets(1 + rng() % 45);
      for (auto& s : subsets) s = rng();
      want.assign(subsets.size(), 0);
      got.assign(subsets.size(), 0);
      scalar_kernel().list(l, subsets.data(), subsets.size(), want.data());
      k->list(l, subsets.data(), subsets.size(), got.data());
      REQUIRE_MESSAGE(want == got, k->name);
    }
  }
}

TEST_CASE("no lines and empty batches") {
  OffsetLines l;
  l.base = 5;
  for (const Kernel* k : variants()) {
    std::int32_t out[9];
    k->range(l, 0, 9, out);
    for (std::uint32_t y = 0; y < 9; ++y) CHECK(out[y] == 5 + std::popcount(y));
    k->list(l, nullptr, 0, out);
  }
}
