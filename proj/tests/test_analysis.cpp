#include <random>
#include <stdexcept>

#include "doctest.h"
#include "omega/analysis.hpp"

using namespace omega;

namespace {

// Naive recount oracle, deliberately independent of block_stats.
Fraction naive_max_deviation(const Bits& bits, int k) {
  size_t n = bits.size() / size_t(k);
  std::vector<uint64_t> counts(size_t(1) << k, 0);
  for (size_t b = 0; b < n; ++b) {
    size_t v = 0;
    for (int i = 0; i < k; ++i) v = v * 2 + (bits[b * size_t(k) + size_t(i)] - '0');
    ++counts[v];
  }
  Fraction best{0, 1};
  for (uint64_t c : counts) {
    // |c/n - 2^-k| = |c*2^k - n| / (n*2^k)
    uint64_t num = c << k > n ? (c << k) - n : n - (c << k);
    Fraction f = reduced(num, n << k);
    if (fraction_less(best, f)) best = f;
  }
  return best;
}

Bits random_bits(std::mt19937_64& rng, size_t n) {
  Bits s;
  s.reserve(n);
  for (size_t i = 0; i < n; ++i) s.push_back(rng() & 1 ? '1' : '0');
  return s;
}

}  // namespace

TEST_CASE("block_stats: forced examples") {
  BlockStats k1 = block_stats("0101", 1);
  CHECK(k1.n_blocks == 4);
  CHECK(k1.counts == std::vector<uint64_t>{2, 2});
  CHECK(k1.max_deviation == Fraction{0, 1});

  BlockStats k2 = block_stats("0101", 2);
  CHECK(k2.n_blocks == 2);
  CHECK(k2.counts == std::vector<uint64_t>{0, 2, 0, 0});
  CHECK(k2.max_deviation == Fraction{3, 4});

  CHECK_THROWS_AS(block_stats("01", 3), std::invalid_argument);
  CHECK_THROWS_AS(block_stats("0101", 0), std::invalid_argument);
  CHECK_THROWS_AS(block_stats("01x1", 1), std::invalid_argument);

  // trailing partial block is dropped
  BlockStats k3 = block_stats("0101010", 2);
  CHECK(k3.n_blocks == 3);
}

TEST_CASE("block_stats matches the naive recount") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    Bits s = random_bits(rng, 1 << 16);
    for (int k : {1, 2, 3, 7}) {
      BlockStats st = block_stats(s, k);
      CHECK(st.max_deviation == naive_max_deviation(s, k));
      uint64_t total = 0;
      for (uint64_t c : st.counts) total += c;
      CHECK(total == st.n_blocks);
    }
  }
}

TEST_CASE("find_monochromatic_ap: forced examples") {
  auto hit = find_monochromatic_ap("0101", 2);
  REQUIRE(hit.has_value());
  CHECK(hit->symbol == '0');
  CHECK(hit->start == 1);
  CHECK(hit->diff == 2);

  CHECK_FALSE(find_monochromatic_ap("01", 2).has_value());

  // length-1 progressions are trivially monochromatic
  auto single = find_monochromatic_ap("1", 1);
  REQUIRE(single.has_value());
  CHECK(single->symbol == '1');

  // the classical length-8 string with no monochromatic 3-progression
  CHECK_FALSE(find_monochromatic_ap("00110011", 3).has_value());
  CHECK_FALSE(find_monochromatic_ap("01100110", 3).has_value());
}

TEST_CASE("every 9-bit string holds a monochromatic 3-progression") {
  for (uint32_t v = 0; v < 512; ++v) {
    Bits s;
    for (int i = 8; i >= 0; --i) s.push_back((v >> i) & 1 ? '1' : '0');
    auto hit = find_monochromatic_ap(s, 3);
    REQUIRE(hit.has_value());
    // verify the reported progression
    for (int j = 0; j < 3; ++j) {
      CHECK(s[hit->start - 1 + size_t(j) * hit->diff] == hit->symbol);
    }
  }
}

TEST_CASE("reported progressions are lexicographically first") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Bits s = random_bits(rng, 20);
    auto hit = find_monochromatic_ap(s, 3);
    if (!hit) continue;
    for (size_t start = 1; start <= hit->start; ++start) {
      size_t max_diff = start == hit->start ? hit->diff - 1 : (s.size() - start) / 2;
      for (size_t diff = 1; diff <= max_diff; ++diff) {
        if (start + 2 * diff > s.size()) continue;
        bool mono = s[start - 1] == s[start - 1 + diff] &&
                    s[start - 1] == s[start - 1 + 2 * diff];
        CHECK_FALSE(mono);
      }
    }
  }
}
