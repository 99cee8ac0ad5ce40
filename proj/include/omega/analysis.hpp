#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omega/machine.hpp"

namespace omega {

// Exact non-negative fraction for deviation reporting; never rounded.
struct Fraction {
  uint64_t num = 0;
  uint64_t den = 1;
  bool operator==(const Fraction&) const = default;
};
Fraction reduced(uint64_t num, uint64_t den);
// a/b < c/d, exact
bool fraction_less(const Fraction& a, const Fraction& b);
std::string to_string(const Fraction& f);

struct BlockStats {
  int k = 1;
  uint64_t n_blocks = 0;
  std::vector<uint64_t> counts;  // indexed by block value, 2^k entries
  Fraction max_deviation;        // max over blocks of |count/n - 2^-k|
};

// Counts consecutive non-overlapping k-bit blocks (the classical
// normality statistic). Requires 1 <= k <= 24 and |bits| >= k.
BlockStats block_stats(const Bits& bits, int k);

struct ApHit {
  char symbol = '0';
  size_t start = 0;  // 1-based
  size_t diff = 0;   // >= 1
};

// Lexicographically first (start, difference) monochromatic arithmetic
// progression of `length` positions; van der Waerden guarantees one for
// every sufficiently long string.
std::optional<ApHit> find_monochromatic_ap(const Bits& bits, int length);

}  // namespace omega
