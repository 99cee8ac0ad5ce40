#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace omega {

// Arbitrary-precision unsigned integer, little-endian 64-bit limbs.
// Only the operations the dyadic accumulator needs: add, subtract,
// compare, shifts, small multiply/divide. Nothing here ever rounds.
class BigUint {
public:
  BigUint() = default;
  explicit BigUint(uint64_t v) {
    if (v != 0) limbs_.push_back(v);
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1) == 0; }

  // Index of the highest set bit plus one; 0 for zero.
  size_t bit_length() const;
  bool bit(size_t i) const;
  size_t trailing_zeros() const;  // undefined for zero (returns 0)

  int compare(const BigUint& o) const;
  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator!=(const BigUint& o) const { return compare(o) != 0; }
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }
  bool operator>(const BigUint& o) const { return compare(o) > 0; }
  bool operator>=(const BigUint& o) const { return compare(o) >= 0; }

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);  // requires *this >= o
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

  BigUint operator<<(size_t k) const;
  BigUint operator>>(size_t k) const;

  BigUint mul_small(uint64_t m) const;
  // Quotient in place, remainder returned. d must be nonzero.
  uint32_t divmod_small(uint32_t d);

  // True if any of the k lowest bits is set.
  bool has_low_bits(size_t k) const;

  // Fits-in-u64 convenience for tests and counters; requires bit_length() <= 64.
  uint64_t to_u64() const;

  std::string to_decimal() const;

private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
  std::vector<uint64_t> limbs_;
};

}  // namespace omega
