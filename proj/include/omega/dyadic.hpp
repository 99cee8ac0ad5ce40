#pragma once

#include <cstdint>
#include <string>

#include "omega/biguint.hpp"

namespace omega {

// Exact non-negative dyadic rational num / 2^exp.
// Canonical form: num is odd, or the value is an integer and exp == 0.
// Addition, subtraction and comparison never round; every halting-mass
// accumulation in the workbench goes through this type.
class Dyadic {
public:
  Dyadic() = default;  // zero
  Dyadic(BigUint num, size_t exp) : num_(std::move(num)), exp_(exp) { canonicalize(); }

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return Dyadic(BigUint(1), 0); }
  // 2^-k
  static Dyadic pow2_inv(size_t k) { return Dyadic(BigUint(1), k); }
  // n / 2^k
  static Dyadic fraction(uint64_t n, size_t k) { return Dyadic(BigUint(n), k); }

  const BigUint& num() const { return num_; }
  size_t exp() const { return exp_; }
  bool is_zero() const { return num_.is_zero(); }

  int compare(const Dyadic& o) const;
  bool operator==(const Dyadic& o) const { return compare(o) == 0; }
  bool operator!=(const Dyadic& o) const { return compare(o) != 0; }
  bool operator<(const Dyadic& o) const { return compare(o) < 0; }
  bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
  bool operator>(const Dyadic& o) const { return compare(o) > 0; }
  bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

  Dyadic& operator+=(const Dyadic& o);
  Dyadic& operator-=(const Dyadic& o);  // requires *this >= o
  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }

  // floor(value * 2^j)
  BigUint floor_shift(size_t j) const;
  // i-th binary digit after the radix point, i >= 1
  int frac_digit(size_t i) const;
  BigUint integer_part() const { return num_ >> exp_; }

  // Compare against the rational p/q (q > 0), exactly.
  int compare_fraction(uint64_t p, uint64_t q) const;

  // "<int>.<places binary digits>"; the digits are truncated, so the
  // printed value is a lower bound of the true one.
  std::string to_binary(size_t places) const;
  // Digits after the point only, truncated to `places`.
  std::string frac_binary(size_t places) const;

  // Smallest dyadic with exponent <= places that is >= *this.
  Dyadic round_up(size_t places) const;

private:
  void canonicalize();
  BigUint num_;
  size_t exp_ = 0;
};

// Exact value of n / (d * 2^e) rounded up to a dyadic with exponent
// <= places. Used for the non-dyadic tail of the jump-free machine,
// where d = 3; rounding up preserves upper-bound semantics.
Dyadic ceil_to_dyadic(const BigUint& n, uint32_t d, size_t e, size_t places);

}  // namespace omega
