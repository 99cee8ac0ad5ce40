#include "omega/biguint.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace omega {

size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

bool BigUint::bit(size_t i) const {
  size_t w = i / 64, b = i % 64;
  if (w >= limbs_.size()) return false;
  return (limbs_[w] >> b) & 1;
}

size_t BigUint::trailing_zeros() const {
  for (size_t w = 0; w < limbs_.size(); ++w) {
    if (limbs_[w] != 0) return 64 * w + std::countr_zero(limbs_[w]);
  }
  return 0;
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
  uint64_t carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t b = i < o.limbs_.size() ? o.limbs_[i] : 0;
    if (b == 0 && carry == 0) continue;
    uint64_t s = limbs_[i] + b;
    uint64_t c1 = s < limbs_[i];
    uint64_t s2 = s + carry;
    uint64_t c2 = s2 < s;
    limbs_[i] = s2;
    carry = c1 | c2;
  }
  if (carry) limbs_.push_back(1);
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (*this < o) throw std::underflow_error("BigUint subtraction underflow");
  uint64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t b = i < o.limbs_.size() ? o.limbs_[i] : 0;
    uint64_t d = limbs_[i] - b;
    uint64_t b1 = d > limbs_[i];
    uint64_t d2 = d - borrow;
    uint64_t b2 = d2 > d;
    limbs_[i] = d2;
    borrow = b1 | b2;
  }
  trim();
  return *this;
}

BigUint BigUint::operator<<(size_t k) const {
  if (is_zero() || k == 0) {
    BigUint r = *this;
    return r;
  }
  size_t words = k / 64, bits = k % 64;
  BigUint r;
  r.limbs_.assign(words, 0);
  if (bits == 0) {
    r.limbs_.insert(r.limbs_.end(), limbs_.begin(), limbs_.end());
  } else {
    uint64_t carry = 0;
    for (uint64_t limb : limbs_) {
      r.limbs_.push_back((limb << bits) | carry);
      carry = limb >> (64 - bits);
    }
    if (carry) r.limbs_.push_back(carry);
  }
  return r;
}

BigUint BigUint::operator>>(size_t k) const {
  size_t words = k / 64, bits = k % 64;
  if (words >= limbs_.size()) return BigUint();
  BigUint r;
  r.limbs_.assign(limbs_.begin() + words, limbs_.end());
  if (bits != 0) {
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
      uint64_t hi = i + 1 < r.limbs_.size() ? r.limbs_[i + 1] : 0;
      r.limbs_[i] = (r.limbs_[i] >> bits) | (hi << (64 - bits));
    }
  }
  r.trim();
  return r;
}

BigUint BigUint::mul_small(uint64_t m) const {
  if (m == 0 || is_zero()) return BigUint();
  BigUint r;
  unsigned __int128 carry = 0;
  for (uint64_t limb : limbs_) {
    unsigned __int128 p = (unsigned __int128)limb * m + carry;
    r.limbs_.push_back((uint64_t)p);
    carry = p >> 64;
  }
  if (carry) r.limbs_.push_back((uint64_t)carry);
  return r;
}

uint32_t BigUint::divmod_small(uint32_t d) {
  if (d == 0) throw std::domain_error("BigUint division by zero");
  unsigned __int128 rem = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    unsigned __int128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = (uint64_t)(cur / d);
    rem = cur % d;
  }
  trim();
  return (uint32_t)rem;
}

bool BigUint::has_low_bits(size_t k) const {
  size_t words = k / 64, bits = k % 64;
  for (size_t i = 0; i < std::min(words, limbs_.size()); ++i) {
    if (limbs_[i] != 0) return true;
  }
  if (bits != 0 && words < limbs_.size()) {
    if (limbs_[words] & ((uint64_t(1) << bits) - 1)) return true;
  }
  return false;
}

uint64_t BigUint::to_u64() const {
  if (bit_length() > 64) throw std::overflow_error("BigUint does not fit in u64");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  BigUint t = *this;
  std::string s;
  while (!t.is_zero()) {
    uint32_t digit = t.divmod_small(10);
    s.push_back(char('0' + digit));
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace omega
