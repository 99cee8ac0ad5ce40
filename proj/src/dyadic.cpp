#include "omega/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

namespace omega {

void Dyadic::canonicalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  size_t tz = num_.trailing_zeros();
  size_t strip = std::min(tz, exp_);
  if (strip > 0) {
    num_ = num_ >> strip;
    exp_ -= strip;
  }
}

int Dyadic::compare(const Dyadic& o) const {
  size_t e = std::max(exp_, o.exp_);
  BigUint a = num_ << (e - exp_);
  BigUint b = o.num_ << (e - o.exp_);
  return a.compare(b);
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
  size_t e = std::max(exp_, o.exp_);
  BigUint a = num_ << (e - exp_);
  a += o.num_ << (e - o.exp_);
  num_ = std::move(a);
  exp_ = e;
  canonicalize();
  return *this;
}

Dyadic& Dyadic::operator-=(const Dyadic& o) {
  size_t e = std::max(exp_, o.exp_);
  BigUint a = num_ << (e - exp_);
  a -= o.num_ << (e - o.exp_);
  num_ = std::move(a);
  exp_ = e;
  canonicalize();
  return *this;
}

BigUint Dyadic::floor_shift(size_t j) const {
  if (j >= exp_) return num_ << (j - exp_);
  return num_ >> (exp_ - j);
}

int Dyadic::frac_digit(size_t i) const {
  if (i == 0 || i > exp_) return 0;
  return num_.bit(exp_ - i) ? 1 : 0;
}

int Dyadic::compare_fraction(uint64_t p, uint64_t q) const {
  BigUint lhs = num_.mul_small(q);
  BigUint rhs = BigUint(p) << exp_;
  return lhs.compare(rhs);
}

std::string Dyadic::to_binary(size_t places) const {
  std::string s = integer_part().to_decimal();
  s.push_back('.');
  s += frac_binary(places);
  return s;
}

std::string Dyadic::frac_binary(size_t places) const {
  std::string s;
  s.reserve(places);
  for (size_t i = 1; i <= places; ++i) s.push_back(char('0' + frac_digit(i)));
  return s;
}

Dyadic Dyadic::round_up(size_t places) const {
  if (exp_ <= places) return *this;
  BigUint q = num_ >> (exp_ - places);
  if (num_.has_low_bits(exp_ - places)) q += BigUint(1);
  return Dyadic(std::move(q), places);
}

Dyadic ceil_to_dyadic(const BigUint& n, uint32_t d, size_t e, size_t places) {
  if (d == 0) throw std::domain_error("zero denominator");
  // ceil(n * 2^places / (d * 2^e)), then divide back by 2^places.
  if (places >= e) {
    BigUint m = n << (places - e);
    uint32_t rem = m.divmod_small(d);
    if (rem != 0) m += BigUint(1);
    return Dyadic(std::move(m), places);
  }
  // ceil(a/(b*c)) == ceil(ceil(a/b)/c)
  BigUint m = n;
  uint32_t rem = m.divmod_small(d);
  if (rem != 0) m += BigUint(1);
  size_t t = e - places;
  BigUint q = m >> t;
  if (m.has_low_bits(t)) q += BigUint(1);
  return Dyadic(std::move(q), places);
}

}  // namespace omega
