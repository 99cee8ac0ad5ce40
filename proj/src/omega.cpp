#include "omega/omega.hpp"

#include <stdexcept>

namespace omega {

DomainMass total_domain_mass(Machine m) {
  return m == Machine::Full ? DomainMass{1, 1} : DomainMass{2, 3};
}

Dyadic valid_mass(Machine m, int max_len) {
  Dyadic mass;
  if (max_len < 2) return mass;
  std::vector<uint64_t> c = body_counts(m, max_len - 2);
  for (size_t body = 0; body < c.size(); ++body) {
    if (c[body] != 0) mass += Dyadic::fraction(c[body], body + 2);
  }
  return mass;
}

Dyadic halted_mass(const Checkpoint& ck) {
  Dyadic mass;
  for (const Record& r : ck.records) {
    if (r.status.kind == ProgramStatus::Kind::Halted)
      mass += Dyadic::pow2_inv(r.source.size());
  }
  return mass;
}

Dyadic unknown_mass(const Checkpoint& ck) {
  Dyadic mass;
  for (const Record& r : ck.records) {
    if (r.status.kind == ProgramStatus::Kind::Unknown)
      mass += Dyadic::pow2_inv(r.source.size());
  }
  return mass;
}

Dyadic residual_bound(const Checkpoint& ck, size_t precision) {
  DomainMass total = total_domain_mass(ck.machine);
  Dyadic enumerated = valid_mass(ck.machine, ck.max_len);
  // tail = total - enumerated = (total.num * 2^e - total.den * n) / (total.den * 2^e)
  BigUint numerator = BigUint(total.num) << enumerated.exp();
  numerator -= enumerated.num().mul_small(total.den);
  Dyadic tail;
  if (total.den == 1) {
    tail = Dyadic(std::move(numerator), enumerated.exp());
  } else {
    tail = ceil_to_dyadic(numerator, uint32_t(total.den), enumerated.exp(),
                          precision);
  }
  return unknown_mass(ck) + tail;
}

Bits certify_bits(const Dyadic& lower, const Dyadic& residual,
                  size_t max_places) {
  Dyadic upper = lower + residual;
  Bits bits;
  for (size_t j = 1; j <= max_places; ++j) {
    if (lower.floor_shift(j) != upper.floor_shift(j)) break;
    bits.push_back(char('0' + lower.frac_digit(j)));
  }
  return bits;
}

Bits ones_run_certified(const Dyadic& lower, const Dyadic& upper) {
  if (upper >= Dyadic::one()) return "";
  Bits bits;
  for (size_t i = 1; lower.frac_digit(i) == 1; ++i) bits.push_back('1');
  return bits;
}

CertifiedPrefix certify_from_checkpoint(const Checkpoint& ck,
                                        size_t precision) {
  CertifiedPrefix cp;
  cp.lower = halted_mass(ck);
  cp.residual = residual_bound(ck, precision);
  cp.bits = certify_bits(cp.lower, cp.residual, precision);
  cp.machine = ck.machine;
  cp.max_len = ck.max_len;
  return cp;
}

KraftCheck kraft_check(Machine m, int max_len) {
  DomainMass total = total_domain_mass(m);
  Dyadic prev;
  for (int n = 0; n <= max_len; ++n) {
    Dyadic mass = valid_mass(m, n);
    if (mass < prev) return {false, n};
    if (mass.compare_fraction(total.num, total.den) > 0) return {false, n};
    prev = std::move(mass);
  }
  return {true, -1};
}

std::string format_omega_report(const Checkpoint& ck, size_t precision) {
  Dyadic lower = halted_mass(ck);
  Dyadic residual = residual_bound(ck, precision);
  Bits certified = certify_bits(lower, residual, precision);
  std::string out;
  out += "lower=" + lower.to_binary(precision) + "\n";
  out += "residual<=" + residual.round_up(precision).to_binary(precision) + "\n";
  out += "certified=" + (certified.empty() ? std::string("(none)") : certified) + "\n";
  return out;
}

}  // namespace omega
