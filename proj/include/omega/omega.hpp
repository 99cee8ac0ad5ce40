#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "omega/dyadic.hpp"
#include "omega/enumerate.hpp"

namespace omega {

// Kraft mass of the whole valid-program set, as an exact rational.
// Bodies form a free monoid over the instruction codewords, so the mass
// is end_mass / (1 - s) with s the summed codeword mass: 1 for the full
// machine (s = 3/4), 2/3 for the jump-free one (s = 5/8).
struct DomainMass {
  uint64_t num = 1;
  uint64_t den = 1;
};
DomainMass total_domain_mass(Machine m);

// Exact sum of 2^-|p| over all valid programs of length <= max_len,
// computed from per-length counts.
Dyadic valid_mass(Machine m, int max_len);

// Exact sum of 2^-|p| over Halted records.
Dyadic halted_mass(const Checkpoint& ck);
// Exact sum of 2^-|p| over Unknown records.
Dyadic unknown_mass(const Checkpoint& ck);

// Upper bound on Omega minus halted_mass: in-frontier unknown mass plus
// the tail beyond the frontier (total - valid_mass), the latter rounded
// up to `precision` fractional bits when it is not dyadic.
Dyadic residual_bound(const Checkpoint& ck, size_t precision = 128);

// Longest prefix b1..bj with floor(lower*2^j) == floor((lower+residual)*2^j);
// every real in [lower, lower+residual] then starts 0.b1..bj. A zero
// residual certifies `max_places` digits of lower.
Bits certify_bits(const Dyadic& lower, const Dyadic& residual,
                  size_t max_places = 128);

// The weaker initial-run-of-ones rule, kept as a cross-check: if lower
// starts with k ones and upper stays below 1, those k bits are exact.
// Never certifies more than certify_bits.
Bits ones_run_certified(const Dyadic& lower, const Dyadic& upper);

struct CertifiedPrefix {
  Bits bits;
  Dyadic lower;
  Dyadic residual;
  Machine machine = Machine::Full;
  int max_len = 0;
};
CertifiedPrefix certify_from_checkpoint(const Checkpoint& ck,
                                        size_t precision = 128);

struct KraftCheck {
  bool pass = true;
  int violation_len = -1;
};
// valid_mass must be non-decreasing in n and never exceed the domain
// total. A violation is an implementation bug, not a domain error.
KraftCheck kraft_check(Machine m, int max_len);

// Normative three-line report: lower=, residual<=, certified=.
std::string format_omega_report(const Checkpoint& ck, size_t precision = 128);

}  // namespace omega
