#pragma once

#include <cstdint>

#include "omega/dyadic.hpp"
#include "omega/machine.hpp"

namespace omega {

enum class PrefixTrust { CertifiedByArtifact, ExternallyAsserted };

// N leading binary digits of Omega after the radix point. When correct,
// its truncation w satisfies w <= Omega < w + 2^-N.
struct OmegaPrefix {
  Bits bits;
  PrefixTrust trust = PrefixTrust::ExternallyAsserted;
};

Dyadic omega_truncation(const OmegaPrefix& prefix);

// Round r grants every still-running pool program r*steps_per_round
// further steps. The pool covers all valid programs up to
// max(pool_max_len, |prefix|); rounds exhausting without a verdict give
// Undecided — the expected outcome whenever the threshold needs more
// halting mass than a desk-scale pool can supply.
struct OracleSchedule {
  uint64_t steps_per_round = 1024;
  int rounds = 6;
  int pool_max_len = 20;
};

struct OracleDecision {
  enum class Kind { Halts, NeverHalts, Undecided, InvalidPrefix };
  Kind kind = Kind::Undecided;
  uint64_t steps_used = 0;
  int rounds_used = 0;
};

// Dovetails the pool, accumulating exact halted mass L, and decides at
// round barriers, in order:
//   Halts          the queried program itself halted;
//   InvalidPrefix  L >= w + 2^-N, impossible under a correct prefix;
//   NeverHalts     L >= w while the query has not halted: one more halt
//                  of a <=N-bit program would push Omega past w + 2^-N.
// Requires |program.source| <= |prefix.bits| (throws std::invalid_argument).
OracleDecision decide_halting(Machine m, const OmegaPrefix& prefix,
                              const Program& program,
                              const OracleSchedule& schedule = {});

}  // namespace omega
