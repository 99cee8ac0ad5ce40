#include "omega/oracle.hpp"

#include <stdexcept>
#include <vector>

#include "omega/enumerate.hpp"

namespace omega {

Dyadic omega_truncation(const OmegaPrefix& prefix) {
  Dyadic v;
  for (size_t i = 0; i < prefix.bits.size(); ++i) {
    if (prefix.bits[i] == '1') v += Dyadic::pow2_inv(i + 1);
  }
  return v;
}

namespace {

struct PoolEntry {
  Program program;
  MachineState state;
  bool live = true;
};

}  // namespace

OracleDecision decide_halting(Machine m, const OmegaPrefix& prefix,
                              const Program& program,
                              const OracleSchedule& schedule) {
  if (!is_bits(prefix.bits)) throw std::invalid_argument("prefix is not a bit string");
  const size_t n = prefix.bits.size();
  if (program.source.size() > n)
    throw std::invalid_argument("program longer than the trusted prefix");

  const Dyadic omega_lo = omega_truncation(prefix);
  const Dyadic omega_hi = omega_lo + Dyadic::pow2_inv(n);

  const int pool_len = std::max(schedule.pool_max_len, int(n));
  std::vector<PoolEntry> pool;
  pool.reserve(count_valid(m, pool_len));
  size_t query = SIZE_MAX;
  for_each_valid(m, pool_len, [&](const Program& p) {
    if (p.source == program.source) query = pool.size();
    pool.push_back({p, {}, true});
  });
  if (query == SIZE_MAX)
    throw std::invalid_argument("program is not valid for this machine");

  Dyadic halted;  // exact halting mass found so far; only ever grows
  bool query_halted = false;
  uint64_t steps_used = 0;

  for (int round = 1; round <= schedule.rounds; ++round) {
    uint64_t grant = uint64_t(round) * schedule.steps_per_round;
    for (size_t i = 0; i < pool.size(); ++i) {
      PoolEntry& e = pool[i];
      if (!e.live) continue;
      for (uint64_t s = 0; s < grant; ++s) {
        StepOutcome o = step(e.state, e.program);
        ++steps_used;
        if (o == StepOutcome::Halted) {
          halted += Dyadic::pow2_inv(e.program.source.size());
          e.live = false;
          if (i == query) query_halted = true;
          break;
        }
        if (o == StepOutcome::Fault) {
          e.live = false;  // never halts, contributes no mass
          break;
        }
      }
    }
    // Decisions happen only at round barriers, so they are independent
    // of execution order within the round.
    if (query_halted)
      return {OracleDecision::Kind::Halts, steps_used, round};
    if (halted >= omega_hi)
      return {OracleDecision::Kind::InvalidPrefix, steps_used, round};
    if (halted >= omega_lo)
      return {OracleDecision::Kind::NeverHalts, steps_used, round};
  }
  return {OracleDecision::Kind::Undecided, steps_used, schedule.rounds};
}

}  // namespace omega
