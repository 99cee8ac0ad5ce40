#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "omega/machine.hpp"

namespace omega {

// Lex-sorted non-End instruction codewords usable within max_codeword_len
// bits. Jz magnitudes are enumerated up to the gamma length that fits.
struct Codeword {
  Bits bits;
  Instruction ins;
};
std::vector<Codeword> instruction_codewords(Machine m, int max_codeword_len);

// Number of instruction bodies (End excluded) of each exact bit length.
std::vector<uint64_t> body_counts(Machine m, int max_body_len);

// Yields exactly the valid programs of length <= max_len in canonical
// order: by length, then lexicographically. Generation is structural
// (codeword composition), never decode-filtering.
void for_each_valid(Machine m, int max_len,
                    const std::function<void(const Program&)>& fn);

uint64_t count_valid(Machine m, int max_len);

struct ProgramStatus {
  enum class Kind { Halted, ProvenNonHalting, Unknown };
  Kind kind = Kind::Unknown;
  // Halted
  Bits output;
  uint64_t steps = 0;
  // ProvenNonHalting
  NonHaltMethod method = NonHaltMethod::StateRevisit;
  // Unknown: budgets in force when classification gave up
  uint64_t step_budget_used = 0;
  uint64_t state_budget_used = 0;

  bool final_status() const { return kind != Kind::Unknown; }
  bool operator==(const ProgramStatus&) const = default;
};

// Halted if run halts within step_budget; ProvenNonHalting on a fault or
// a successful non-halting proof; Unknown otherwise. Deterministic in
// (program, budgets).
ProgramStatus classify(const Program& program, uint64_t step_budget,
                       uint64_t state_budget);

struct Record {
  Bits source;
  ProgramStatus status;
  bool operator==(const Record&) const = default;
};

struct Checkpoint {
  Machine machine = Machine::Full;
  int max_len = 0;
  uint64_t step_budget = 0;
  uint64_t state_budget = 0;
  std::vector<Record> records;  // canonical order, complete for max_len
};

// Classifies the whole frontier up to max_len. Final statuses from
// `resume` are copied unchanged; Unknowns are re-attempted with the new
// budgets. The result is independent of `workers`.
// Throws std::invalid_argument if resume's machine mismatches or its
// frontier exceeds max_len.
Checkpoint run_frontier(Machine m, int max_len, uint64_t step_budget,
                        uint64_t state_budget,
                        const Checkpoint* resume = nullptr, int workers = 1);

}  // namespace omega
