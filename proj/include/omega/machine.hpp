#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace omega {

// Bit strings are ASCII '0'/'1', first-read bit first. This is also the
// canonical textual form used by every file format and CLI surface.
using Bits = std::string;

bool is_bits(const Bits& s);

// The fixed self-delimiting universal register machine.
//
// Four unbounded counters, relative conditional jumps, a one-way output
// tape. Instruction codewords (prefix-free, Kraft sum 1 over opcodes):
//
//   Inc r   "00" rr
//   Dec r   "01" rr          (Dec of a zero register is a no-op)
//   Jz r d  "100" rr s g(|d|)  s: 0 = forward, 1 = backward; g = Elias gamma
//   Out b   "101" b
//   End     "11"
//
// A valid program is any codeword sequence whose single End comes last;
// the set of valid programs is therefore prefix-free.
//
// The jump-free machine variant uses the same encoding minus Jz; its
// valid programs are exactly the Jz-free ones.
enum class Machine { Full, JumpFree };

const char* machine_name(Machine m);
std::optional<Machine> machine_from_name(const std::string& s);

struct Instruction {
  enum class Op : uint8_t { Inc, Dec, Out, Jz, End };
  Op op = Op::End;
  uint8_t reg = 0;     // Inc/Dec/Jz, 0..3
  uint8_t bit = 0;     // Out
  int64_t offset = 0;  // Jz, never 0

  bool operator==(const Instruction&) const = default;

  static Instruction inc(uint8_t r) { return {Op::Inc, r, 0, 0}; }
  static Instruction dec(uint8_t r) { return {Op::Dec, r, 0, 0}; }
  static Instruction out(uint8_t b) { return {Op::Out, 0, b, 0}; }
  static Instruction jz(uint8_t r, int64_t off) { return {Op::Jz, r, 0, off}; }
  static Instruction end() { return {Op::End, 0, 0, 0}; }
};

struct Program {
  Bits source;
  std::vector<Instruction> code;
};

// Elias gamma code of n >= 1: floor(log2 n) zeros, then n in binary.
Bits gamma_encode(uint64_t n);
size_t gamma_length(uint64_t n);

Bits encode_instruction(const Instruction& ins);
// Requires: End last and exactly once, regs in 0..3, offsets nonzero.
// Throws std::invalid_argument otherwise.
Bits encode(const std::vector<Instruction>& code);

enum class DecodeReason { Truncated, TrailingBits, BadOffsetZero };

struct DecodeError {
  size_t position = 0;  // first missing or first unconsumed bit
  DecodeReason reason = DecodeReason::Truncated;
};

using DecodeResult = std::variant<Program, DecodeError>;

// Total and deterministic; consumes exactly all of `bits` on success.
DecodeResult decode(const Bits& bits);
std::optional<Program> decode_ok(const Bits& bits);

// Valid for the machine variant: full accepts everything decodable,
// jump-free additionally forbids Jz.
bool valid_for(Machine m, const Program& p);

struct MachineState {
  int64_t pc = 0;
  std::array<uint64_t, 4> regs{};  // bounded by step count, so u64 is exact
  Bits output;
  uint64_t steps = 0;
};

enum class StepOutcome { Running, Halted, Fault };

// Executes one instruction, advancing the state in place. The executed
// instruction counts toward `steps`, including a terminal End or a
// faulting jump. Requires state.pc within code bounds.
StepOutcome step(MachineState& state, const Program& program);

struct StateFingerprint {
  int64_t pc = 0;
  std::array<uint64_t, 4> regs{};
  uint64_t output_len = 0;
  uint64_t steps = 0;
};

struct RunResult {
  enum class Kind { Halted, Fault, BudgetExhausted };
  Kind kind = Kind::BudgetExhausted;
  Bits output;         // Halted
  uint64_t steps = 0;  // Halted / Fault
  StateFingerprint fingerprint;  // BudgetExhausted
};

// Runs from the initial state (pc 0, registers 0, empty output) for at
// most step_budget steps.
RunResult run(const Program& program, uint64_t step_budget);

enum class NonHaltMethod { StateRevisit, UnreachableEnd, Fault };

const char* nonhalt_method_name(NonHaltMethod m);
std::optional<NonHaltMethod> nonhalt_method_from_name(const std::string& s);

// Sound non-halting proofs only:
//   state-revisit: an exact (pc, regs) pair recurred; determinism makes
//                  the loop eternal and End is never executed.
//   fault:         execution faulted; a faulting program never halts.
//   unreachable-end: End is unreachable in the over-approximated jump
//                  graph. Jz targets contribute both successors, except
//                  that a register no Inc ever touches is identically
//                  zero, so Jz on it is always taken.
// At most state_budget fingerprints are stored for the revisit search,
// which runs before the static check so revisits win the method label.
std::optional<NonHaltMethod> prove_nonhalting(const Program& program,
                                              uint64_t state_budget);

}  // namespace omega
