#include "omega/machine.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace omega {

bool is_bits(const Bits& s) {
  for (char c : s) {
    if (c != '0' && c != '1') return false;
  }
  return true;
}

const char* machine_name(Machine m) {
  return m == Machine::Full ? "full" : "jumpfree";
}

std::optional<Machine> machine_from_name(const std::string& s) {
  if (s == "full") return Machine::Full;
  if (s == "jumpfree") return Machine::JumpFree;
  return std::nullopt;
}

size_t gamma_length(uint64_t n) {
  return 2 * (63 - std::countl_zero(n)) + 1;
}

Bits gamma_encode(uint64_t n) {
  if (n == 0) throw std::invalid_argument("gamma code starts at 1");
  int k = 63 - std::countl_zero(n);
  Bits s(k, '0');
  for (int i = k; i >= 0; --i) s.push_back((n >> i) & 1 ? '1' : '0');
  return s;
}

Bits encode_instruction(const Instruction& ins) {
  switch (ins.op) {
    case Instruction::Op::Inc:
    case Instruction::Op::Dec: {
      if (ins.reg > 3) throw std::invalid_argument("register out of range");
      Bits s = ins.op == Instruction::Op::Inc ? "00" : "01";
      s.push_back(ins.reg & 2 ? '1' : '0');
      s.push_back(ins.reg & 1 ? '1' : '0');
      return s;
    }
    case Instruction::Op::Out:
      if (ins.bit > 1) throw std::invalid_argument("output bit out of range");
      return ins.bit ? "1011" : "1010";
    case Instruction::Op::Jz: {
      if (ins.reg > 3) throw std::invalid_argument("register out of range");
      if (ins.offset == 0) throw std::invalid_argument("zero jump offset");
      Bits s = "100";
      s.push_back(ins.reg & 2 ? '1' : '0');
      s.push_back(ins.reg & 1 ? '1' : '0');
      s.push_back(ins.offset > 0 ? '0' : '1');
      uint64_t mag = ins.offset > 0 ? uint64_t(ins.offset) : uint64_t(-ins.offset);
      s += gamma_encode(mag);
      return s;
    }
    case Instruction::Op::End:
      return "11";
  }
  throw std::logic_error("bad opcode");
}

Bits encode(const std::vector<Instruction>& code) {
  if (code.empty() || code.back().op != Instruction::Op::End)
    throw std::invalid_argument("code must end with End");
  for (size_t i = 0; i + 1 < code.size(); ++i) {
    if (code[i].op == Instruction::Op::End)
      throw std::invalid_argument("End before the last instruction");
  }
  Bits s;
  for (const Instruction& ins : code) s += encode_instruction(ins);
  return s;
}

namespace {

// Reads codewords off `bits`; pos is the cursor.
struct Reader {
  const Bits& bits;
  size_t pos = 0;
  bool eof() const { return pos >= bits.size(); }
  std::optional<int> next() {
    if (eof()) return std::nullopt;
    return bits[pos++] == '1' ? 1 : 0;
  }
};

std::optional<uint64_t> gamma_decode(Reader& r) {
  size_t zeros = 0;
  for (;;) {
    auto b = r.next();
    if (!b) return std::nullopt;
    if (*b == 1) break;
    ++zeros;
  }
  uint64_t v = 1;
  for (size_t i = 0; i < zeros; ++i) {
    auto b = r.next();
    if (!b) return std::nullopt;
    v = (v << 1) | uint64_t(*b);
  }
  return v;
}

}  // namespace

DecodeResult decode(const Bits& bits) {
  Reader r{bits};
  std::vector<Instruction> code;
  for (;;) {
    size_t start = r.pos;
    auto b0 = r.next();
    if (!b0) return DecodeError{bits.size(), DecodeReason::Truncated};
    if (*b0 == 0) {
      // 0? rr : Inc or Dec
      auto b1 = r.next();
      auto rh = r.next();
      auto rl = r.next();
      if (!b1 || !rh || !rl) return DecodeError{bits.size(), DecodeReason::Truncated};
      uint8_t reg = uint8_t(*rh * 2 + *rl);
      code.push_back(*b1 == 0 ? Instruction::inc(reg) : Instruction::dec(reg));
    } else {
      auto b1 = r.next();
      if (!b1) return DecodeError{bits.size(), DecodeReason::Truncated};
      if (*b1 == 1) {
        // End: must be final and consume everything
        code.push_back(Instruction::end());
        if (!r.eof()) return DecodeError{r.pos, DecodeReason::TrailingBits};
        return Program{bits, std::move(code)};
      }
      auto b2 = r.next();
      if (!b2) return DecodeError{bits.size(), DecodeReason::Truncated};
      if (*b2 == 1) {
        // Out b
        auto ob = r.next();
        if (!ob) return DecodeError{bits.size(), DecodeReason::Truncated};
        code.push_back(Instruction::out(uint8_t(*ob)));
      } else {
        // Jz r s gamma
        auto rh = r.next();
        auto rl = r.next();
        auto sign = r.next();
        if (!rh || !rl || !sign) return DecodeError{bits.size(), DecodeReason::Truncated};
        auto mag = gamma_decode(r);
        if (!mag) return DecodeError{bits.size(), DecodeReason::Truncated};
        if (*mag == 0) return DecodeError{start, DecodeReason::BadOffsetZero};
        int64_t off = *sign ? -int64_t(*mag) : int64_t(*mag);
        code.push_back(Instruction::jz(uint8_t(*rh * 2 + *rl), off));
      }
    }
  }
}

std::optional<Program> decode_ok(const Bits& bits) {
  DecodeResult r = decode(bits);
  if (auto* p = std::get_if<Program>(&r)) return std::move(*p);
  return std::nullopt;
}

bool valid_for(Machine m, const Program& p) {
  if (m == Machine::Full) return true;
  for (const Instruction& ins : p.code) {
    if (ins.op == Instruction::Op::Jz) return false;
  }
  return true;
}

StepOutcome step(MachineState& state, const Program& program) {
  const Instruction& ins = program.code[size_t(state.pc)];
  ++state.steps;
  switch (ins.op) {
    case Instruction::Op::Inc:
      ++state.regs[ins.reg];
      ++state.pc;
      return StepOutcome::Running;
    case Instruction::Op::Dec:
      if (state.regs[ins.reg] > 0) --state.regs[ins.reg];
      ++state.pc;
      return StepOutcome::Running;
    case Instruction::Op::Out:
      state.output.push_back(ins.bit ? '1' : '0');
      ++state.pc;
      return StepOutcome::Running;
    case Instruction::Op::Jz: {
      if (state.regs[ins.reg] == 0) {
        int64_t target = state.pc + ins.offset;
        if (target < 0 || target >= int64_t(program.code.size()))
          return StepOutcome::Fault;
        state.pc = target;
      } else {
        ++state.pc;
      }
      return StepOutcome::Running;
    }
    case Instruction::Op::End:
      return StepOutcome::Halted;
  }
  throw std::logic_error("bad opcode");
}

namespace {

StateFingerprint fingerprint(const MachineState& s) {
  return {s.pc, s.regs, s.output.size(), s.steps};
}

}  // namespace

RunResult run(const Program& program, uint64_t step_budget) {
  MachineState s;
  for (uint64_t i = 0; i < step_budget; ++i) {
    StepOutcome o = step(s, program);
    if (o == StepOutcome::Halted)
      return {RunResult::Kind::Halted, s.output, s.steps, {}};
    if (o == StepOutcome::Fault)
      return {RunResult::Kind::Fault, {}, s.steps, {}};
  }
  return {RunResult::Kind::BudgetExhausted, {}, s.steps, fingerprint(s)};
}

const char* nonhalt_method_name(NonHaltMethod m) {
  switch (m) {
    case NonHaltMethod::StateRevisit: return "revisit";
    case NonHaltMethod::UnreachableEnd: return "unreachable";
    case NonHaltMethod::Fault: return "fault";
  }
  return "?";
}

std::optional<NonHaltMethod> nonhalt_method_from_name(const std::string& s) {
  if (s == "revisit") return NonHaltMethod::StateRevisit;
  if (s == "unreachable") return NonHaltMethod::UnreachableEnd;
  if (s == "fault") return NonHaltMethod::Fault;
  return std::nullopt;
}

namespace {

struct StateKey {
  int64_t pc;
  std::array<uint64_t, 4> regs;
  bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
  size_t operator()(const StateKey& k) const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ uint64_t(k.pc);
    for (uint64_t r : k.regs) {
      h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return size_t(h);
  }
};

bool end_unreachable(const Program& p) {
  const size_t n = p.code.size();
  bool incremented[4] = {false, false, false, false};
  for (const Instruction& ins : p.code) {
    if (ins.op == Instruction::Op::Inc) incremented[ins.reg] = true;
  }
  std::vector<char> seen(n, 0);
  std::vector<size_t> stack{0};
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    if (seen[i]) continue;
    seen[i] = 1;
    const Instruction& ins = p.code[i];
    if (ins.op == Instruction::Op::End) continue;
    if (ins.op == Instruction::Op::Jz) {
      int64_t t = int64_t(i) + ins.offset;
      if (t >= 0 && t < int64_t(n)) stack.push_back(size_t(t));
      // A register never incremented stays zero, so the jump is always
      // taken and the fall-through edge does not exist.
      if (incremented[ins.reg]) stack.push_back(i + 1);
    } else {
      stack.push_back(i + 1);
    }
  }
  return !seen[n - 1];
}

}  // namespace

std::optional<NonHaltMethod> prove_nonhalting(const Program& program,
                                              uint64_t state_budget) {
  std::unordered_set<StateKey, StateKeyHash> visited;
  MachineState s;
  visited.insert({s.pc, s.regs});
  for (;;) {
    StepOutcome o = step(s, program);
    if (o == StepOutcome::Fault) return NonHaltMethod::Fault;
    if (o == StepOutcome::Halted) break;  // halts, nothing to prove
    StateKey key{s.pc, s.regs};
    if (visited.contains(key)) return NonHaltMethod::StateRevisit;
    if (visited.size() >= state_budget) break;  // fingerprint budget spent
    visited.insert(key);
  }
  if (end_unreachable(program)) return NonHaltMethod::UnreachableEnd;
  return std::nullopt;
}

}  // namespace omega
