#include <stdexcept>
#include <unordered_set>

#include "doctest.h"
#include "omega/enumerate.hpp"
#include "omega/machine.hpp"

using namespace omega;

namespace {

const Bits kTwoJzLoop = "1000001" "1000011" "11";  // Jz(0,+1) Jz(0,-1) End

DecodeError expect_error(const Bits& bits) {
  DecodeResult r = decode(bits);
  REQUIRE(std::holds_alternative<DecodeError>(r));
  return std::get<DecodeError>(r);
}

Program expect_program(const Bits& bits) {
  auto p = decode_ok(bits);
  REQUIRE(p.has_value());
  return *p;
}

}  // namespace

TEST_CASE("gamma code") {
  CHECK(gamma_encode(1) == "1");
  CHECK(gamma_encode(2) == "010");
  CHECK(gamma_encode(3) == "011");
  CHECK(gamma_encode(4) == "00100");
  CHECK(gamma_encode(9) == "0001001");
  for (uint64_t n = 1; n < 300; ++n) CHECK(gamma_encode(n).size() == gamma_length(n));
}

TEST_CASE("decode: forced examples") {
  Program end_only = expect_program("11");
  CHECK(end_only.code == std::vector<Instruction>{Instruction::end()});

  Program out1 = expect_program("101111");
  CHECK(out1.code ==
        std::vector<Instruction>{Instruction::out(1), Instruction::end()});

  DecodeError trailing = expect_error("1111");
  CHECK(trailing.reason == DecodeReason::TrailingBits);
  CHECK(trailing.position == 2);

  DecodeError truncated = expect_error("10");
  CHECK(truncated.reason == DecodeReason::Truncated);
  CHECK(truncated.position == 2);
  CHECK(expect_error("").reason == DecodeReason::Truncated);
  CHECK(expect_error("0000").reason == DecodeReason::Truncated);  // no End
}

TEST_CASE("encode: forced examples and the 16-bit loop") {
  CHECK(encode({Instruction::end()}) == "11");
  CHECK(encode({Instruction::out(0), Instruction::end()}) == "101011");
  CHECK(encode({Instruction::jz(0, 1), Instruction::jz(0, -1), Instruction::end()}) ==
        kTwoJzLoop);
  CHECK(kTwoJzLoop.size() == 16);

  CHECK_THROWS_AS(encode({}), std::invalid_argument);
  CHECK_THROWS_AS(encode({Instruction::out(0)}), std::invalid_argument);
  CHECK_THROWS_AS(encode({Instruction::end(), Instruction::end()}),
                  std::invalid_argument);
  CHECK_THROWS_AS(encode({Instruction::jz(0, 0), Instruction::end()}),
                  std::invalid_argument);
}

TEST_CASE("step semantics") {
  Program p = expect_program("101111");  // Out(1) End
  MachineState s;
  CHECK(step(s, p) == StepOutcome::Running);
  CHECK(s.pc == 1);
  CHECK(s.output == "1");
  CHECK(s.steps == 1);
  CHECK(step(s, p) == StepOutcome::Halted);

  // Dec of zero is a no-op on the register
  Program dec0 = expect_program("010011");
  MachineState sd;
  CHECK(step(sd, dec0) == StepOutcome::Running);
  CHECK(sd.regs[0] == 0);

  // jump target -1 is out of range
  Program back = expect_program("1000011" "11");  // Jz(0,-1) End
  MachineState sj;
  CHECK(step(sj, back) == StepOutcome::Fault);

  // Jz on a nonzero register falls through
  Program p2 = expect_program("0000" "1000011" "11");  // Inc(0) Jz(0,-1) End
  RunResult r2 = run(p2, 100);
  CHECK(r2.kind == RunResult::Kind::Halted);
  CHECK(r2.steps == 3);
}

TEST_CASE("run: examples") {
  RunResult r1 = run(expect_program("11"), 100);
  CHECK(r1.kind == RunResult::Kind::Halted);
  CHECK(r1.output == "");
  CHECK(r1.steps == 1);

  RunResult r2 = run(expect_program("101111"), 100);
  CHECK(r2.kind == RunResult::Kind::Halted);
  CHECK(r2.output == "1");
  CHECK(r2.steps == 2);

  RunResult r3 = run(expect_program(kTwoJzLoop), 1000);
  CHECK(r3.kind == RunResult::Kind::BudgetExhausted);

  // outcome independent of budget once reached
  for (uint64_t b : {2, 3, 10, 1000}) {
    RunResult r = run(expect_program("101111"), b);
    CHECK(r.kind == RunResult::Kind::Halted);
    CHECK(r.output == "1");
    CHECK(r.steps == 2);
  }
  CHECK(run(expect_program("101111"), 1).kind == RunResult::Kind::BudgetExhausted);
}

TEST_CASE("prove_nonhalting: examples") {
  auto loop = prove_nonhalting(expect_program(kTwoJzLoop), 1000);
  REQUIRE(loop.has_value());
  CHECK(*loop == NonHaltMethod::StateRevisit);

  CHECK_FALSE(prove_nonhalting(expect_program("11"), 1000).has_value());

  auto fault = prove_nonhalting(expect_program("1000011" "11"), 1000);
  REQUIRE(fault.has_value());
  CHECK(*fault == NonHaltMethod::Fault);

  // Inc(0) Jz(1,-1) End: register 0 grows forever, no revisit; but no Inc
  // touches register 1, so the static graph proves End unreachable.
  auto unreach = prove_nonhalting(expect_program("0000" "1000111" "11"), 64);
  REQUIRE(unreach.has_value());
  CHECK(*unreach == NonHaltMethod::UnreachableEnd);

  // Inc(0) Jz(1,-1) Inc(1) End: the dead Inc(1) defeats the static
  // refinement and register 0 still grows, so no proof exists.
  CHECK_FALSE(prove_nonhalting(expect_program("0000" "1000111" "0001" "11"), 64)
                  .has_value());
}

TEST_CASE("prefix-freeness and round trips up to 12 bits") {
  // decode-filter over every bit string
  std::unordered_set<Bits> valid;
  for (int len = 0; len <= 12; ++len) {
    uint64_t total = uint64_t(1) << len;
    for (uint64_t v = 0; v < total; ++v) {
      Bits s;
      for (int i = len - 1; i >= 0; --i) s.push_back((v >> i) & 1 ? '1' : '0');
      auto p = decode_ok(s);
      if (!p) continue;
      valid.insert(s);
      CHECK(encode(p->code) == s);  // encode . decode = id on valid sources
    }
  }
  for (const Bits& s : valid) {
    for (size_t cut = 1; cut < s.size(); ++cut) {
      CHECK_FALSE(valid.contains(s.substr(0, cut)));
    }
  }

  // decode . encode = identity on structurally generated code
  for_each_valid(Machine::Full, 12, [&](const Program& p) {
    CHECK(valid.contains(p.source));
    auto q = decode_ok(p.source);
    REQUIRE(q.has_value());
    CHECK(q->code == p.code);
  });
}

TEST_CASE("proof soundness: proven programs never halt under a large budget") {
  int proven = 0;
  for_each_valid(Machine::Full, 14, [&](const Program& p) {
    auto method = prove_nonhalting(p, 4096);
    if (!method) return;
    ++proven;
    CHECK(run(p, 1000000).kind != RunResult::Kind::Halted);
  });
  CHECK(proven > 0);
}

TEST_CASE("jump-free validity") {
  CHECK(valid_for(Machine::JumpFree, expect_program("11")));
  CHECK(valid_for(Machine::JumpFree, expect_program("101011")));
  CHECK_FALSE(valid_for(Machine::JumpFree, expect_program(kTwoJzLoop)));
  CHECK(valid_for(Machine::Full, expect_program(kTwoJzLoop)));
}
