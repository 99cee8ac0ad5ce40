#include <map>
#include <stdexcept>

#include "doctest.h"
#include "omega/enumerate.hpp"

using namespace omega;

namespace {

std::vector<Bits> sources_up_to(Machine m, int max_len) {
  std::vector<Bits> out;
  for_each_valid(m, max_len, [&](const Program& p) { out.push_back(p.source); });
  return out;
}

// Independent oracle: decode-filter every bit string of length <= max_len.
std::vector<Bits> decode_filter(Machine m, int max_len) {
  std::vector<Bits> out;
  for (int len = 0; len <= max_len; ++len) {
    for (uint64_t v = 0; v < (uint64_t(1) << len); ++v) {
      Bits s;
      for (int i = len - 1; i >= 0; --i) s.push_back((v >> i) & 1 ? '1' : '0');
      auto p = decode_ok(s);
      if (p && valid_for(m, *p)) out.push_back(s);
    }
  }
  return out;  // already in canonical (length, lex) order
}

bool canonical_less(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TEST_CASE("enumerate_valid: forced small frontiers") {
  CHECK(sources_up_to(Machine::Full, 2) == std::vector<Bits>{"11"});

  std::vector<Bits> six = sources_up_to(Machine::Full, 6);
  REQUIRE(six.size() == 11);
  CHECK(six.front() == "11");
  // 4 Inc, 4 Dec, 2 Out, each followed by End; nothing of length 3-5
  CHECK(six[1] == "000011");
  CHECK(six[5] == "010011");
  CHECK(six[9] == "101011");
  CHECK(six[10] == "101111");
  for (const Bits& s : six) CHECK((s.size() == 2 || s.size() == 6));
}

TEST_CASE("enumerate_valid: equals decode-filter up to 12 bits, both machines") {
  for (Machine m : {Machine::Full, Machine::JumpFree}) {
    for (int n : {2, 6, 9, 11, 12}) {
      CHECK(sources_up_to(m, n) == decode_filter(m, n));
    }
  }
}

TEST_CASE("canonical order and per-length counts") {
  std::vector<Bits> all = sources_up_to(Machine::Full, 16);
  for (size_t i = 1; i < all.size(); ++i) {
    CHECK(canonical_less(all[i - 1], all[i]));
  }
  // frozen counts per length derived from codeword-length composition
  std::map<size_t, uint64_t> per_len;
  for (const Bits& s : all) ++per_len[s.size()];
  std::map<size_t, uint64_t> expected{{2, 1},   {6, 10},  {9, 8},   {10, 100},
                                      {11, 16}, {13, 192}, {14, 1000}, {15, 384},
                                      {16, 64}};
  CHECK(per_len == expected);
  CHECK(count_valid(Machine::Full, 16) == 1 + 10 + 8 + 100 + 16 + 192 + 1000 + 384 + 64);
  CHECK(count_valid(Machine::JumpFree, 14) == 1 + 10 + 100 + 1000);
  CHECK(count_valid(Machine::Full, 1) == 0);
}

TEST_CASE("classify: examples") {
  ProgramStatus end_only = classify(*decode_ok("11"), 100, 100);
  CHECK(end_only.kind == ProgramStatus::Kind::Halted);
  CHECK(end_only.output == "");
  CHECK(end_only.steps == 1);

  ProgramStatus loop = classify(*decode_ok("1000001" "1000011" "11"), 100, 100);
  CHECK(loop.kind == ProgramStatus::Kind::ProvenNonHalting);
  CHECK(loop.method == NonHaltMethod::StateRevisit);

  // growing register, dead Inc defeating the static proof, tiny budget
  ProgramStatus unk = classify(*decode_ok("0000" "1000111" "0001" "11"), 64, 64);
  CHECK(unk.kind == ProgramStatus::Kind::Unknown);
  CHECK(unk.step_budget_used == 64);
  CHECK(unk.state_budget_used == 64);

  ProgramStatus fault = classify(*decode_ok("1000011" "11"), 100, 100);
  CHECK(fault.kind == ProgramStatus::Kind::ProvenNonHalting);
  CHECK(fault.method == NonHaltMethod::Fault);
}

TEST_CASE("run_frontier: completeness, resume, worker independence") {
  Checkpoint ck6 = run_frontier(Machine::Full, 6, 100, 100);
  REQUIRE(ck6.records.size() == 11);
  for (const Record& r : ck6.records)
    CHECK(r.status.kind == ProgramStatus::Kind::Halted);

  Checkpoint ck9 = run_frontier(Machine::Full, 9, 100, 100, &ck6);
  REQUIRE(ck9.records.size() == 19);  // adds the eight 9-bit single-Jz programs
  for (size_t i = 0; i < 11; ++i) {
    CHECK(ck9.records[i] == ck6.records[i]);  // length-major order keeps them first
  }

  Checkpoint seq = run_frontier(Machine::Full, 14, 256, 256, nullptr, 1);
  Checkpoint par = run_frontier(Machine::Full, 14, 256, 256, nullptr, 8);
  CHECK(seq.records == par.records);

  // resuming under identical budgets reproduces the direct run exactly
  Checkpoint direct9 = run_frontier(Machine::Full, 9, 100, 100);
  CHECK(direct9.records == ck9.records);

  CHECK_THROWS_AS(run_frontier(Machine::JumpFree, 9, 100, 100, &ck6),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_frontier(Machine::Full, 4, 100, 100, &ck6),
                  std::invalid_argument);
}

TEST_CASE("monotone refinement: finals survive, statuses re-run true") {
  Checkpoint small = run_frontier(Machine::Full, 13, 2, 2);  // starved budgets
  Checkpoint big = run_frontier(Machine::Full, 15, 4096, 4096, &small);
  std::map<Bits, ProgramStatus> final_in_small;
  for (const Record& r : small.records) {
    if (r.status.final_status()) final_in_small[r.source] = r.status;
  }
  CHECK(!final_in_small.empty());
  int upgraded = 0;
  for (const Record& r : big.records) {
    auto it = final_in_small.find(r.source);
    if (it != final_in_small.end()) CHECK(r.status == it->second);
  }
  for (const Record& small_rec : small.records) {
    if (!small_rec.status.final_status()) ++upgraded;
  }
  CHECK(upgraded > 0);  // the starved run must actually have had Unknowns

  // status soundness: Halted records re-run to the same output and steps
  for (const Record& r : big.records) {
    if (r.status.kind != ProgramStatus::Kind::Halted) continue;
    RunResult rr = run(*decode_ok(r.source), r.status.steps + 10);
    CHECK(rr.kind == RunResult::Kind::Halted);
    CHECK(rr.output == r.status.output);
    CHECK(rr.steps == r.status.steps);
  }
}
