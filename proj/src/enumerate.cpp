#include "omega/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace omega {

std::vector<Codeword> instruction_codewords(Machine m, int max_codeword_len) {
  std::vector<Codeword> cws;
  if (max_codeword_len >= 4) {
    for (uint8_t r = 0; r < 4; ++r) {
      cws.push_back({encode_instruction(Instruction::inc(r)), Instruction::inc(r)});
      cws.push_back({encode_instruction(Instruction::dec(r)), Instruction::dec(r)});
    }
    for (uint8_t b = 0; b < 2; ++b) {
      cws.push_back({encode_instruction(Instruction::out(b)), Instruction::out(b)});
    }
  }
  if (m == Machine::Full) {
    for (uint64_t mag = 1;
         6 + gamma_length(mag) <= size_t(std::max(max_codeword_len, 0)); ++mag) {
      for (uint8_t r = 0; r < 4; ++r) {
        for (int sign = 0; sign < 2; ++sign) {
          int64_t off = sign ? -int64_t(mag) : int64_t(mag);
          Instruction ins = Instruction::jz(r, off);
          cws.push_back({encode_instruction(ins), ins});
        }
      }
    }
  }
  std::sort(cws.begin(), cws.end(),
            [](const Codeword& a, const Codeword& b) { return a.bits < b.bits; });
  return cws;
}

namespace {

// body_representable[r]: r bits can be tiled by non-End codeword lengths.
std::vector<char> representable(Machine m, int max_body) {
  std::vector<char> rep(size_t(max_body) + 1, 0);
  rep[0] = 1;
  for (int r = 4; r <= max_body; ++r) {
    if (rep[r - 4]) rep[r] = 1;
    if (m == Machine::Full) {
      for (int l = 7; l <= r; l += 2) {
        if (rep[r - l]) {
          rep[r] = 1;
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace

std::vector<uint64_t> body_counts(Machine m, int max_body_len) {
  std::vector<uint64_t> c(size_t(std::max(max_body_len, 0)) + 1, 0);
  c[0] = 1;
  for (int r = 1; r <= max_body_len; ++r) {
    uint64_t total = 0;
    if (r >= 4) total += 10 * c[r - 4];  // 4 Inc + 4 Dec + 2 Out
    if (m == Machine::Full) {
      // Jz codewords of length 2k+7 come in 2^(k+3) variants.
      for (int l = 7, k = 0; l <= r; l += 2, ++k) {
        total += (uint64_t(8) << k) * c[r - l];
      }
    }
    c[r] = total;
  }
  return c;
}

void for_each_valid(Machine m, int max_len,
                    const std::function<void(const Program&)>& fn) {
  if (max_len < 2) return;
  const int max_body = max_len - 2;
  const std::vector<Codeword> cws = instruction_codewords(m, max_body);
  const std::vector<char> rep = representable(m, max_body);

  Program p;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      size_t src_len = p.source.size();
      size_t code_len = p.code.size();
      p.source += "11";
      p.code.push_back(Instruction::end());
      fn(p);
      p.source.resize(src_len);
      p.code.resize(code_len);
      return;
    }
    for (const Codeword& cw : cws) {
      int rest = remaining - int(cw.bits.size());
      if (rest < 0 || !rep[rest]) continue;
      size_t src_len = p.source.size();
      p.source += cw.bits;
      p.code.push_back(cw.ins);
      rec(rest);
      p.source.resize(src_len);
      p.code.pop_back();
    }
  };

  for (int body = 0; body <= max_body; ++body) {
    if (rep[body]) rec(body);
  }
}

uint64_t count_valid(Machine m, int max_len) {
  if (max_len < 2) return 0;
  std::vector<uint64_t> c = body_counts(m, max_len - 2);
  uint64_t total = 0;
  for (uint64_t n : c) total += n;
  return total;
}

ProgramStatus classify(const Program& program, uint64_t step_budget,
                       uint64_t state_budget) {
  RunResult r = run(program, step_budget);
  if (r.kind == RunResult::Kind::Halted) {
    ProgramStatus s;
    s.kind = ProgramStatus::Kind::Halted;
    s.output = r.output;
    s.steps = r.steps;
    return s;
  }
  if (r.kind == RunResult::Kind::Fault) {
    ProgramStatus s;
    s.kind = ProgramStatus::Kind::ProvenNonHalting;
    s.method = NonHaltMethod::Fault;
    return s;
  }
  if (auto method = prove_nonhalting(program, state_budget)) {
    ProgramStatus s;
    s.kind = ProgramStatus::Kind::ProvenNonHalting;
    s.method = *method;
    return s;
  }
  ProgramStatus s;
  s.kind = ProgramStatus::Kind::Unknown;
  s.step_budget_used = step_budget;
  s.state_budget_used = state_budget;
  return s;
}

Checkpoint run_frontier(Machine m, int max_len, uint64_t step_budget,
                        uint64_t state_budget, const Checkpoint* resume,
                        int workers) {
  if (max_len < 2) throw std::invalid_argument("max_len must be >= 2");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (resume) {
    if (resume->machine != m)
      throw std::invalid_argument("resume checkpoint is for a different machine");
    if (resume->max_len > max_len)
      throw std::invalid_argument("resume frontier exceeds requested max_len");
  }

  std::unordered_map<Bits, const ProgramStatus*> final_statuses;
  if (resume) {
    for (const Record& rec : resume->records) {
      if (rec.status.final_status()) final_statuses.emplace(rec.source, &rec.status);
    }
  }

  std::vector<Program> programs;
  programs.reserve(count_valid(m, max_len));
  for_each_valid(m, max_len, [&](const Program& p) { programs.push_back(p); });

  std::vector<Record> records(programs.size());
  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      records[i].source = programs[i].source;
      auto hit = final_statuses.find(programs[i].source);
      if (hit != final_statuses.end()) {
        records[i].status = *hit->second;
      } else {
        records[i].status = classify(programs[i], step_budget, state_budget);
      }
    }
  };

  if (workers == 1 || programs.size() < 2) {
    work(0, programs.size());
  } else {
    size_t chunk = (programs.size() + size_t(workers) - 1) / size_t(workers);
    std::vector<std::thread> pool;
    for (size_t lo = 0; lo < programs.size(); lo += chunk) {
      pool.emplace_back(work, lo, std::min(lo + chunk, programs.size()));
    }
    for (auto& t : pool) t.join();
  }

  return Checkpoint{m, max_len, step_budget, state_budget, std::move(records)};
}

}  // namespace omega
