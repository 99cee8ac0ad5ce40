#include "omega/checkpoint_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace omega {

namespace {

std::string status_to_string(const ProgramStatus& s) {
  switch (s.kind) {
    case ProgramStatus::Kind::Halted:
      return "H output=" + s.output + ",steps=" + std::to_string(s.steps);
    case ProgramStatus::Kind::ProvenNonHalting:
      return std::string("N method=") + nonhalt_method_name(s.method);
    case ProgramStatus::Kind::Unknown:
      return "U sb=" + std::to_string(s.step_budget_used) +
             ",cb=" + std::to_string(s.state_budget_used);
  }
  return "?";
}

bool parse_u64(std::string_view s, uint64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

// "key=value" -> value, or nullopt
std::optional<std::string_view> strip_key(std::string_view s, std::string_view key) {
  if (s.substr(0, key.size()) != key) return std::nullopt;
  return s.substr(key.size());
}

}  // namespace

std::string checkpoint_to_string(const Checkpoint& ck) {
  std::string out = "#omega-workbench checkpoint v1\n";
  out += "#machine=" + std::string(machine_name(ck.machine)) +
         " max_len=" + std::to_string(ck.max_len) +
         " step_budget=" + std::to_string(ck.step_budget) +
         " state_budget=" + std::to_string(ck.state_budget) + "\n";
  for (const Record& r : ck.records) {
    out += r.source + " " + status_to_string(r.status) + "\n";
  }
  return out;
}

void write_checkpoint(const Checkpoint& ck, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << checkpoint_to_string(ck);
  if (!f) throw std::runtime_error("write failed: " + path);
}

Checkpoint parse_checkpoint(std::istream& in) {
  std::string line;
  size_t lineno = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
  };

  if (!next_line() || line != "#omega-workbench checkpoint v1")
    throw CheckpointError(1, "missing checkpoint header");

  if (!next_line()) throw CheckpointError(2, "missing frontier line");
  Checkpoint ck;
  {
    std::istringstream hs(line);
    std::string mfield, lfield, sfield, cfield, extra;
    if (!(hs >> mfield >> lfield >> sfield >> cfield) || (hs >> extra))
      throw CheckpointError(lineno, "malformed frontier line");
    auto mv = strip_key(mfield, "#machine=");
    auto lv = strip_key(lfield, "max_len=");
    auto sv = strip_key(sfield, "step_budget=");
    auto cv = strip_key(cfield, "state_budget=");
    if (!mv || !lv || !sv || !cv)
      throw CheckpointError(lineno, "malformed frontier line");
    auto machine = machine_from_name(std::string(*mv));
    if (!machine) throw CheckpointError(lineno, "unknown machine");
    uint64_t max_len;
    if (!parse_u64(*lv, max_len) || max_len < 2 || max_len > 64)
      throw CheckpointError(lineno, "bad max_len");
    if (!parse_u64(*sv, ck.step_budget) || !parse_u64(*cv, ck.state_budget))
      throw CheckpointError(lineno, "bad budgets");
    ck.machine = *machine;
    ck.max_len = int(max_len);
  }

  // Expected sources, in canonical order, for the completeness check.
  std::vector<Bits> expected;
  expected.reserve(count_valid(ck.machine, ck.max_len));
  for_each_valid(ck.machine, ck.max_len,
                 [&](const Program& p) { expected.push_back(p.source); });

  size_t idx = 0;
  while (next_line()) {
    if (line.empty()) throw CheckpointError(lineno, "empty line");
    std::istringstream ls(line);
    std::string source, kind, aux;
    if (!(ls >> source >> kind)) throw CheckpointError(lineno, "malformed record");
    std::getline(ls, aux);
    if (!aux.empty() && aux[0] == ' ') aux.erase(0, 1);

    if (!is_bits(source)) throw CheckpointError(lineno, "source is not a bit string");
    if (source.size() > size_t(ck.max_len))
      throw CheckpointError(lineno, "record beyond the frontier");
    if (idx >= expected.size())
      throw CheckpointError(lineno, "more records than the frontier holds");
    if (source != expected[idx]) {
      if (idx > 0 && source == expected[idx - 1])
        throw CheckpointError(lineno, "duplicate record " + source);
      throw CheckpointError(lineno, "expected record " + expected[idx] +
                                        " here (canonical order, complete frontier)");
    }
    ++idx;

    Record rec;
    rec.source = source;
    if (kind == "H") {
      auto rest = strip_key(aux, "output=");
      if (!rest) throw CheckpointError(lineno, "malformed H record");
      size_t comma = rest->find(',');
      if (comma == std::string_view::npos)
        throw CheckpointError(lineno, "malformed H record");
      std::string output(rest->substr(0, comma));
      auto steps_part = strip_key(rest->substr(comma + 1), "steps=");
      uint64_t steps;
      if (!is_bits(output) || !steps_part || !parse_u64(*steps_part, steps))
        throw CheckpointError(lineno, "malformed H record");
      rec.status.kind = ProgramStatus::Kind::Halted;
      rec.status.output = output;
      rec.status.steps = steps;
    } else if (kind == "N") {
      auto mv = strip_key(aux, "method=");
      auto method = mv ? nonhalt_method_from_name(std::string(*mv)) : std::nullopt;
      if (!method) throw CheckpointError(lineno, "malformed N record");
      rec.status.kind = ProgramStatus::Kind::ProvenNonHalting;
      rec.status.method = *method;
    } else if (kind == "U") {
      auto rest = strip_key(aux, "sb=");
      if (!rest) throw CheckpointError(lineno, "malformed U record");
      size_t comma = rest->find(',');
      if (comma == std::string_view::npos)
        throw CheckpointError(lineno, "malformed U record");
      auto cb_part = strip_key(rest->substr(comma + 1), "cb=");
      uint64_t sb, cb;
      if (!parse_u64(rest->substr(0, comma), sb) || !cb_part ||
          !parse_u64(*cb_part, cb))
        throw CheckpointError(lineno, "malformed U record");
      rec.status.kind = ProgramStatus::Kind::Unknown;
      rec.status.step_budget_used = sb;
      rec.status.state_budget_used = cb;
    } else {
      throw CheckpointError(lineno, "unknown status kind '" + kind + "'");
    }
    ck.records.push_back(std::move(rec));
  }

  if (idx < expected.size())
    throw CheckpointError(lineno + 1, "incomplete frontier: missing " +
                                          expected[idx]);
  return ck;
}

Checkpoint read_checkpoint(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open checkpoint " + path);
  return parse_checkpoint(f);
}

}  // namespace omega
