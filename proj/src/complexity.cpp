#include "omega/complexity.hpp"

#include <stdexcept>
#include <unordered_set>

namespace omega {

ComplexityResult h_upper(const Bits& x, const Checkpoint& ck) {
  ComplexityResult res;
  res.x = x;
  for (const Record& r : ck.records) {  // canonical order
    if (r.status.kind == ProgramStatus::Kind::Halted && r.status.output == x) {
      res.witness = r.source;
      res.upper = int(r.source.size());
      break;
    }
  }
  size_t bound = res.upper ? size_t(*res.upper) : size_t(ck.max_len) + 1;
  for (const Record& r : ck.records) {
    if (r.status.kind == ProgramStatus::Kind::Unknown && r.source.size() < bound)
      res.blockers.push_back(r.source);
  }
  res.exact = res.witness.has_value() && res.blockers.empty();
  return res;
}

HGtOutcome certify_h_gt(const Bits& x, int m, const Checkpoint& ck) {
  if (m > ck.max_len)
    throw std::invalid_argument("m exceeds the frontier; statement not checkable");
  HGtOutcome out;
  for (const Record& r : ck.records) {
    if (r.source.size() > size_t(m)) continue;
    if (r.status.kind == ProgramStatus::Kind::Halted && r.status.output == x) {
      out.kind = HGtOutcome::Kind::Refuted;
      out.witness = r.source;
      out.blockers.clear();
      return out;  // canonical-first witness; the claim is false
    }
    if (r.status.kind == ProgramStatus::Kind::Unknown)
      out.blockers.push_back(r.source);
  }
  out.kind = out.blockers.empty() ? HGtOutcome::Kind::Certified
                                  : HGtOutcome::Kind::Blocked;
  return out;
}

IncompletenessReport incompleteness_report(const Checkpoint& ck, int m_max) {
  if (m_max > ck.max_len)
    throw std::invalid_argument("m_max exceeds the frontier");
  if (m_max > 62) throw std::invalid_argument("m_max too large for exact counts");
  IncompletenessReport rep;

  // Sweep m upward, growing the set of witnessed outputs as records come
  // into range. Records are sorted by length, so one pass suffices.
  std::unordered_set<Bits> outputs;
  size_t next = 0;
  bool blocked = false;
  for (int m = 2; m <= m_max; ++m) {
    while (next < ck.records.size() &&
           ck.records[next].source.size() <= size_t(m)) {
      const Record& r = ck.records[next];
      if (r.status.kind == ProgramStatus::Kind::Halted) outputs.insert(r.status.output);
      if (r.status.kind == ProgramStatus::Kind::Unknown) blocked = true;
      ++next;
    }
    IncompletenessRow row;
    row.m = m;
    row.blocked = blocked;
    row.refuted = outputs.size();
    // #{x : |x| <= m} = 2^(m+1) - 1; all witnessed outputs lie within
    // that range since a program of length <= m emits fewer than m bits.
    row.certified = blocked ? 0 : ((uint64_t(1) << (m + 1)) - 1 - outputs.size());
    if (blocked && !rep.first_blocked_m) rep.first_blocked_m = m;
    rep.rows.push_back(row);
  }
  return rep;
}

std::string format_incompleteness(const IncompletenessReport& rep) {
  std::string out;
  for (const IncompletenessRow& row : rep.rows) {
    out += "m=" + std::to_string(row.m) +
           " certified=" + std::to_string(row.certified) +
           " refuted=" + std::to_string(row.refuted) +
           (row.blocked ? " blocked=yes" : " blocked=no (all longer x vacuous)") +
           "\n";
  }
  out += "horizon=";
  out += rep.first_blocked_m ? std::to_string(*rep.first_blocked_m) : "none";
  out += "\n";
  return out;
}

}  // namespace omega
