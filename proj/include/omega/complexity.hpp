#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "omega/enumerate.hpp"

namespace omega {

// Program-size complexity over a classified frontier. H(x) is the length
// of the shortest program outputting x; a frontier only ever gives an
// upper bound, exact when nothing shorter is left unresolved.
struct ComplexityResult {
  Bits x;
  std::optional<Bits> witness;  // canonically first halting program with output x
  std::optional<int> upper;     // |witness|
  bool exact = false;
  std::vector<Bits> blockers;   // Unknown sources shorter than upper
};

ComplexityResult h_upper(const Bits& x, const Checkpoint& ck);

struct HGtOutcome {
  enum class Kind { Certified, Refuted, Blocked };
  Kind kind = Kind::Certified;
  std::optional<Bits> witness;  // Refuted: the short program outputting x
  std::vector<Bits> blockers;   // Blocked: exactly the Unknowns of length <= m
};

// Is "H(x) > m" certifiable from this frontier? Certified needs every
// program of length <= m final with no output x; any Unknown of length
// <= m blocks the statement. Throws std::invalid_argument when m exceeds
// the frontier (the statement is not checkable there).
HGtOutcome certify_h_gt(const Bits& x, int m, const Checkpoint& ck);

struct IncompletenessRow {
  int m = 0;
  uint64_t certified = 0;  // x with |x| <= m certified H(x) > m
  uint64_t refuted = 0;    // distinct outputs witnessed at length <= m
  bool blocked = false;    // an Unknown of length <= m exists
};

struct IncompletenessReport {
  std::vector<IncompletenessRow> rows;  // m = 2.. m_max
  std::optional<int> first_blocked_m;
};

// The mechanical certification horizon: past the first blocked m no
// statement "H(x) > m" is certifiable from this frontier.
IncompletenessReport incompleteness_report(const Checkpoint& ck, int m_max);

std::string format_incompleteness(const IncompletenessReport& rep);

}  // namespace omega
