#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "omega/enumerate.hpp"

namespace omega {

// Checkpoint files are line-oriented ASCII:
//   #omega-workbench checkpoint v1
//   #machine=<full|jumpfree> max_len=<N> step_budget=<S> state_budget=<C>
//   <source bits> <H|N|U> <aux>
// with aux:
//   H: output=<bits>,steps=<k>
//   N: method=<revisit|unreachable|fault>
//   U: sb=<S>,cb=<C>
// Records appear in canonical (length, lexicographic) order and cover
// the frontier exactly.
struct CheckpointError : std::runtime_error {
  CheckpointError(size_t line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
  size_t line;
};

std::string checkpoint_to_string(const Checkpoint& ck);
void write_checkpoint(const Checkpoint& ck, const std::string& path);

// Parses and fully validates: header, record syntax, canonical order,
// per-machine validity, frontier completeness. Never repairs.
Checkpoint parse_checkpoint(std::istream& in);
Checkpoint read_checkpoint(const std::string& path);

}  // namespace omega
