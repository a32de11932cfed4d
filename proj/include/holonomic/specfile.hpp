#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "holonomic/recmat/recmat.hpp"

namespace holo {

// Line-oriented recurrence description:
//
//   # comment
//   order 2
//   den 1
//   entry 0 1 1
//   entry 1 0 1
//   entry 1 1 1
//   init 1 1
//
// Absent entries are zero, an absent den is 1 and absent init components are
// zero; with no init lines at all the initial vector is e_0.
struct SpecFile {
  RecMatrix matrix;
  // Textual initial components (rational, decimal or "m +/- r" ball).
  std::vector<std::string> init;
  bool has_init = false;
};

// Throws ParseError carrying the 1-based offending line.
SpecFile parse_spec(std::string_view text);
std::string serialize_spec(const SpecFile& spec);

}  // namespace holo
