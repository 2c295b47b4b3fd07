#pragma once

#include <string>

#include "ponyexpress/validate.hpp"

namespace pony {

// Nearest double to x's 12-significant-digit decimal rendering. All JSON and
// CSV output goes through this so emitted numbers round-trip byte-identically.
double round_sig12(double x);
std::string format_sig12(double x);

// Canonical JSON: {"variant": ..., "robots": [{"id", "p", "v"}, ...]},
// stable key order, numbers at 12 significant digits. Rejects NaN/Inf.
std::string serialize(const ProblemInstance& inst);

// Strict parse of the documented schema (unknown fields rejected), followed
// by full validation.
ValidatedInstance parse_instance(const std::string& text);

}  // namespace pony
