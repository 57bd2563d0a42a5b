#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "laced/common.hpp"

namespace laced::cli {

// One emitted result block. Values are pre-rendered strings: exact integers
// and rationals in decimal (never float notation), floats with 12
// significant digits. Key order is the emission order in every format.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> results;
};

std::string format_real(double v);
std::string format_int(const Bigint& v);
std::string format_rational(const Rational& v);
std::string format_bool(bool v);

// Dispatches one subcommand. Records go to `out` (or the --out file);
// diagnostics to `err`. Returns 0 on success, 1 on domain errors, 2 on
// verification failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laced::cli
