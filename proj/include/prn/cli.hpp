#pragma once

// Command-line front end. Every command reads one JSON job:
//
//   {"ambient": {"factors": [{"p": 3, "n": 3}, ...]} | {"builtin": "alt5"},
//    "subgroup": [element, ...],
//    "K": [element, ...]}                      (optional, default: ambient)
//
// plus command-specific fields (see README). Exit codes: 0 for Pronormal or
// true, 1 for NotPronormal or false, 2 for NotApplicable or any error.

#include <iosfwd>
#include <string>
#include <vector>

#include "prn/io.hpp"

namespace prn {

inline constexpr const char* kCommands[] = {"decide",   "oracle",     "reduce",  "enumerate",
                                            "classify", "crosscheck", "example1"};

struct JobOptions {
  std::size_t budget = kDefaultClosureCap;  // element cap for every group built
  bool timings = false;                     // adds wall-clock timings to the report
};

struct Report {
  int exit_code = 2;
  Json json;
};

// Runs one command. Errors are caught and reported with exit code 2.
Report dispatch(const std::string& command, const Json& input, const JobOptions& options);

// Human-readable rendering of a report.
std::string render_text(const Report& report);

std::vector<std::string> builtin_names();

// Full program: argument parsing, input loading (file or stdin), output.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace prn
