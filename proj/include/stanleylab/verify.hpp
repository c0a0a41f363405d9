#pragma once

// Checking suites: each compares formulas, bijections and series against the
// exhaustive enumerators and reports every comparison.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stanleylab/enumerate.hpp"
#include "stanleylab/json_io.hpp"

namespace stanleylab {

struct Check {
  std::string name;
  bool pass = false;
  Json expected;
  Json actual;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  /// {"suite", "checks":[{"name","status","expected","actual"}]}
  Json to_json() const;
};

/// table1, bijections, thm-full, columns, semiperimeter, area, cf,
/// corollary-2-13.
const std::vector<std::string>& suite_names();

/// Size used when no explicit bound is given; throws ParseError for unknown
/// suites.
int default_max_size(std::string_view suite);

/// Runs one suite, or every suite for "all". Throws ParseError for unknown
/// names and OutOfRange for a bound below 1.
Report run_suite(std::string_view suite, std::optional<int> max_size = std::nullopt,
                 const EnumerateOptions& opts = {});

}  // namespace stanleylab
