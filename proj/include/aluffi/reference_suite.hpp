#pragma once

#include <string>
#include <vector>

namespace aluffi {

/// One expected-vs-computed comparison.
struct SuiteCheck {
  std::string what;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct SuiteRow {
  std::string name;
  std::vector<SuiteCheck> checks;
  bool ok() const;
};

/// Rows of the built-in reference computations, in execution order.
std::vector<std::string> reference_row_names();

/// Throws PreconditionError for an unknown row name.
SuiteRow run_reference_row(const std::string& name);

std::vector<SuiteRow> run_reference_suite();

}  // namespace aluffi
