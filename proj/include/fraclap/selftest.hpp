#pragma once

// Built-in property checks, grouped by module, runnable from the library.

#include <functional>
#include <string>
#include <vector>

namespace fraclap {

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  std::string filter;         // module name; empty runs everything
  bool inject_fault = false;  // perturb one normalization constant
};

std::vector<std::string> selftest_modules();

/// Runs the checks selected by `filter`, calling `report` after each one.
/// Throws DomainError for an unknown filter.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt,
                                      const std::function<void(const CheckResult&)>& report = {});

}  // namespace fraclap
