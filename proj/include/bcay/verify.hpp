#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bcay/enumeration.hpp"

namespace bcay {

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
  void expect(bool cond, const std::string& what);
};

struct VerifyOptions {
  int max_order = 12;
  /// Suite names to run; empty runs all of
  /// golden, incidence, spectrum, cells, cayley, normalizer, geometry.
  std::vector<std::string> only;
  std::optional<std::string> golden_dir;
  EnumerationOptions enumeration;
};

const std::vector<std::string>& suite_names();

/// Enumerates every catalog group up to max_order and runs the invariant
/// suites over the records. `progress` (optional) receives one line per group.
std::vector<SuiteResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const std::string&)>& progress = {});

}  // namespace bcay
