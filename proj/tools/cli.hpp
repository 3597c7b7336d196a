#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hfpt/json_io.hpp"

namespace hfpt::cli {

/// Runs one subcommand. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error (reported in the JSON envelope), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One entry of the regression table of published worked examples.
struct RegressionRow {
  std::string id;
  std::string description;
  /// CLI invocation whose output carries the value, with the top-level output key.
  std::vector<std::string> args;
  std::string key;
  /// Custom extraction from the outputs object; defaults to outputs[key].
  std::function<Json(const Json& outputs)> extract;
  Json published;
  /// Set when the published value is a known slip; the row then pins this value instead.
  std::optional<Json> corrected;
  std::string note;
};

struct RegressionResult {
  const RegressionRow* row = nullptr;
  Json actual;
  std::string status;  ///< "match", "expected-deviation" or "mismatch"
};

const std::vector<RegressionRow>& regression_table();

std::vector<RegressionResult> run_regression();

}  // namespace hfpt::cli
