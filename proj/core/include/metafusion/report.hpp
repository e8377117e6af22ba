#pragma once

#include <string>
#include <utility>
#include <vector>

namespace metafusion {

inline constexpr const char* kVersion = "0.1.0";

/// Tabular result of a verification sweep. A sweep fails exactly when
/// fail_count > 0; the CLI maps that to exit code 1.
struct SweepReport {
  std::string check;
  long long max_order = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
  int pass_count = 0;
  int fail_count = 0;
  std::string version = kVersion;

  bool ok() const { return fail_count == 0; }
  void add_row(std::vector<std::string> row, bool pass);
  void note(std::string key, std::string value);

  std::string to_tsv() const;
  std::string to_json_string() const;
  /// Human-readable aligned table with a trailing summary block.
  std::string to_text() const;
};

}  // namespace metafusion
