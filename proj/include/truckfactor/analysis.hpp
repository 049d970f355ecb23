#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "truckfactor/authorship.hpp"
#include "truckfactor/report.hpp"

namespace truckfactor {

struct AnalysisConfig {
  std::filesystem::path repo_path;
  std::string branch;  // empty: whatever HEAD points to
  std::optional<std::filesystem::path> ignore_file;
  std::optional<std::filesystem::path> pattern_file;
  std::optional<std::filesystem::path> alias_file;
  bool builtin_patterns = true;
  Thresholds thresholds;
  UniverseMode universe = UniverseMode::kAuthored;
  OutputFormat format = OutputFormat::kText;

  bool blame_compare = false;
  std::uint64_t seed = 0;
  std::size_t blame_sample_size = 120;
  bool alias_report = false;
  bool check_migration = true;
  std::optional<std::size_t> fail_under;

  // Throws ConfigError on out-of-range thresholds.
  void validate() const;
};

// List files, resolve aliases, trace history, compute authorship and the
// truck factor, and assemble the report.
Report run(const AnalysisConfig& config);

}  // namespace truckfactor
