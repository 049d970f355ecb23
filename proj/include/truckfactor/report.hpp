#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "truckfactor/authorship.hpp"
#include "truckfactor/history.hpp"
#include "truckfactor/identity.hpp"

namespace truckfactor {

inline constexpr int kReportSchemaVersion = 1;

enum class UniverseMode { kAuthored, kAllFiles };
enum class OutputFormat { kText, kJson, kCsv };

std::string_view to_string(UniverseMode mode);
UniverseMode parse_universe_mode(std::string_view text);
std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

struct TfAuthor {
  std::string name;
  std::size_t files_authored = 0;
  double coverage_after = 0.0;

  bool operator==(const TfAuthor&) const = default;
};

struct Totals {
  std::size_t developers = 0;
  std::size_t authors = 0;
  std::size_t files = 0;
  std::size_t files_without_addition = 0;
  std::size_t commits = 0;

  bool operator==(const Totals&) const = default;
};

// How the authors of sampled files rank in the blame report. Fractions are
// over `pairs` (author, file) pairs.
struct BlameAgreement {
  std::uint64_t seed = 0;
  std::size_t sampled_files = 0;
  std::size_t failed_files = 0;
  std::size_t pairs = 0;
  double top1 = 0.0;
  double top3 = 0.0;
  double beyond_top3 = 0.0;
  double unmatched = 0.0;

  bool operator==(const BlameAgreement&) const = default;
};

struct Report {
  int schema_version = kReportSchemaVersion;
  std::string repository;
  std::string branch;
  std::string head_commit;
  std::string patterns_version;
  Thresholds thresholds;
  UniverseMode universe = UniverseMode::kAuthored;

  std::size_t truck_factor = 0;
  std::vector<TfAuthor> tf_authors;
  double initial_coverage = 0.0;
  std::size_t file_universe_size = 0;
  bool low_initial_coverage = false;
  double author_ratio = 0.0;
  Totals totals;

  std::optional<MigrationVerdict> migration;
  std::optional<BlameAgreement> blame_agreement;
  std::optional<std::vector<AliasCandidate>> alias_candidates;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

std::string to_json(const Report& report);
Report report_from_json(std::string_view json);

std::string emit(const Report& report, OutputFormat format);

}  // namespace truckfactor
