#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "truckfactor/history.hpp"
#include "truckfactor/identity.hpp"

namespace truckfactor {

// Weights of the degree-of-authorship model.
namespace doa_weights {
inline constexpr double kIntercept = 3.293;
inline constexpr double kFirstAuthorship = 1.098;
inline constexpr double kDeliveries = 0.164;
inline constexpr double kAcceptances = 0.321;
}  // namespace doa_weights

struct Thresholds {
  double k = 0.75;      // normalized DOA must be strictly greater
  double m = 3.293;     // absolute DOA must be at least this
  double coverage = 0.5;

  bool operator==(const Thresholds&) const = default;
};

// Degree of authorship for a developer with first-authorship flag `fa`,
// `dl` own changes and `ac` changes by others to the same file.
double doa(int fa, std::size_t dl, std::size_t ac);

struct ChangeCounts {
  DeveloperId developer;
  int fa = 0;
  std::size_t dl = 0;
  std::size_t ac = 0;

  bool operator==(const ChangeCounts&) const = default;
};

// Per-developer FA/DL/AC over one trace, ordered by developer.
std::vector<ChangeCounts> accumulate(const FileTrace& trace,
                                     const AliasMap& aliases);

struct AuthorshipRecord {
  DeveloperId developer;
  std::string file;
  int fa = 0;
  std::size_t dl = 0;
  std::size_t ac = 0;
  double doa_abs = 0.0;
  double doa_norm = 0.0;
  bool is_author = false;
};

// Scales the records of one file by the file's maximum absolute DOA.
void normalize(std::span<AuthorshipRecord> file_records);

// Developer -> authored files. Never holds an empty file set.
using AuthorFileMap = std::map<DeveloperId, std::set<std::string>>;

// Sets is_author on every record and collects the authors. Files whose
// best absolute DOA is not positive have no author.
AuthorFileMap select_authors(std::span<AuthorshipRecord> records,
                             const Thresholds& thresholds);

// accumulate + doa + normalize for every trace. Records are ordered by
// file, then developer; is_author is left unset.
std::vector<AuthorshipRecord> compute_authorship(
    const std::vector<FileTrace>& traces, const AliasMap& aliases);

struct BlameEntry {
  DeveloperId developer;
  std::size_t lines = 0;

  bool operator==(const BlameEntry&) const = default;
};

// Counts `git blame --line-porcelain` output per developer, most lines
// first (ties by name). Throws BlameFailed on binary content.
std::vector<BlameEntry> parse_blame(std::string_view porcelain,
                                    const AliasMap& aliases,
                                    const std::string& file);

std::vector<BlameEntry> blame_rank(const std::filesystem::path& repo,
                                   const std::string& file,
                                   const AliasMap& aliases,
                                   const std::string& branch = {});

// Share of `all_developers` that author at least one file.
double author_ratio(const std::set<DeveloperId>& all_developers,
                    const AuthorFileMap& authors);

}  // namespace truckfactor
