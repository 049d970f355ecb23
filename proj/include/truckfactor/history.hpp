#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "truckfactor/identity.hpp"

namespace truckfactor {

enum class ChangeKind { kAddition, kModification, kRename };

std::string_view to_string(ChangeKind kind);

struct ChangeEvent {
  std::string commit_id;
  RawUser author;
  std::string path;
  ChangeKind kind = ChangeKind::kModification;
  std::string old_path;  // only for kRename
  // Position of the commit in oldest-first history order.
  std::size_t order = 0;

  bool operator==(const ChangeEvent&) const = default;
};

struct FileTrace {
  std::string current_path;
  std::vector<ChangeEvent> events;  // oldest first

  // A complete trace starts with the file's Addition.
  bool complete() const {
    return !events.empty() && events.front().kind == ChangeKind::kAddition;
  }
};

// Glob syntax: `*` and `?` stay within one path segment, `**` spans any
// number of segments (including none) and `[...]` is a character class.
// A pattern without `/` is matched against the file name only.
bool glob_match(std::string_view pattern, std::string_view path);

struct FilterRules {
  std::vector<std::string> ignore_globs;
  // Explicit paths; a path also excludes everything below it.
  std::vector<std::string> ignore_paths;
  std::vector<std::string> builtin_vendored;

  static FilterRules with_builtin_patterns();

  bool excludes(std::string_view path) const;
};

// Version tag of the shipped vendored/documentation pattern list.
extern const std::string_view kBuiltinPatternsVersion;
const std::vector<std::string>& builtin_vendored_patterns();

// One entry per line; blank lines and `#` comments are skipped.
std::vector<std::string> parse_pattern_lines(std::string_view text);
std::vector<std::string> load_pattern_file(const std::filesystem::path& file);

// Commit the branch (HEAD when empty) resolves to. Throws NotARepository or
// EmptyRepository.
std::string resolve_branch(const std::filesystem::path& repo,
                           const std::string& branch);

std::vector<std::string> list_snapshot_files(const std::filesystem::path& repo,
                                             const FilterRules& rules,
                                             const std::string& branch = {});

// Parses `git log --name-status --pretty=format:%H%x09%an%x09%ae` output
// (newest first) into events ordered oldest first.
std::vector<ChangeEvent> parse_log(std::string_view log);

std::vector<ChangeEvent> collect_history(const std::filesystem::path& repo,
                                         const std::string& branch = {});

// Follows each target back through renames until the change that added it.
std::vector<FileTrace> trace_files(const std::vector<ChangeEvent>& events,
                                   const std::vector<std::string>& targets);

struct MigrationVerdict {
  bool suspicious = false;
  double fraction_covered = 0.0;
  std::size_t adding_commits = 0;

  bool operator==(const MigrationVerdict&) const = default;
};

inline constexpr std::size_t kMigrationCommitLimit = 20;

MigrationVerdict check_migration(const std::vector<FileTrace>& traces);

// Undoes git's C-style quoting of a path ("a\tb" -> a<TAB>b). Unquoted
// input is returned unchanged.
std::string unquote_path(std::string_view path);

}  // namespace truckfactor
