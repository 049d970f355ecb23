#include "truckfactor/history.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "truckfactor/errors.hpp"
#include "truckfactor/process.hpp"

namespace truckfactor {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(kSpace) - first + 1);
}

// Matches one path segment against one pattern segment.
bool match_segment(std::string_view pat, std::string_view text) {
  std::size_t p = 0;
  std::size_t t = 0;
  std::size_t star_p = std::string_view::npos;
  std::size_t star_t = 0;
  while (t < text.size()) {
    if (p < pat.size()) {
      char c = pat[p];
      if (c == '*') {
        star_p = p++;
        star_t = t;
        continue;
      }
      if (c == '?') {
        ++p;
        ++t;
        continue;
      }
      if (c == '[') {
        std::size_t q = p + 1;
        bool negate = q < pat.size() && (pat[q] == '!' || pat[q] == '^');
        if (negate) ++q;
        bool matched = false;
        bool closed = false;
        for (bool first = true; q < pat.size(); first = false) {
          if (pat[q] == ']' && !first) {
            closed = true;
            break;
          }
          char lo = pat[q];
          char hi = lo;
          if (q + 2 < pat.size() && pat[q + 1] == '-' && pat[q + 2] != ']') {
            hi = pat[q + 2];
            q += 3;
          } else {
            ++q;
          }
          if (lo <= text[t] && text[t] <= hi) matched = true;
        }
        if (closed && matched != negate) {
          p = q + 1;
          ++t;
          continue;
        }
        if (!closed && text[t] == '[') {
          ++p;
          ++t;
          continue;
        }
      } else {
        if (c == '\\' && p + 1 < pat.size()) c = pat[++p];
        if (c == text[t]) {
          ++p;
          ++t;
          continue;
        }
      }
    }
    if (star_p == std::string_view::npos) return false;
    p = star_p + 1;
    t = ++star_t;
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

bool match_segments(const std::vector<std::string_view>& pat, std::size_t i,
                    const std::vector<std::string_view>& path, std::size_t j) {
  while (i < pat.size()) {
    if (pat[i] == "**") {
      while (i + 1 < pat.size() && pat[i + 1] == "**") ++i;
      if (i + 1 == pat.size()) return true;
      for (std::size_t k = j; k < path.size(); ++k) {
        if (match_segments(pat, i + 1, path, k)) return true;
      }
      return false;
    }
    if (j == path.size() || !match_segment(pat[i], path[j])) return false;
    ++i;
    ++j;
  }
  return j == path.size();
}

bool is_hex(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  });
}

bool is_commit_header(std::string_view line) {
  auto tab = line.find('\t');
  return (tab == 40 || tab == 64) && is_hex(line.substr(0, tab));
}

}  // namespace

std::string_view to_string(ChangeKind kind) {
  switch (kind) {
    case ChangeKind::kAddition:
      return "addition";
    case ChangeKind::kModification:
      return "modification";
    case ChangeKind::kRename:
      return "rename";
  }
  return "unknown";
}

bool glob_match(std::string_view pattern, std::string_view path) {
  if (pattern.empty()) return false;
  if (pattern.front() == '/') pattern.remove_prefix(1);
  std::string widened;
  if (pattern.back() == '/') {
    widened = std::string(pattern) + "**";
    pattern = widened;
  }
  auto path_segments = split(path, '/');
  if (pattern.find('/') == std::string_view::npos) {
    // gitignore-style: a bare name matches any file or directory name.
    return std::any_of(path_segments.begin(), path_segments.end(),
                       [&](std::string_view seg) {
                         return match_segment(pattern, seg);
                       });
  }
  return match_segments(split(pattern, '/'), 0, path_segments, 0);
}

FilterRules FilterRules::with_builtin_patterns() {
  FilterRules rules;
  rules.builtin_vendored = builtin_vendored_patterns();
  return rules;
}

bool FilterRules::excludes(std::string_view path) const {
  for (const std::string& p : ignore_paths) {
    std::string_view prefix = p;
    while (!prefix.empty() && prefix.back() == '/') prefix.remove_suffix(1);
    if (prefix.empty()) continue;
    if (path == prefix ||
        (path.size() > prefix.size() && path.starts_with(prefix) &&
         path[prefix.size()] == '/')) {
      return true;
    }
  }
  auto matches = [&](const std::string& g) { return glob_match(g, path); };
  return std::any_of(ignore_globs.begin(), ignore_globs.end(), matches) ||
         std::any_of(builtin_vendored.begin(), builtin_vendored.end(),
                     matches);
}

std::vector<std::string> parse_pattern_lines(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view line : split(text, '\n')) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(line);
  }
  return out;
}

std::vector<std::string> load_pattern_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pattern_lines(buffer.str());
}

std::string resolve_branch(const std::filesystem::path& repo,
                           const std::string& branch) {
  if (try_git(repo, {"rev-parse", "--git-dir"}).exit_code != 0) {
    throw NotARepository(repo.string());
  }
  const std::string rev = branch.empty() ? "HEAD" : branch;
  ProcessResult r =
      try_git(repo, {"rev-parse", "--verify", "--quiet", rev + "^{commit}"});
  if (r.exit_code == 0) return std::string(trim(r.out));
  if (try_git(repo, {"rev-parse", "--verify", "--quiet", "HEAD"}).exit_code !=
          0 &&
      try_git(repo, {"rev-list", "-n", "1", "--all"}).out.empty()) {
    throw EmptyRepository(repo.string());
  }
  if (branch.empty()) throw EmptyRepository(repo.string());
  throw ConfigError("unknown branch '" + branch + "' in " + repo.string());
}

std::vector<std::string> list_snapshot_files(const std::filesystem::path& repo,
                                             const FilterRules& rules,
                                             const std::string& branch) {
  const std::string commit = resolve_branch(repo, branch);
  std::string listing =
      run_git(repo, {"ls-tree", "-r", "-z", "--name-only", commit});
  std::vector<std::string> files;
  for (std::string_view entry : split(listing, '\0')) {
    if (entry.empty() || rules.excludes(entry)) continue;
    files.emplace_back(entry);
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string unquote_path(std::string_view path) {
  if (path.size() < 2 || path.front() != '"' || path.back() != '"') {
    return std::string(path);
  }
  path = path.substr(1, path.size() - 2);
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] != '\\' || i + 1 == path.size()) {
      out += path[i];
      continue;
    }
    char c = path[++i];
    switch (c) {
      case 'a': out += '\a'; break;
      case 'b': out += '\b'; break;
      case 'f': out += '\f'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 't': out += '\t'; break;
      case 'v': out += '\v'; break;
      default:
        if (c >= '0' && c <= '7') {
          int value = 0;
          int digits = 0;
          while (digits < 3 && i < path.size() && path[i] >= '0' &&
                 path[i] <= '7') {
            value = value * 8 + (path[i] - '0');
            ++i;
            ++digits;
          }
          --i;
          out += static_cast<char>(value);
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::vector<ChangeEvent> parse_log(std::string_view log) {
  struct Commit {
    std::string id;
    RawUser author;
    std::vector<ChangeEvent> changes;
  };
  std::vector<Commit> commits;  // newest first

  for (std::string_view line : split(log, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (is_commit_header(line)) {
      auto first = line.find('\t');
      auto last = line.rfind('\t');
      Commit c;
      c.id = std::string(line.substr(0, first));
      if (last > first) {
        c.author.name = std::string(line.substr(first + 1, last - first - 1));
        c.author.email = std::string(line.substr(last + 1));
      } else {
        c.author.name = std::string(line.substr(first + 1));
      }
      commits.push_back(std::move(c));
      continue;
    }
    if (commits.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() < 2 || fields[0].empty()) continue;
    ChangeEvent e;
    e.commit_id = commits.back().id;
    e.author = commits.back().author;
    switch (fields[0].front()) {
      case 'A':
        e.kind = ChangeKind::kAddition;
        e.path = unquote_path(fields[1]);
        break;
      case 'M':
      case 'T':
        e.kind = ChangeKind::kModification;
        e.path = unquote_path(fields[1]);
        break;
      case 'R':
        if (fields.size() < 3) continue;
        e.kind = ChangeKind::kRename;
        e.old_path = unquote_path(fields[1]);
        e.path = unquote_path(fields[2]);
        break;
      case 'C':
        // A copy starts a new file; its history does not carry over.
        if (fields.size() < 3) continue;
        e.kind = ChangeKind::kAddition;
        e.path = unquote_path(fields[2]);
        break;
      default:
        // Deletions and unmerged entries do not belong to any snapshot
        // file's trace.
        continue;
    }
    commits.back().changes.push_back(std::move(e));
  }

  std::vector<ChangeEvent> events;
  const std::size_t n = commits.size();
  for (std::size_t i = 0; i < n; ++i) {
    Commit& c = commits[n - 1 - i];
    for (ChangeEvent& e : c.changes) {
      e.order = i;
      events.push_back(std::move(e));
    }
  }
  return events;
}

std::vector<ChangeEvent> collect_history(const std::filesystem::path& repo,
                                         const std::string& branch) {
  const std::string commit = resolve_branch(repo, branch);
  return parse_log(run_git(
      repo, {"log", commit, "--no-merges", "--find-renames", "--name-status",
             "--pretty=format:%H%x09%an%x09%ae"}));
}

std::vector<FileTrace> trace_files(const std::vector<ChangeEvent>& events,
                                   const std::vector<std::string>& targets) {
  std::vector<FileTrace> traces(targets.size());
  std::unordered_map<std::string, std::vector<std::size_t>> active;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    traces[t].current_path = targets[t];
    active[targets[t]].push_back(t);
  }

  // Walk newest to oldest one commit at a time. Moves caused by a commit are
  // applied only after all of its changes were matched, so a commit that
  // renames a -> b and adds a new a keeps both files apart.
  std::size_t end = events.size();
  while (end > 0 && !active.empty()) {
    std::size_t begin = end - 1;
    while (begin > 0 && events[begin - 1].order == events[end - 1].order) {
      --begin;
    }
    std::vector<std::pair<std::size_t, std::string>> moves;
    for (std::size_t i = begin; i < end; ++i) {
      const ChangeEvent& e = events[i];
      auto it = active.find(e.path);
      if (it == active.end()) continue;
      for (std::size_t t : it->second) {
        traces[t].events.push_back(e);
        if (e.kind == ChangeKind::kRename) moves.emplace_back(t, e.old_path);
      }
      if (e.kind != ChangeKind::kModification) active.erase(it);
    }
    for (auto& [t, old_path] : moves) active[old_path].push_back(t);
    end = begin;
  }

  for (FileTrace& trace : traces) {
    std::reverse(trace.events.begin(), trace.events.end());
  }
  return traces;
}

MigrationVerdict check_migration(const std::vector<FileTrace>& traces) {
  MigrationVerdict verdict;
  if (traces.empty()) return verdict;

  std::map<std::string, std::size_t> files_per_commit;
  for (const FileTrace& trace : traces) {
    if (trace.complete()) ++files_per_commit[trace.events.front().commit_id];
  }
  std::vector<std::size_t> counts;
  for (const auto& [commit, count] : files_per_commit) counts.push_back(count);
  std::sort(counts.begin(), counts.end(), std::greater<>());

  // Each file is added by exactly one commit, so taking the largest commits
  // first yields the smallest covering set.
  const double total = static_cast<double>(traces.size());
  std::size_t covered = 0;
  for (std::size_t count : counts) {
    covered += count;
    ++verdict.adding_commits;
    verdict.fraction_covered = static_cast<double>(covered) / total;
    if (verdict.fraction_covered > 0.5) break;
  }
  verdict.suspicious = verdict.fraction_covered > 0.5 &&
                       verdict.adding_commits < kMigrationCommitLimit;
  return verdict;
}

}  // namespace truckfactor
