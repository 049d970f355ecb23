#include "truckfactor/authorship.hpp"

#include <algorithm>
#include <cmath>

#include "truckfactor/errors.hpp"
#include "truckfactor/process.hpp"

namespace truckfactor {

double doa(int fa, std::size_t dl, std::size_t ac) {
  using namespace doa_weights;
  return kIntercept + kFirstAuthorship * fa +
         kDeliveries * static_cast<double>(dl) -
         kAcceptances * std::log1p(static_cast<double>(ac));
}

std::vector<ChangeCounts> accumulate(const FileTrace& trace,
                                     const AliasMap& aliases) {
  std::map<DeveloperId, ChangeCounts> counts;
  for (const ChangeEvent& e : trace.events) {
    DeveloperId dev = aliases.resolve(e.author);
    auto [it, inserted] = counts.try_emplace(dev);
    if (inserted) it->second.developer = dev;
    ++it->second.dl;
  }
  if (trace.complete()) {
    counts[aliases.resolve(trace.events.front().author)].fa = 1;
  }
  const std::size_t total = trace.events.size();
  std::vector<ChangeCounts> result;
  result.reserve(counts.size());
  for (auto& [dev, c] : counts) {
    c.ac = total - c.dl;
    result.push_back(std::move(c));
  }
  return result;
}

void normalize(std::span<AuthorshipRecord> file_records) {
  if (file_records.empty()) return;
  double max = file_records.front().doa_abs;
  for (const auto& r : file_records) max = std::max(max, r.doa_abs);
  for (auto& r : file_records) {
    if (r.doa_abs == max) {
      r.doa_norm = 1.0;
    } else if (max != 0.0) {
      r.doa_norm = r.doa_abs / max;
    } else {
      r.doa_norm = 0.0;
    }
  }
}

AuthorFileMap select_authors(std::span<AuthorshipRecord> records,
                             const Thresholds& thresholds) {
  AuthorFileMap authors;
  for (auto& r : records) {
    r.is_author = r.doa_abs > 0.0 && r.doa_norm > thresholds.k &&
                  r.doa_abs >= thresholds.m;
    if (r.is_author) authors[r.developer].insert(r.file);
  }
  return authors;
}

std::vector<AuthorshipRecord> compute_authorship(
    const std::vector<FileTrace>& traces, const AliasMap& aliases) {
  std::vector<const FileTrace*> ordered;
  for (const auto& t : traces) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const FileTrace* a, const FileTrace* b) {
              return a->current_path < b->current_path;
            });

  std::vector<AuthorshipRecord> records;
  for (const FileTrace* trace : ordered) {
    const std::size_t first = records.size();
    for (ChangeCounts& c : accumulate(*trace, aliases)) {
      AuthorshipRecord r;
      r.developer = std::move(c.developer);
      r.file = trace->current_path;
      r.fa = c.fa;
      r.dl = c.dl;
      r.ac = c.ac;
      r.doa_abs = doa(c.fa, c.dl, c.ac);
      records.push_back(std::move(r));
    }
    normalize(std::span(records).subspan(first));
  }
  return records;
}

std::vector<BlameEntry> parse_blame(std::string_view porcelain,
                                    const AliasMap& aliases,
                                    const std::string& file) {
  std::map<RawUser, std::size_t> per_user;
  RawUser current;
  std::size_t pos = 0;
  while (pos < porcelain.size()) {
    auto end = porcelain.find('\n', pos);
    if (end == std::string_view::npos) end = porcelain.size();
    std::string_view line = porcelain.substr(pos, end - pos);
    pos = end + 1;

    if (line.starts_with("author ")) {
      current.name = std::string(line.substr(7));
    } else if (line.starts_with("author-mail ")) {
      std::string_view mail = line.substr(12);
      if (mail.size() >= 2 && mail.front() == '<' && mail.back() == '>') {
        mail = mail.substr(1, mail.size() - 2);
      }
      current.email = std::string(mail);
    } else if (line.starts_with("\t")) {
      if (line.find('\0') != std::string_view::npos) {
        throw BlameFailed(file, "binary content");
      }
      ++per_user[current];
    }
  }

  std::map<DeveloperId, std::size_t> per_dev;
  for (const auto& [user, lines] : per_user) {
    per_dev[aliases.resolve(user)] += lines;
  }
  std::vector<BlameEntry> ranking;
  for (const auto& [dev, lines] : per_dev) ranking.push_back({dev, lines});
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const BlameEntry& a, const BlameEntry& b) {
                     return a.lines > b.lines;
                   });
  return ranking;
}

std::vector<BlameEntry> blame_rank(const std::filesystem::path& repo,
                                   const std::string& file,
                                   const AliasMap& aliases,
                                   const std::string& branch) {
  const std::string commit = resolve_branch(repo, branch);
  ProcessResult r =
      try_git(repo, {"blame", "--line-porcelain", commit, "--", file});
  if (r.exit_code != 0) throw BlameFailed(file, r.err);
  return parse_blame(r.out, aliases, file);
}

double author_ratio(const std::set<DeveloperId>& all_developers,
                    const AuthorFileMap& authors) {
  if (all_developers.empty()) {
    throw DivisionUndefined("author ratio over an empty developer set");
  }
  return static_cast<double>(authors.size()) /
         static_cast<double>(all_developers.size());
}

}  // namespace truckfactor
