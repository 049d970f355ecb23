#include "truckfactor/truck_factor.hpp"

#include <unordered_map>

#include "truckfactor/errors.hpp"

namespace truckfactor {

std::set<std::string> authored_files(const AuthorFileMap& authors) {
  std::set<std::string> files;
  for (const auto& [dev, authored] : authors) {
    files.insert(authored.begin(), authored.end());
  }
  return files;
}

double coverage(const std::set<std::string>& universe,
                const AuthorFileMap& authors) {
  if (universe.empty()) {
    throw DivisionUndefined("coverage over an empty file universe");
  }
  std::size_t covered = 0;
  for (const std::string& file : authored_files(authors)) {
    if (universe.contains(file)) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(universe.size());
}

DeveloperId top_author(const AuthorFileMap& authors) {
  if (authors.empty()) throw EmptyMap();
  // The map iterates in name order, so the first maximum wins ties.
  auto best = authors.begin();
  for (auto it = std::next(best); it != authors.end(); ++it) {
    if (it->second.size() > best->second.size()) best = it;
  }
  return best->first;
}

TruckFactorResult truck_factor(
    AuthorFileMap authors, double threshold,
    const std::optional<std::set<std::string>>& universe) {
  const std::set<std::string> files =
      universe ? *universe : authored_files(authors);

  TruckFactorResult result;
  result.file_universe_size = files.size();
  if (files.empty()) return result;

  // Authors still standing per file; coverage is maintained incrementally.
  std::unordered_map<std::string, std::size_t> remaining;
  for (const auto& [dev, authored] : authors) {
    for (const std::string& f : authored) {
      if (files.contains(f)) ++remaining[f];
    }
  }
  std::size_t covered = remaining.size();
  const double total = static_cast<double>(files.size());
  result.initial_coverage = static_cast<double>(covered) / total;

  while (!authors.empty()) {
    if (static_cast<double>(covered) / total < threshold) break;
    DeveloperId top = top_author(authors);
    auto node = authors.extract(top);
    for (const std::string& f : node.mapped()) {
      auto it = remaining.find(f);
      if (it != remaining.end() && --it->second == 0) {
        remaining.erase(it);
        --covered;
      }
    }
    result.removed.push_back(Removal{std::move(top), node.mapped().size(),
                                     static_cast<double>(covered) / total});
    ++result.tf;
  }
  return result;
}

}  // namespace truckfactor
