#pragma once

// Test-only transcription of the greedy truck factor loop: coverage is
// recomputed from scratch and the top author found by a linear scan of a
// list, with no shared code from the library's implementation.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "truckfactor/truck_factor.hpp"

namespace truckfactor::testing {

struct NaiveEntry {
  std::string author;
  std::vector<std::string> files;
};

inline double naive_coverage(const std::vector<std::string>& system_files,
                             const std::vector<NaiveEntry>& a) {
  std::size_t covered = 0;
  for (const auto& f : system_files) {
    bool has_author = false;
    for (const auto& e : a) {
      if (std::find(e.files.begin(), e.files.end(), f) != e.files.end()) {
        has_author = true;
      }
    }
    if (has_author) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(system_files.size());
}

inline TruckFactorResult naive_truck_factor(std::vector<NaiveEntry> a,
                                            double threshold = 0.5) {
  // Entries are kept sorted by name so "the first one found" is well defined.
  std::sort(a.begin(), a.end(), [](const NaiveEntry& x, const NaiveEntry& y) {
    return x.author < y.author;
  });
  std::vector<std::string> system_files;
  for (const auto& e : a) {
    for (const auto& f : e.files) {
      if (std::find(system_files.begin(), system_files.end(), f) ==
          system_files.end()) {
        system_files.push_back(f);
      }
    }
  }
  TruckFactorResult result;
  result.file_universe_size = system_files.size();
  if (system_files.empty()) return result;
  result.initial_coverage = naive_coverage(system_files, a);
  while (!a.empty()) {
    if (naive_coverage(system_files, a) < threshold) break;
    std::size_t top = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (a[i].files.size() > a[top].files.size()) top = i;
    }
    Removal removal;
    removal.developer = DeveloperId{a[top].author};
    removal.files_authored = a[top].files.size();
    a.erase(a.begin() + static_cast<long>(top));
    removal.coverage_after = naive_coverage(system_files, a);
    result.removed.push_back(removal);
    result.tf += 1;
  }
  return result;
}

// A random author map with up to `max_authors` authors over up to
// `max_files` files, in both representations.
inline std::pair<AuthorFileMap, std::vector<NaiveEntry>> random_author_map(
    std::mt19937& rng, int max_authors = 8, int max_files = 12) {
  std::uniform_int_distribution<int> n_authors(0, max_authors);
  std::uniform_int_distribution<int> n_files(1, max_files);
  const int authors = n_authors(rng);
  const int files = n_files(rng);
  std::bernoulli_distribution owns(0.3);
  std::uniform_int_distribution<int> any_file(0, files - 1);
  AuthorFileMap map;
  std::vector<NaiveEntry> naive;
  for (int a = 0; a < authors; ++a) {
    NaiveEntry e{"dev" + std::to_string(a), {}};
    for (int f = 0; f < files; ++f) {
      if (owns(rng)) e.files.push_back("file" + std::to_string(f));
    }
    if (e.files.empty()) e.files.push_back("file" + std::to_string(any_file(rng)));
    map[DeveloperId{e.author}] =
        std::set<std::string>(e.files.begin(), e.files.end());
    naive.push_back(std::move(e));
  }
  return {std::move(map), std::move(naive)};
}

}  // namespace truckfactor::testing
