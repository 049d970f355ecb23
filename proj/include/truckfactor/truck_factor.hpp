#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "truckfactor/authorship.hpp"

namespace truckfactor {

struct Removal {
  DeveloperId developer;
  std::size_t files_authored = 0;
  double coverage_after = 0.0;

  bool operator==(const Removal&) const = default;
};

struct TruckFactorResult {
  std::size_t tf = 0;
  std::vector<Removal> removed;
  double initial_coverage = 0.0;
  std::size_t file_universe_size = 0;

  // Coverage was already under the threshold before removing anyone.
  bool low_initial_coverage(double threshold) const {
    return initial_coverage < threshold;
  }

  bool operator==(const TruckFactorResult&) const = default;
};

// Every file authored by someone in the map.
std::set<std::string> authored_files(const AuthorFileMap& authors);

// Fraction of `universe` with at least one author left in `authors`.
double coverage(const std::set<std::string>& universe,
                const AuthorFileMap& authors);

// Developer with the most authored files; ties go to the smallest name.
DeveloperId top_author(const AuthorFileMap& authors);

// Greedy removal of top authors while coverage stays at or above
// `threshold`. The universe defaults to the authored files.
TruckFactorResult truck_factor(
    AuthorFileMap authors, double threshold = 0.5,
    const std::optional<std::set<std::string>>& universe = std::nullopt);

}  // namespace truckfactor
