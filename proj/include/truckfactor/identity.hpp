#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace truckfactor {

// A (name, email) pair exactly as recorded by git.
struct RawUser {
  std::string name;
  std::string email;

  auto operator<=>(const RawUser&) const = default;
};

// A canonical developer. Identity is the canonical name: the resolver never
// produces two developers with the same one.
struct DeveloperId {
  std::string name;

  auto operator<=>(const DeveloperId&) const = default;
};

struct Developer {
  DeveloperId id;
  std::set<RawUser> members;
};

// Number of single code-point insertions, deletions or substitutions that
// turn `a` into `b`. Inputs are UTF-8; invalid sequences count as U+FFFD.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Same metric over already decoded code points.
std::size_t levenshtein(const std::u32string& a, const std::u32string& b);

// NFC-normalised, trimmed and case-folded form of a developer name, as code
// points. Two names are alias candidates when their folded forms are within
// distance 1.
std::u32string fold_name(std::string_view name);

std::string fold_email(std::string_view email);

// One `<email-or-name> => <canonical name>` line of an override file.
struct AliasOverride {
  std::string key;
  std::string canonical_name;
};

std::vector<AliasOverride> parse_alias_overrides(std::string_view text);
std::vector<AliasOverride> load_alias_overrides(
    const std::filesystem::path& file);

struct AliasOptions {
  // When false, only email grouping and overrides merge users; name
  // similarity is reported through alias_candidates() instead.
  bool merge_similar_names = true;
  std::vector<AliasOverride> overrides;
};

class AliasMap {
 public:
  AliasMap() = default;
  AliasMap(std::vector<Developer> developers);

  // Developer a recorded user belongs to. Users never seen by the resolver
  // (e.g. ones only present in blame output) are matched by email, then by
  // folded name; failing both they stand alone under their own name.
  DeveloperId resolve(const RawUser& user) const;

  std::optional<DeveloperId> find(const RawUser& user) const;

  const std::vector<Developer>& developers() const { return developers_; }
  std::size_t size() const { return developers_.size(); }

 private:
  std::vector<Developer> developers_;  // sorted by id
  std::map<RawUser, std::size_t> by_user_;
  std::map<std::string, std::size_t> by_email_;
  std::map<std::u32string, std::size_t> by_folded_name_;
};

// Groups users into developers. `commits` gives each user's commit count,
// used to pick the canonical name (most commits, then smallest name).
AliasMap resolve_aliases(const std::map<RawUser, std::size_t>& commits,
                         const AliasOptions& options = {});

AliasMap resolve_aliases(const std::set<RawUser>& users,
                         const AliasOptions& options = {});

// A pair of developers, after email grouping, whose names are within
// distance 1 of each other.
struct AliasCandidate {
  RawUser first;
  RawUser second;
  std::size_t distance = 0;

  auto operator<=>(const AliasCandidate&) const = default;
};

std::vector<AliasCandidate> alias_candidates(const std::set<RawUser>& users);

}  // namespace truckfactor
