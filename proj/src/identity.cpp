#include "truckfactor/identity.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "truckfactor/errors.hpp"

namespace truckfactor {
namespace {

std::u32string to_code_points(const icu::UnicodeString& s) {
  std::u32string out;
  out.reserve(static_cast<std::size_t>(s.length()));
  for (int32_t i = 0; i < s.length();) {
    UChar32 c = s.char32At(i);
    out.push_back(static_cast<char32_t>(c));
    i += U16_LENGTH(c);
  }
  return out;
}

std::u32string decode_utf8(std::string_view s) {
  return to_code_points(icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size()))));
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

// True when a and b are at most one edit apart. Linear time.
bool within_one_edit(const std::u32string& a, const std::u32string& b) {
  const std::u32string& shorter = a.size() <= b.size() ? a : b;
  const std::u32string& longer = a.size() <= b.size() ? b : a;
  if (longer.size() - shorter.size() > 1) return false;
  std::size_t i = 0;
  while (i < shorter.size() && shorter[i] == longer[i]) ++i;
  if (i == shorter.size()) return true;
  if (shorter.size() == longer.size()) {
    return std::equal(shorter.begin() + i + 1, shorter.end(),
                      longer.begin() + i + 1);
  }
  return std::equal(shorter.begin() + i, shorter.end(), longer.begin() + i + 1);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller index always becomes the root so the structure does not
  // depend on union order.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct Node {
  RawUser user;
  std::size_t commits = 0;
  std::u32string folded_name;
  std::string folded_email;
  // Set for nodes standing in for an override's canonical name.
  bool is_override = false;
};

// Unites nodes whose folded names are identical and, when `similar` is set,
// those within one edit.
void unite_names(const std::vector<Node>& nodes, DisjointSets& sets,
                 bool similar) {
  std::map<std::u32string, std::size_t> first_with_name;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [it, inserted] = first_with_name.emplace(nodes[i].folded_name, i);
    if (!inserted) sets.unite(it->second, i);
  }
  if (!similar) return;

  std::map<std::size_t, std::vector<const std::pair<const std::u32string,
                                                    std::size_t>*>>
      by_length;
  for (const auto& entry : first_with_name) {
    by_length[entry.first.size()].push_back(&entry);
  }
  for (const auto& [length, names] : by_length) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (within_one_edit(names[i]->first, names[j]->first)) {
          sets.unite(names[i]->second, names[j]->second);
        }
      }
    }
    auto longer = by_length.find(length + 1);
    if (longer == by_length.end()) continue;
    for (const auto* a : names) {
      for (const auto* b : longer->second) {
        if (within_one_edit(a->first, b->first)) {
          sets.unite(a->second, b->second);
        }
      }
    }
  }
}

bool override_matches(const AliasOverride& o, const Node& node) {
  if (node.is_override) return false;
  if (!node.folded_email.empty() && fold_email(o.key) == node.folded_email) {
    return true;
  }
  return fold_name(o.key) == node.folded_name;
}

}  // namespace

std::size_t levenshtein(const std::u32string& a, const std::u32string& b) {
  if (a.size() < b.size()) return levenshtein(b, a);
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t above = row[j];
      std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + cost});
      diagonal = above;
    }
  }
  return row[b.size()];
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  return levenshtein(decode_utf8(a), decode_utf8(b));
}

std::u32string fold_name(std::string_view name) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(icu::StringPiece(
      name.data(), static_cast<int32_t>(name.size())));
  text.trim();
  if (U_SUCCESS(status)) {
    icu::UnicodeString normalized = nfc->normalize(text, status);
    if (U_SUCCESS(status)) text = normalized;
  }
  text.foldCase();
  return to_code_points(text);
}

std::string fold_email(std::string_view email) {
  std::string out(trim(email));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

std::vector<AliasOverride> parse_alias_overrides(std::string_view text) {
  std::vector<AliasOverride> result;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto arrow = view.find("=>");
    if (arrow == std::string_view::npos) {
      throw ConfigError("alias override line " + std::to_string(line_no) +
                        ": expected '<email-or-name> => <canonical name>'");
    }
    AliasOverride entry{std::string(trim(view.substr(0, arrow))),
                        std::string(trim(view.substr(arrow + 2)))};
    if (entry.key.empty() || entry.canonical_name.empty()) {
      throw ConfigError("alias override line " + std::to_string(line_no) +
                        ": empty key or canonical name");
    }
    result.push_back(std::move(entry));
  }
  return result;
}

std::vector<AliasOverride> load_alias_overrides(
    const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot read alias file " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_alias_overrides(buffer.str());
}

AliasMap::AliasMap(std::vector<Developer> developers)
    : developers_(std::move(developers)) {
  std::sort(developers_.begin(), developers_.end(),
            [](const Developer& a, const Developer& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < developers_.size(); ++i) {
    for (const RawUser& u : developers_[i].members) {
      by_user_.emplace(u, i);
      std::string email = fold_email(u.email);
      if (!email.empty()) by_email_.emplace(email, i);
      by_folded_name_.emplace(fold_name(u.name), i);
    }
  }
}

std::optional<DeveloperId> AliasMap::find(const RawUser& user) const {
  auto it = by_user_.find(user);
  if (it == by_user_.end()) return std::nullopt;
  return developers_[it->second].id;
}

DeveloperId AliasMap::resolve(const RawUser& user) const {
  if (auto id = find(user)) return *id;
  std::string email = fold_email(user.email);
  if (!email.empty()) {
    if (auto it = by_email_.find(email); it != by_email_.end()) {
      return developers_[it->second].id;
    }
  }
  if (auto it = by_folded_name_.find(fold_name(user.name));
      it != by_folded_name_.end()) {
    return developers_[it->second].id;
  }
  return DeveloperId{user.name};
}

AliasMap resolve_aliases(const std::map<RawUser, std::size_t>& commits,
                         const AliasOptions& options) {
  std::vector<Node> nodes;
  nodes.reserve(commits.size() + options.overrides.size());
  for (const auto& [user, count] : commits) {
    nodes.push_back(
        Node{user, count, fold_name(user.name), fold_email(user.email)});
  }
  const std::size_t user_count = nodes.size();
  for (const AliasOverride& o : options.overrides) {
    nodes.push_back(Node{RawUser{o.canonical_name, ""}, 0,
                         fold_name(o.canonical_name), "", true});
  }

  DisjointSets sets(nodes.size());
  for (std::size_t i = 0; i < options.overrides.size(); ++i) {
    for (std::size_t j = 0; j < user_count; ++j) {
      if (override_matches(options.overrides[i], nodes[j])) {
        sets.unite(user_count + i, j);
      }
    }
  }
  std::map<std::string, std::size_t> first_with_email;
  for (std::size_t i = 0; i < user_count; ++i) {
    if (nodes[i].folded_email.empty()) continue;
    auto [it, inserted] = first_with_email.emplace(nodes[i].folded_email, i);
    if (!inserted) sets.unite(it->second, i);
  }
  unite_names(nodes, sets, options.merge_similar_names);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    groups[sets.find(i)].push_back(i);
  }

  std::vector<Developer> developers;
  for (const auto& [root, members] : groups) {
    Developer dev;
    const Node* chosen = nullptr;
    for (std::size_t i : members) {
      const Node& n = nodes[i];
      if (!n.is_override) dev.members.insert(n.user);
      auto better = [&](const Node& candidate) {
        if (chosen == nullptr) return true;
        if (candidate.is_override != chosen->is_override) {
          return candidate.is_override;
        }
        if (!candidate.is_override && candidate.commits != chosen->commits) {
          return candidate.commits > chosen->commits;
        }
        return candidate.user.name < chosen->user.name;
      };
      if (better(n)) chosen = &n;
    }
    // An override that matched nobody yields no developer.
    if (dev.members.empty()) continue;
    dev.id = DeveloperId{chosen->user.name};
    developers.push_back(std::move(dev));
  }
  return AliasMap(std::move(developers));
}

AliasMap resolve_aliases(const std::set<RawUser>& users,
                         const AliasOptions& options) {
  std::map<RawUser, std::size_t> commits;
  for (const RawUser& u : users) commits.emplace(u, 0);
  return resolve_aliases(commits, options);
}

std::vector<AliasCandidate> alias_candidates(const std::set<RawUser>& users) {
  AliasOptions exact_only;
  exact_only.merge_similar_names = false;
  AliasMap grouped = resolve_aliases(users, exact_only);

  struct Entry {
    const RawUser* user;
    std::size_t group;
    std::u32string folded;
  };
  std::vector<Entry> entries;
  for (const RawUser& u : users) {
    DeveloperId id = grouped.resolve(u);
    auto it = std::lower_bound(
        grouped.developers().begin(), grouped.developers().end(), id,
        [](const Developer& d, const DeveloperId& key) { return d.id < key; });
    entries.push_back(Entry{
        &u, static_cast<std::size_t>(it - grouped.developers().begin()),
        fold_name(u.name)});
  }

  std::set<AliasCandidate> found;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (entries[i].group == entries[j].group) continue;
      if (!within_one_edit(entries[i].folded, entries[j].folded)) continue;
      found.insert(AliasCandidate{*entries[i].user, *entries[j].user,
                                  levenshtein(entries[i].folded,
                                              entries[j].folded)});
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace truckfactor
