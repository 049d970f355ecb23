#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "truckfactor/errors.hpp"
#include "truckfactor/identity.hpp"

using namespace truckfactor;

namespace {

// Textbook full-matrix edit distance over bytes; test inputs are ASCII.
std::size_t reference_distance(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u)});
    }
  }
  return d[a.size()][b.size()];
}

std::string random_string(std::mt19937& rng, std::size_t max_len,
                          std::string_view alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(len(rng), ' ');
  for (char& c : s) c = alphabet[pick(rng)];
  return s;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Partition of `users` as sets of member indices, for comparing groupings.
std::set<std::set<std::size_t>> partition_of(const std::vector<RawUser>& users,
                                             const AliasMap& map) {
  std::map<DeveloperId, std::set<std::size_t>> groups;
  for (std::size_t i = 0; i < users.size(); ++i) {
    groups[map.resolve(users[i])].insert(i);
  }
  std::set<std::set<std::size_t>> out;
  for (auto& [id, members] : groups) out.insert(members);
  return out;
}

// Brute-force closure of the merge relation, independent of the resolver.
std::set<std::set<std::size_t>> reference_partition(
    const std::vector<RawUser>& users) {
  const std::size_t n = users.size();
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), std::size_t{0});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        bool same_email = !users[i].email.empty() &&
                          lower(users[i].email) == lower(users[j].email);
        bool close_names =
            reference_distance(lower(users[i].name), lower(users[j].name)) <= 1;
        if ((same_email || close_names) && label[i] != label[j]) {
          std::size_t from = std::max(label[i], label[j]);
          std::size_t to = std::min(label[i], label[j]);
          for (auto& l : label) {
            if (l == from) l = to;
          }
          changed = true;
        }
      }
    }
  }
  std::map<std::size_t, std::set<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[label[i]].insert(i);
  std::set<std::set<std::size_t>> out;
  for (auto& [l, members] : groups) out.insert(members);
  return out;
}

std::vector<RawUser> random_users(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 9);
  std::uniform_int_distribution<int> email_pick(0, 5);
  std::set<RawUser> unique;
  int n = count(rng);
  while (static_cast<int>(unique.size()) < n) {
    std::string name = random_string(rng, 4, "abAB.-");
    int e = email_pick(rng);
    std::string email = e == 0 ? "" : "u" + std::to_string(e) + "@x.org";
    unique.insert(RawUser{name, email});
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

TEST_CASE("levenshtein examples") {
  CHECK(levenshtein("Bob.Rob", "Bob Rob") == 1);
  CHECK(levenshtein("abc", "abc") == 0);
  CHECK(levenshtein("kitten", "sitting") == 3);
  CHECK(levenshtein("", "abc") == 3);
  CHECK(levenshtein("abc", "") == 3);
}

TEST_CASE("levenshtein counts code points, not bytes") {
  CHECK(levenshtein("José", "Jose") == 1);
  CHECK(levenshtein("Jürgen", "Jurgen") == 1);
  CHECK(levenshtein("日本", "日本語") == 1);
}

TEST_CASE("levenshtein agrees with reference and obeys metric laws") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::string a = random_string(rng, 8, "abc");
    std::string b = random_string(rng, 8, "abc");
    std::string c = random_string(rng, 8, "abc");
    std::size_t ab = levenshtein(a, b);
    CHECK(ab == reference_distance(a, b));
    CHECK(ab == levenshtein(b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(levenshtein(a, c) <= ab + levenshtein(b, c));
  }
}

TEST_CASE("fold_name normalizes case, whitespace and composition") {
  CHECK(fold_name("  Bob Rob ") == fold_name("bob rob"));
  // precomposed vs combining acute accent
  CHECK(fold_name("Jos\xC3\xA9") == fold_name("Jose\xCC\x81"));
  CHECK(fold_name("STRASSE") == fold_name("strasse"));
}

TEST_CASE("resolve_aliases merges users sharing an email") {
  AliasMap map = resolve_aliases(std::set<RawUser>{{"Bob Rob", "bob@x.com"},
                                                   {"Bobby", "bob@x.com"}});
  REQUIRE(map.size() == 1);
  CHECK(map.developers()[0].members.size() == 2);
}

TEST_CASE("email grouping is case-insensitive") {
  AliasMap map = resolve_aliases(std::set<RawUser>{{"Ann", "Ann@X.com"},
                                                   {"Zed", "ann@x.COM"}});
  CHECK(map.size() == 1);
}

TEST_CASE("resolve_aliases merges names one edit apart") {
  AliasMap map = resolve_aliases(std::set<RawUser>{{"Bob.Rob", "a@x.com"},
                                                   {"Bob Rob", "b@y.com"}});
  CHECK(map.size() == 1);
}

TEST_CASE("resolve_aliases keeps distinct developers apart") {
  AliasMap map = resolve_aliases(std::set<RawUser>{{"Alice", "a@x.com"},
                                                   {"Carol", "c@y.com"}});
  CHECK(map.size() == 2);
}

TEST_CASE("empty emails never group users") {
  AliasMap map = resolve_aliases(
      std::set<RawUser>{{"Alice", ""}, {"Carol", ""}, {"Dave", ""}});
  CHECK(map.size() == 3);
}

TEST_CASE("merging is transitive") {
  // A~B by email, B~C by name, C~D by email: one developer.
  AliasMap map = resolve_aliases(std::set<RawUser>{{"Ann", "ann@x"},
                                                   {"Jim Beam", "ann@x"},
                                                   {"Jim Bean", "jb@y"},
                                                   {"Zoe", "jb@y"}});
  CHECK(map.size() == 1);
}

TEST_CASE("canonical name is the busiest member, ties by name") {
  std::map<RawUser, std::size_t> commits{{{"bob", "b@x"}, 3},
                                         {{"Robert", "b@x"}, 10},
                                         {{"Bobby", "b@x"}, 10}};
  AliasMap map = resolve_aliases(commits);
  REQUIRE(map.size() == 1);
  CHECK(map.developers()[0].id.name == "Bobby");
}

TEST_CASE("overrides force a canonical name and merge") {
  std::set<RawUser> users{{"alice", "a@one.org"},
                          {"A. Smith", "smith@two.org"},
                          {"Carol", "c@x"}};
  AliasOptions options;
  options.overrides = parse_alias_overrides(
      "# comment\n"
      "a@one.org => Alice Smith\n"
      "A. Smith => Alice Smith\n");
  AliasMap map = resolve_aliases(users, options);
  CHECK(map.size() == 2);
  CHECK(map.resolve({"alice", "a@one.org"}).name == "Alice Smith");
  CHECK(map.resolve({"A. Smith", "smith@two.org"}).name == "Alice Smith");
  CHECK(map.resolve({"Carol", "c@x"}).name == "Carol");
}

TEST_CASE("override names collide with natural names only by merging") {
  // Override target equals another user's name: they become one developer.
  std::set<RawUser> users{{"al", "al@x"}, {"Alice", "alice@y"}};
  AliasOptions options;
  options.overrides = {{"al@x", "Alice"}};
  AliasMap map = resolve_aliases(users, options);
  CHECK(map.size() == 1);
}

TEST_CASE("malformed override file") {
  CHECK_THROWS_AS(parse_alias_overrides("no arrow here\n"), ConfigError);
  CHECK_THROWS_AS(parse_alias_overrides(" => name\n"), ConfigError);
  CHECK(parse_alias_overrides("\n# only comments\n").empty());
}

TEST_CASE("unknown users resolve by email, then by name") {
  AliasMap map = resolve_aliases(std::set<RawUser>{{"Alice", "a@x"}});
  CHECK(map.resolve({"Somebody", "A@X"}).name == "Alice");
  CHECK(map.resolve({"alice", "other@z"}).name == "Alice");
  CHECK(map.resolve({"Zed", "z@z"}).name == "Zed");
  CHECK_FALSE(map.find({"Zed", "z@z"}).has_value());
}

TEST_CASE("similar-name merging can be turned off for review") {
  std::set<RawUser> users{{"Bob.Rob", "a@x.com"}, {"Bob Rob", "b@y.com"},
                          {"Carol", "c@y.com"}};
  AliasOptions options;
  options.merge_similar_names = false;
  CHECK(resolve_aliases(users, options).size() == 3);

  auto candidates = alias_candidates(users);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].distance == 1);
  CHECK(candidates[0].first.name == "Bob Rob");
  CHECK(candidates[0].second.name == "Bob.Rob");
}

TEST_CASE("partition matches a brute-force closure on random users") {
  std::mt19937 rng(11);
  for (int round = 0; round < 300; ++round) {
    auto users = random_users(rng);
    AliasMap map =
        resolve_aliases(std::set<RawUser>(users.begin(), users.end()));
    CHECK(partition_of(users, map) == reference_partition(users));
  }
}

TEST_CASE("resolve_aliases is idempotent and order independent") {
  std::mt19937 rng(3);
  for (int round = 0; round < 200; ++round) {
    auto users = random_users(rng);
    std::map<RawUser, std::size_t> commits;
    std::uniform_int_distribution<std::size_t> c(0, 4);
    for (const auto& u : users) commits[u] = c(rng);
    AliasMap first = resolve_aliases(commits);

    // Canonicalize every user's name and resolve again.
    std::vector<RawUser> canonical;
    std::set<RawUser> canonical_set;
    for (const auto& u : users) {
      canonical.push_back(RawUser{first.resolve(u).name, u.email});
      canonical_set.insert(canonical.back());
    }
    AliasMap second = resolve_aliases(canonical_set);
    CHECK(partition_of(users, first) == partition_of(canonical, second));

    // No two developers share an email or a distance-1 name.
    const auto& devs = first.developers();
    for (std::size_t i = 0; i < devs.size(); ++i) {
      for (std::size_t j = i + 1; j < devs.size(); ++j) {
        for (const auto& a : devs[i].members) {
          for (const auto& b : devs[j].members) {
            CHECK_FALSE((!a.email.empty() && fold_email(a.email) == fold_email(b.email)));
            CHECK(levenshtein(fold_name(a.name), fold_name(b.name)) > 1);
          }
        }
      }
    }

    std::vector<RawUser> shuffled = users;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::map<RawUser, std::size_t> reordered;
    for (const auto& u : shuffled) reordered.emplace(u, commits[u]);
    AliasMap again = resolve_aliases(reordered);
    CHECK(again.developers().size() == first.developers().size());
    for (std::size_t i = 0; i < again.developers().size(); ++i) {
      CHECK(again.developers()[i].id == first.developers()[i].id);
      CHECK(again.developers()[i].members == first.developers()[i].members);
    }
  }
}
