#include "truckfactor/analysis.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <random>
#include <set>

#include "truckfactor/errors.hpp"
#include "truckfactor/history.hpp"
#include "truckfactor/identity.hpp"
#include "truckfactor/truck_factor.hpp"

namespace truckfactor {
namespace {

FilterRules build_rules(const AnalysisConfig& config) {
  FilterRules rules;
  if (config.builtin_patterns) rules.builtin_vendored = builtin_vendored_patterns();
  if (config.pattern_file) {
    rules.ignore_globs = load_pattern_file(*config.pattern_file);
  }
  if (config.ignore_file) {
    rules.ignore_paths = load_pattern_file(*config.ignore_file);
  }
  return rules;
}

BlameAgreement compare_with_blame(
    const AnalysisConfig& config, const AliasMap& aliases,
    const std::vector<AuthorshipRecord>& records) {
  std::map<std::string, std::vector<DeveloperId>> authors_of;
  for (const AuthorshipRecord& r : records) {
    if (r.is_author) authors_of[r.file].push_back(r.developer);
  }
  std::vector<std::string> candidates;
  for (const auto& [file, devs] : authors_of) candidates.push_back(file);

  std::vector<std::string> sample;
  std::mt19937_64 rng(config.seed);
  std::sample(candidates.begin(), candidates.end(), std::back_inserter(sample),
              std::min(config.blame_sample_size, candidates.size()), rng);

  BlameAgreement agreement;
  agreement.seed = config.seed;
  agreement.sampled_files = sample.size();
  std::size_t top1 = 0;
  std::size_t top3 = 0;
  std::size_t lower = 0;
  std::size_t unmatched = 0;
  for (const std::string& file : sample) {
    std::vector<BlameEntry> ranking;
    try {
      ranking = blame_rank(config.repo_path, file, aliases, config.branch);
    } catch (const BlameFailed&) {
      ++agreement.failed_files;
      continue;
    }
    for (const DeveloperId& author : authors_of[file]) {
      ++agreement.pairs;
      auto it = std::find_if(ranking.begin(), ranking.end(),
                             [&](const BlameEntry& e) {
                               return e.developer == author;
                             });
      if (it == ranking.end()) {
        ++unmatched;
        continue;
      }
      auto rank = static_cast<std::size_t>(it - ranking.begin()) + 1;
      if (rank == 1) ++top1;
      if (rank <= 3) {
        ++top3;
      } else {
        ++lower;
      }
    }
  }
  if (agreement.pairs > 0) {
    const double pairs = static_cast<double>(agreement.pairs);
    agreement.top1 = static_cast<double>(top1) / pairs;
    agreement.top3 = static_cast<double>(top3) / pairs;
    agreement.beyond_top3 = static_cast<double>(lower) / pairs;
    agreement.unmatched = static_cast<double>(unmatched) / pairs;
  }
  return agreement;
}

}  // namespace

void AnalysisConfig::validate() const {
  if (repo_path.empty()) throw ConfigError("no repository path given");
  if (!(thresholds.k > 0.0 && thresholds.k <= 1.0)) {
    throw ConfigError("k must lie in (0, 1]");
  }
  if (!(thresholds.coverage > 0.0 && thresholds.coverage < 1.0)) {
    throw ConfigError("coverage threshold must lie in (0, 1)");
  }
  if (blame_sample_size == 0) throw ConfigError("blame sample size must be > 0");
}

Report run(const AnalysisConfig& config) {
  config.validate();

  Report report;
  report.repository = config.repo_path.string();
  report.branch = config.branch.empty() ? "HEAD" : config.branch;
  report.head_commit = resolve_branch(config.repo_path, config.branch);
  report.patterns_version =
      config.builtin_patterns ? std::string(kBuiltinPatternsVersion) : "none";
  report.thresholds = config.thresholds;
  report.universe = config.universe;

  // Step 1: target files.
  const std::vector<std::string> targets =
      list_snapshot_files(config.repo_path, build_rules(config), config.branch);

  // Step 2: aliases, over every user seen in history.
  const std::vector<ChangeEvent> events =
      collect_history(config.repo_path, config.branch);
  std::map<RawUser, std::set<std::string>> commits_by_user;
  std::set<std::string> commit_ids;
  for (const ChangeEvent& e : events) {
    commits_by_user[e.author].insert(e.commit_id);
    commit_ids.insert(e.commit_id);
  }
  std::map<RawUser, std::size_t> commit_counts;
  std::set<RawUser> users;
  for (const auto& [user, ids] : commits_by_user) {
    commit_counts.emplace(user, ids.size());
    users.insert(user);
  }
  AliasOptions alias_options;
  alias_options.merge_similar_names = !config.alias_report;
  if (config.alias_file) {
    alias_options.overrides = load_alias_overrides(*config.alias_file);
  }
  const AliasMap aliases = resolve_aliases(commit_counts, alias_options);
  if (config.alias_report) report.alias_candidates = alias_candidates(users);

  // Step 3: traces.
  const std::vector<FileTrace> traces = trace_files(events, targets);

  // Step 4: authorship.
  std::vector<AuthorshipRecord> records = compute_authorship(traces, aliases);
  const AuthorFileMap authors = select_authors(records, config.thresholds);

  // Step 5: truck factor.
  std::optional<std::set<std::string>> universe;
  if (config.universe == UniverseMode::kAllFiles) {
    universe.emplace(targets.begin(), targets.end());
  }
  const TruckFactorResult tf =
      truck_factor(authors, config.thresholds.coverage, universe);

  report.truck_factor = tf.tf;
  for (const Removal& r : tf.removed) {
    report.tf_authors.push_back(
        TfAuthor{r.developer.name, r.files_authored, r.coverage_after});
  }
  report.initial_coverage = tf.initial_coverage;
  report.file_universe_size = tf.file_universe_size;
  report.low_initial_coverage =
      tf.low_initial_coverage(config.thresholds.coverage);

  std::set<DeveloperId> developers;
  for (const Developer& d : aliases.developers()) developers.insert(d.id);
  report.author_ratio =
      developers.empty() ? 0.0 : author_ratio(developers, authors);

  report.totals.developers = developers.size();
  report.totals.authors = authors.size();
  report.totals.files = targets.size();
  report.totals.files_without_addition = static_cast<std::size_t>(
      std::count_if(traces.begin(), traces.end(),
                    [](const FileTrace& t) { return !t.complete(); }));
  report.totals.commits = commit_ids.size();

  if (config.check_migration) {
    report.migration = check_migration(traces);
    if (report.migration->suspicious) {
      report.warnings.push_back(
          "history looks migrated: more than half of the files were added in " +
          std::to_string(report.migration->adding_commits) +
          " commit(s); authorship and truck factor are unreliable");
    }
  }
  if (report.low_initial_coverage) {
    report.warnings.push_back(
        "authored files cover less than the coverage threshold before any "
        "removal; truck factor reported as 0");
  }
  if (config.blame_compare) {
    report.blame_agreement = compare_with_blame(config, aliases, records);
  }
  return report;
}

}  // namespace truckfactor
