// truckfactor: estimate how many developers a Git repository can lose
// before most of its files have no remaining author.

#include <CLI11.hpp>
#include <iostream>

#include "truckfactor/analysis.hpp"
#include "truckfactor/errors.hpp"
#include "truckfactor/report.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitBelowThreshold = 2;

}  // namespace

int main(int argc, char** argv) {
  truckfactor::AnalysisConfig config;
  std::string repo;
  std::string ignore_file;
  std::string pattern_file;
  std::string alias_file;
  std::string universe = "authored";
  std::string format = "text";
  std::size_t fail_under = 0;
  bool no_migration_check = false;
  bool no_builtin_patterns = false;

  CLI::App app{"Estimate the truck factor of a local Git repository."};
  app.add_option("repo-path", repo, "Path to a local clone")->required();
  app.add_option("--branch", config.branch,
                 "Branch or revision to analyse (default: HEAD)");
  app.add_option("--ignore-file", ignore_file,
                 "File listing paths (and directories) to exclude, one per line")
      ->check(CLI::ExistingFile);
  app.add_option("--patterns", pattern_file,
                 "File with extra glob patterns to exclude, one per line")
      ->check(CLI::ExistingFile);
  app.add_flag("--no-builtin-patterns", no_builtin_patterns,
               "Do not exclude the built-in vendored/documentation patterns");
  app.add_option("--aliases", alias_file,
                 "Alias override file: '<email-or-name> => <canonical name>'")
      ->check(CLI::ExistingFile);
  app.add_option("--k", config.thresholds.k,
                 "Normalized DOA threshold (strictly greater)")
      ->capture_default_str();
  app.add_option("--m", config.thresholds.m, "Minimum absolute DOA")
      ->capture_default_str();
  app.add_option("--coverage", config.thresholds.coverage,
                 "Coverage below which the system is considered in trouble")
      ->capture_default_str();
  app.add_option("--universe", universe,
                 "Coverage denominator: files with an author, or all files")
      ->check(CLI::IsMember({"authored", "all-files"}))
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  auto* blame = app.add_flag("--blame-compare", config.blame_compare,
                             "Compare authors against git blame rankings on a "
                             "file sample");
  app.add_option("--seed", config.seed, "Seed for the blame sample")
      ->needs(blame)
      ->capture_default_str();
  app.add_option("--blame-sample", config.blame_sample_size,
                 "Number of files sampled for --blame-compare")
      ->needs(blame)
      ->capture_default_str();
  app.add_flag("--alias-report", config.alias_report,
               "List near-identical names for review instead of merging them");
  app.add_flag("--no-migration-check", no_migration_check,
               "Skip the migrated-history heuristic");
  auto* fail = app.add_option("--fail-under", fail_under,
                              "Exit with status 2 when the truck factor is "
                              "below N");

  CLI11_PARSE(app, argc, argv);

  config.repo_path = repo;
  if (!ignore_file.empty()) config.ignore_file = ignore_file;
  if (!pattern_file.empty()) config.pattern_file = pattern_file;
  if (!alias_file.empty()) config.alias_file = alias_file;
  config.builtin_patterns = !no_builtin_patterns;
  config.check_migration = !no_migration_check;
  if (fail->count() > 0) config.fail_under = fail_under;

  try {
    config.universe = truckfactor::parse_universe_mode(universe);
    config.format = truckfactor::parse_output_format(format);
    truckfactor::Report report = truckfactor::run(config);
    std::cout << truckfactor::emit(report, config.format);
    if (config.fail_under && report.truck_factor < *config.fail_under) {
      std::cerr << "truckfactor: truck factor " << report.truck_factor
                << " is below " << *config.fail_under << "\n";
      return kExitBelowThreshold;
    }
  } catch (const truckfactor::Error& e) {
    std::cerr << "truckfactor: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
