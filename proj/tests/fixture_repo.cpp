#include "fixture_repo.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "truckfactor/process.hpp"

namespace truckfactor::testing {
namespace {

std::filesystem::path make_temp_dir() {
  std::random_device rd;
  auto base = std::filesystem::temp_directory_path();
  for (int attempt = 0; attempt < 100; ++attempt) {
    auto dir = base / ("tf-fixture-" + std::to_string(rd()));
    if (std::filesystem::create_directory(dir)) return dir;
  }
  throw std::runtime_error("cannot create fixture directory");
}

std::vector<std::string> split_args(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

}  // namespace

FixtureRepo::FixtureRepo() : dir_(make_temp_dir()) {
  git("init -q -b main");
  git("config commit.gpgsign false");
  git("config user.name fixture");
  git("config user.email fixture@example.com");
}

FixtureRepo::~FixtureRepo() {
  std::error_code ec;
  std::filesystem::remove_all(dir_, ec);
}

void FixtureRepo::write(const std::string& file, const std::string& content) {
  auto target = dir_ / file;
  std::filesystem::create_directories(target.parent_path());
  std::ofstream(target, std::ios::binary | std::ios::trunc) << content;
}

void FixtureRepo::append(const std::string& file, const std::string& content) {
  std::ofstream(dir_ / file, std::ios::binary | std::ios::app) << content;
}

void FixtureRepo::remove(const std::string& file) {
  std::filesystem::remove(dir_ / file);
}

void FixtureRepo::rename(const std::string& from, const std::string& to) {
  auto target = dir_ / to;
  std::filesystem::create_directories(target.parent_path());
  std::filesystem::rename(dir_ / from, target);
}

std::map<std::string, std::string> FixtureRepo::env_for(const RawUser& author) {
  const std::string date = std::to_string(++timestamp_) + " +0000";
  return {{"GIT_AUTHOR_NAME", author.name},
          {"GIT_AUTHOR_EMAIL", author.email},
          {"GIT_AUTHOR_DATE", date},
          {"GIT_COMMITTER_NAME", author.name},
          {"GIT_COMMITTER_EMAIL", author.email},
          {"GIT_COMMITTER_DATE", date}};
}

std::string FixtureRepo::commit(const RawUser& author,
                                const std::string& message) {
  git("add -A");
  ProcessResult r = run_process(
      {"git", "-C", dir_.string(), "commit", "-q", "--allow-empty", "-m",
       message},
      env_for(author));
  if (r.exit_code != 0) throw std::runtime_error("git commit: " + r.err);
  return git("rev-parse HEAD");
}

void FixtureRepo::checkout_new_branch(const std::string& branch) {
  git("checkout -q -b " + branch);
}

void FixtureRepo::checkout(const std::string& branch) {
  git("checkout -q " + branch);
}

std::string FixtureRepo::merge(const std::string& branch,
                               const RawUser& author) {
  ProcessResult r = run_process({"git", "-C", dir_.string(), "merge", "-q",
                                 "--no-ff", "-m", "merge " + branch, branch},
                                env_for(author));
  if (r.exit_code != 0) throw std::runtime_error("git merge: " + r.err);
  return git("rev-parse HEAD");
}

std::string FixtureRepo::git(const std::string& args_line) {
  std::vector<std::string> argv{"git", "-C", dir_.string()};
  for (auto& a : split_args(args_line)) argv.push_back(a);
  ProcessResult r = run_process(argv);
  if (r.exit_code != 0) {
    throw std::runtime_error("git " + args_line + ": " + r.err);
  }
  while (!r.out.empty() && (r.out.back() == '\n' || r.out.back() == '\r')) {
    r.out.pop_back();
  }
  return r.out;
}

std::string numbered_lines(int first, int count) {
  std::string out;
  for (int i = first; i < first + count; ++i) {
    out += "line " + std::to_string(i) + "\n";
  }
  return out;
}

}  // namespace truckfactor::testing
