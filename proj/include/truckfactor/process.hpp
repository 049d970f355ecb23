#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace truckfactor {

struct ProcessResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Runs `argv[0]` (looked up on PATH) with stdin bound to /dev/null and
// both output streams captured. `env` entries are added to, or override,
// the inherited environment. Throws Error if the process cannot be spawned.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::map<std::string, std::string>& env = {});

// `git -C <repo> <args...>` with settings that keep output machine-readable.
// Throws GitInvocationFailed on a non-zero exit.
std::string run_git(const std::filesystem::path& repo,
                    const std::vector<std::string>& args);

// Same, but returns the raw result instead of throwing.
ProcessResult try_git(const std::filesystem::path& repo,
                      const std::vector<std::string>& args);

}  // namespace truckfactor
