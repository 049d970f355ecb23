#include "truckfactor/errors.hpp"

#include <utility>

namespace truckfactor {

NotARepository::NotARepository(const std::string& path)
    : Error("not a git repository: " + path) {}

EmptyRepository::EmptyRepository(const std::string& path)
    : Error("repository has no commits on the analysed branch: " + path) {}

GitInvocationFailed::GitInvocationFailed(const std::string& command,
                                         int exit_code,
                                         std::string diagnostics)
    : Error("git invocation failed (exit " + std::to_string(exit_code) +
            "): " + command + (diagnostics.empty() ? "" : "\n" + diagnostics)),
      exit_code_(exit_code),
      diagnostics_(std::move(diagnostics)) {}

BlameFailed::BlameFailed(const std::string& file, const std::string& reason)
    : Error("blame failed for " + file + ": " + reason) {}

EmptyMap::EmptyMap() : Error("author map is empty") {}

}  // namespace truckfactor
