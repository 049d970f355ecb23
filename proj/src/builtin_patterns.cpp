#include <string>
#include <string_view>
#include <vector>

#include "truckfactor/history.hpp"

namespace truckfactor {

const std::string_view kBuiltinPatternsVersion = "2026.1";

// Third-party, generated, documentation and binary files that do not count
// as source developed in the repository. Bump kBuiltinPatternsVersion when
// editing.
const std::vector<std::string>& builtin_vendored_patterns() {
  static const std::vector<std::string> patterns = {
      // vendored code
      "vendor/**",
      "**/vendor/**",
      "vendors/**",
      "**/vendors/**",
      "third_party/**",
      "**/third_party/**",
      "**/third-party/**",
      "**/thirdparty/**",
      "**/3rdparty/**",
      "**/node_modules/**",
      "**/bower_components/**",
      "deps/**",
      "**/Godeps/_workspace/**",
      "**/Pods/**",
      "**/Carthage/**",
      "*.min.js",
      "*.min.css",
      "**/jquery*.js",
      // documentation
      "docs/**",
      "doc/**",
      "**/Documentation/**",
      "**/javadoc/**",
      "man/**",
      "examples/**",
      "example/**",
      "samples/**",
      "*.md",
      "*.markdown",
      "*.rst",
      "*.adoc",
      "README",
      "README.*",
      "CHANGELOG*",
      "CHANGES*",
      "LICENSE*",
      "LICENCE*",
      "COPYING*",
      "AUTHORS*",
      "CONTRIBUTORS*",
      "NEWS",
      // images, media and other binaries
      "*.png", "*.PNG", "*.jpg", "*.JPG", "*.jpeg", "*.JPEG", "*.gif",
      "*.GIF", "*.bmp", "*.ico", "*.icns", "*.svg", "*.tif", "*.tiff",
      "*.webp", "*.psd", "*.xcf", "*.pdf", "*.eps",
      "*.mp3", "*.mp4", "*.wav", "*.ogg", "*.avi", "*.mov", "*.flac",
      "*.ttf", "*.otf", "*.woff", "*.woff2", "*.eot",
      "*.zip", "*.gz", "*.tgz", "*.bz2", "*.xz", "*.7z", "*.rar", "*.tar",
      "*.jar", "*.war", "*.class", "*.pyc", "*.pyo",
      "*.exe", "*.dll", "*.so", "*.dylib", "*.a", "*.o", "*.obj", "*.lib",
      "*.bin", "*.dat",
  };
  return patterns;
}

}  // namespace truckfactor
