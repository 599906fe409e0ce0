#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "pluri/suites.hpp"

namespace pluri::cli {

/// Bad flags, bad config keys or values, malformed grid specs. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kEnvPrefix = "PLURI_";

/// Keys accepted in config files and as PLURI_<KEY> environment variables.
const std::map<std::string, std::string>& configKeys();  // key -> description

/// Applies one key = value assignment. Throws UsageError on unknown keys or
/// unparsable values.
void applySetting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Reads "key = value" lines; '#' starts a comment.
void applyConfigFile(RunConfig& cfg, const std::string& path);

/// Applies PLURI_N, PLURI_FD_STEP, ... from the environment.
void applyEnvironment(RunConfig& cfg);

/// Snapshot as ordered key -> canonical text, for manifests.
std::map<std::string, std::string> snapshot(const RunConfig& cfg);

}  // namespace pluri::cli
