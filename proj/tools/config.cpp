#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "emit.hpp"

namespace pluri::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parseNumber(const std::string& key, const std::string& text) {
  T v{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) throw UsageError("invalid value for " + key + ": '" + text + "'");
  return v;
}

double parsePositive(const std::string& key, const std::string& text) {
  const double v = parseNumber<double>(key, text);
  if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(key + " must be a positive finite number");
  return v;
}

}  // namespace

const std::map<std::string, std::string>& configKeys() {
  static const std::map<std::string, std::string> keys = {
      {"n", "dimension (0 = each suite's default set)"},
      {"strip", "strip half-width s, 0 < s < 1"},
      {"fd_step", "finite-difference step"},
      {"mc_samples", "Monte Carlo samples per volume estimate"},
      {"seed", "master seed"},
      {"tol_scale", "multiplier applied to every tolerance"},
  };
  return keys;
}

void applySetting(RunConfig& cfg, const std::string& rawKey, const std::string& rawValue) {
  std::string key = trim(rawKey);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  const std::string value = trim(rawValue);
  if (key == "n") {
    const int n = parseNumber<int>(key, value);
    if (n < 0 || n > 8) throw UsageError("n must lie in [0, 8]");
    cfg.n = n;
  } else if (key == "strip") {
    const double s = parsePositive(key, value);
    if (s >= 1.0) throw UsageError("strip must be < 1");
    cfg.strip = s;
  } else if (key == "fd_step") {
    cfg.fdStep = parsePositive(key, value);
  } else if (key == "mc_samples") {
    const auto m = parseNumber<std::int64_t>(key, value);
    if (m < 1000) throw UsageError("mc_samples must be >= 1000");
    cfg.mcSamples = m;
  } else if (key == "seed") {
    cfg.seed = parseNumber<std::uint64_t>(key, value);
  } else if (key == "tol_scale") {
    cfg.tolScale = parsePositive(key, value);
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

void applyConfigFile(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineNo) + ": expected key = value");
    applySetting(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
}

void applyEnvironment(RunConfig& cfg) {
  for (const auto& [key, desc] : configKeys()) {
    std::string var = kEnvPrefix;
    for (char c : key) var += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (const char* v = std::getenv(var.c_str())) applySetting(cfg, key, v);
  }
}

std::map<std::string, std::string> snapshot(const RunConfig& cfg) {
  return {{"n", std::to_string(cfg.n)},
          {"strip", formatDouble(cfg.strip)},
          {"fd_step", formatDouble(cfg.fdStep)},
          {"mc_samples", std::to_string(cfg.mcSamples)},
          {"seed", std::to_string(cfg.seed)},
          {"tol_scale", formatDouble(cfg.tolScale)}};
}

}  // namespace pluri::cli
