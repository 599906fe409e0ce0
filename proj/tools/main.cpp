#include <chrono>
#include <ctime>
#include <filesystem>
#include <future>
#include <iostream>
#include <sstream>

#include <Eigen/Core>
#include <boost/version.hpp>

#include "CLI11.hpp"
#include "config.hpp"
#include "emit.hpp"
#include "evaluate.hpp"
#include "json.hpp"
#include "pluri/suites.hpp"

#ifndef PLURI_VERSION
#define PLURI_VERSION "0.0.0"
#endif

using nlohmann::json;
namespace fs = std::filesystem;

namespace pluri::cli {
namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct Common {
  std::string configPath;
  int n = -1;
  long long seed = -1;
  double tolScale = -1.0;
  std::string out;
  std::string format = "csv";
};

void addCommon(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.configPath, "key = value config file")->check(CLI::ExistingFile);
  sub->add_option("--n", c.n, "dimension")->check(CLI::Range(0, 8));
  sub->add_option("--seed", c.seed, "master seed")->check(CLI::NonNegativeNumber);
  sub->add_option("--tol-scale", c.tolScale, "multiplier for every tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "output file (eval, verify) or directory (report)");
}

RunConfig resolve(const Common& c) {
  RunConfig cfg;
  if (!c.configPath.empty()) applyConfigFile(cfg, c.configPath);
  applyEnvironment(cfg);
  if (c.n >= 0) cfg.n = c.n;
  if (c.seed >= 0) cfg.seed = static_cast<std::uint64_t>(c.seed);
  if (c.tolScale > 0) cfg.tolScale = c.tolScale;
  return cfg;
}

json configJson(const RunConfig& cfg) {
  json j = json::object();
  for (const auto& [k, v] : snapshot(cfg)) j[k] = v;
  return j;
}

json checkJson(const Check& c) {
  json j = {{"name", c.name}, {"pass", c.pass}, {"residual", jsonNumber(c.residual)},
            {"tolerance", jsonNumber(c.tolerance)}};
  if (!std::isfinite(c.residual)) j["residual_flag"] = formatDouble(c.residual);
  return j;
}

json suiteJson(const SuiteResult& r) {
  json checks = json::array();
  for (const Check& c : r.checks) checks.push_back(checkJson(c));
  json j = {{"suite", r.name}, {"pass", r.pass}, {"checks", checks}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::vector<SuiteResult> runConcurrently(const std::vector<std::string>& names, const RunConfig& cfg) {
  std::vector<std::future<SuiteResult>> futs;
  for (const std::string& s : names) futs.push_back(std::async(std::launch::async, runSuite, s, cfg));
  std::vector<SuiteResult> out;
  for (auto& f : futs) out.push_back(f.get());
  return out;
}

void summarize(const std::vector<SuiteResult>& results) {
  for (const SuiteResult& r : results) {
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.error.empty()) std::cerr << "  error: " << r.error;
    std::cerr << "\n";
    for (const Check& c : r.checks)
      if (!c.pass)
        std::cerr << "    " << c.name << " residual " << formatDouble(c.residual) << " > tol "
                  << formatDouble(c.tolerance) << "\n";
  }
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
  } else {
    writeFile(path, content);
  }
}

int cmdEval(const Common& c, const std::string& fn, const std::string& grid,
            const std::vector<std::string>& points) {
  const RunConfig cfg = resolve(c);
  if (grid.empty() == points.empty()) throw UsageError("eval needs exactly one of --grid or --point");
  if (!functionRegistry().count(fn)) throw UsageError("unknown function '" + fn + "'");
  std::vector<CVec> pts;
  if (!grid.empty()) {
    pts = parseGrid(grid, cfg.n);
  } else {
    for (const std::string& p : points) pts.push_back(parsePoint(p));
    for (const CVec& z : pts)
      if (z.size() != pts.front().size()) throw UsageError("all points must have the same dimension");
  }
  const std::vector<EvalRow> rows = evaluate(fn, pts, cfg);
  const Eigen::Index dim = pts.front().size();

  std::ostringstream os;
  if (c.format == "json") {
    json recs = json::array();
    for (const EvalRow& r : rows) {
      json re = json::array(), im = json::array();
      for (Eigen::Index j = 0; j < dim; ++j) {
        re.push_back(r.z[j].real());
        im.push_back(r.z[j].imag());
      }
      json rec = {{"re", re}, {"im", im}, {"value", jsonNumber(r.value)}, {"flags", r.flag}};
      if (!std::isfinite(r.value)) rec["value_text"] = formatDouble(r.value);
      recs.push_back(rec);
    }
    os << json{{"function", fn}, {"config", configJson(cfg)}, {"records", recs}}.dump(2) << "\n";
  } else {
    std::vector<std::string> header;
    for (Eigen::Index j = 0; j < dim; ++j) {
      header.push_back("re" + std::to_string(j));
      header.push_back("im" + std::to_string(j));
    }
    header.push_back("value");
    header.push_back("flags");
    csvRow(os, header);
    for (const EvalRow& r : rows) {
      std::vector<std::string> f;
      for (Eigen::Index j = 0; j < dim; ++j) {
        f.push_back(formatDouble(r.z[j].real()));
        f.push_back(formatDouble(r.z[j].imag()));
      }
      f.push_back(formatDouble(r.value));
      f.push_back(r.flag);
      csvRow(os, f);
    }
  }
  emit(c.out, os.str());
  return kPass;
}

int cmdVerify(const Common& c, const std::string& suite) {
  const RunConfig cfg = resolve(c);
  std::vector<std::string> names;
  if (suite == "all") {
    names = suiteNames();
  } else if (isSuite(suite)) {
    names = {suite};
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  const std::vector<SuiteResult> results = runConcurrently(names, cfg);
  bool pass = true;
  json suites = json::array();
  for (const SuiteResult& r : results) {
    pass = pass && r.pass;
    suites.push_back(suiteJson(r));
  }
  const json report = {{"suite", suite}, {"pass", pass}, {"config", configJson(cfg)}, {"suites", suites}};
  summarize(results);
  emit(c.out, report.dump(2) + "\n");
  return pass ? kPass : kFail;
}

json versions() {
  return {{"pluri", PLURI_VERSION},
          {"compiler", __VERSION__},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"boost", BOOST_LIB_VERSION}};
}

std::string tableCsv(const Table& t, const std::string& hash) {
  std::ostringstream os;
  os << "# manifest_sha256=" << hash << "\r\n";
  csvRow(os, t.columns);
  for (const auto& row : t.rows) {
    std::vector<std::string> f;
    for (double v : row) f.push_back(formatDouble(v));
    csvRow(os, f);
  }
  return os.str();
}

int cmdReport(const Common& c, const std::vector<std::string>& argv) {
  const RunConfig cfg = resolve(c);
  if (c.out.empty()) throw UsageError("report needs --out <directory>");
  const auto start = std::chrono::steady_clock::now();
  const std::time_t wall = std::time(nullptr);

  auto tablesF = std::async(std::launch::async, plotTables, cfg);
  const std::vector<SuiteResult> results = runConcurrently(suiteNames(), cfg);
  const std::vector<Table> tables = tablesF.get();

  bool pass = true;
  json perSuite = json::object(), tolerances = json::object(), files = json::array();
  for (const SuiteResult& r : results) {
    pass = pass && r.pass;
    perSuite[r.name] = r.pass;
    json tol = json::object();
    for (const Check& ch : r.checks) tol[ch.name] = jsonNumber(ch.tolerance);
    tolerances[r.name] = tol;
    files.push_back("suite_" + r.name + ".json");
  }
  for (const Table& t : tables) files.push_back(t.name + ".csv");

  // Everything the data files depend on; wall-clock and command line stay outside the hash.
  const json core = {{"config", configJson(cfg)}, {"seed", std::to_string(cfg.seed)},
                     {"tolerances", tolerances}, {"versions", versions()},
                     {"suites", perSuite},       {"all_pass", pass},
                     {"files", files},           {"volume_convention", "lebesgue"}};
  const std::string hash = sha256Hex(core.dump());

  fs::create_directories(c.out);
  for (const SuiteResult& r : results) {
    json j = suiteJson(r);
    j["config"] = configJson(cfg);
    j["manifest_sha256"] = hash;
    writeFile((fs::path(c.out) / ("suite_" + r.name + ".json")).string(), j.dump(2) + "\n");
  }
  for (const Table& t : tables)
    writeFile((fs::path(c.out) / (t.name + ".csv")).string(), tableCsv(t, hash));

  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&wall));
  json manifest = core;
  manifest["manifest_sha256"] = hash;
  manifest["run"] = {{"command_line", argv},
                     {"wall_clock_utc", stamp},
                     {"elapsed_seconds",
                      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  writeFile((fs::path(c.out) / "manifest.json").string(), manifest.dump(2) + "\n");
  summarize(results);
  return pass ? kPass : kFail;
}

}  // namespace
}  // namespace pluri::cli

int main(int argc, char** argv) {
  using namespace pluri::cli;
  CLI::App app{"pluri: weighted extremal functions of R^n, lifts and verification suites"};
  app.require_subcommand(1);

  Common evalC, verifyC, reportC;
  std::string fn, grid, suite;
  std::vector<std::string> points;

  std::string fnList;
  for (const auto& [name, info] : functionRegistry()) fnList += "\n  " + name + ": " + info.description;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a function on points or a grid");
  addCommon(eval, evalC);
  eval->add_option("function", fn, "function name:" + fnList)->required();
  eval->add_option("--grid", grid, "plane:re0:re1:nre:im0:im1:nim or radial:r0:r1:nr");
  eval->add_option("--point", points, "point as 're,im;re,im;...' (repeatable)");
  eval->add_option("--format", evalC.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  addCommon(verify, verifyC);
  std::string suiteList = "all";
  for (const std::string& s : pluri::suiteNames()) suiteList += ", " + s;
  verify->add_option("suite", suite, "suite: " + suiteList)->required();

  CLI::App* report = app.add_subcommand("report", "run every suite and write a report bundle");
  addCommon(report, reportC);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) return cmdEval(evalC, fn, grid, points);
    if (verify->parsed()) return cmdVerify(verifyC, suite);
    std::vector<std::string> args(argv, argv + argc);
    return cmdReport(reportC, args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
