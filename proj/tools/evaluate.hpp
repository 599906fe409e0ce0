#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "pluri/core.hpp"
#include "pluri/suites.hpp"

namespace pluri::cli {

struct FunctionInfo {
  std::string description;
  std::function<double(const CPoint&, const RunConfig&)> fn;
};

const std::map<std::string, FunctionInfo>& functionRegistry();

/// plane:re0:re1:nre:im0:im1:nim  z = (re + i im) e_1, rows ordered by im, then re.
/// radial:r0:r1:nr                x = r e_1.
/// Throws UsageError on malformed specs.
std::vector<CVec> parseGrid(const std::string& spec, int n);

/// "re,im;re,im;..." one coordinate per ';'.
CVec parsePoint(const std::string& text);

struct EvalRow {
  CVec z;
  double value = 0.0;
  std::string flag;  // empty, "nonfinite", "singular" or "domain_error: ..."
};

std::vector<EvalRow> evaluate(const std::string& name, const std::vector<CVec>& points,
                              const RunConfig& cfg);

}  // namespace pluri::cli
