#include "evaluate.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "config.hpp"
#include "pluri/envelope.hpp"
#include "pluri/extremal.hpp"
#include "pluri/metric_density.hpp"
#include "pluri/sphere_lift.hpp"

namespace pluri::cli {

namespace {

// Marks a point where the function takes -inf on a singular locus.
struct Singular {};

RVec realPart(const CPoint& z) {
  if (z.im().norm() != 0.0) throw DomainError("function is defined on real points only");
  return z.re();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double toDouble(const std::string& t) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || !std::isfinite(v))
    throw UsageError("not a finite number: '" + t + "'");
  return v;
}

int toCount(const std::string& t) {
  int v = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || v < 1 || v > 10'000'000)
    throw UsageError("not a positive count: '" + t + "'");
  return v;
}

double node(double a, double b, int count, int k) { return count == 1 ? a : a + (b - a) * k / (count - 1); }

}  // namespace

const std::map<std::string, FunctionInfo>& functionRegistry() {
  static const std::map<std::string, FunctionInfo> reg = {
      {"vKQ", {"weighted extremal function of R^n", [](const CPoint& z, const RunConfig&) { return vKQ(z); }}},
      {"vBall", {"extremal function of the real unit ball", [](const CPoint& z, const RunConfig&) { return vBall(z); }}},
      {"lieU", {"log of the Lie norm", [](const CPoint& z, const RunConfig&) { return lieU(z); }}},
      {"lieNorm", {"Lie norm", [](const CPoint& z, const RunConfig&) { return lieNorm(z); }}},
      {"omegaExtremal",
       {"omega-extremal function of RP^n, affine chart",
        [](const CPoint& z, const RunConfig&) { return omegaExtremal(Chart::affine, z); }}},
      {"omegaExtremalInf",
       {"omega-extremal function of RP^n, chart at infinity",
        [](const CPoint& z, const RunConfig&) { return omegaExtremal(Chart::infinity, z); }}},
      {"weightQ",
       {"1/2 log|1 + z^2|",
        [](const CPoint& z, const RunConfig&) {
          const EvalResult r = weightQ(z);
          if (r.singular) throw Singular{};
          return r.value;
        }}},
      {"baranDelta",
       {"closed-form Baran metric at x = Re z in direction y = Im z",
        [](const CPoint& z, const RunConfig&) { return baranDeltaClosed(z.re(), z.im()); }}},
      {"baranDeltaNumeric",
       {"Richardson limit of (vKQ(x + ity) - vKQ(x)) / t, x = Re z, y = Im z",
        [](const CPoint& z, const RunConfig&) {
          return baranDeltaNumeric([](const CPoint& p) { return vKQ(p); }, z.re(), z.im()).value;
        }}},
      {"maDensity",
       {"Monge-Ampere density n! (1 + x^2)^{-(n+1)/2} at real x",
        [](const CPoint& z, const RunConfig&) {
          const RVec x = realPart(z);
          return maDensity(x, static_cast<int>(x.size())).lambda;
        }}},
      {"oneVarExact",
       {"max(log|z - i|, log|z + i|), n = 1",
        [](const CPoint& z, const RunConfig&) {
          if (z.dim() != 1) throw DomainError("oneVarExact needs n = 1");
          return oneVarExact(z[0]);
        }}},
      {"liftNormSq",
       {"|F(z)|^2 on the strip",
        [](const CPoint& z, const RunConfig& c) { return liftNormSq(StripPoint(z, c.strip)); }}},
      {"fullinResidual",
       {"|vBall(F(z)) - (vKQ(z) - weightQ(z))| on the strip",
        [](const CPoint& z, const RunConfig& c) { return fullinResidual(StripPoint(z, c.strip)); }}},
      {"vBallLift",
       {"vBall(F(z)) on the strip",
        [](const CPoint& z, const RunConfig& c) { return vBall(liftF(StripPoint(z, c.strip)).W()); }}},
  };
  return reg;
}

std::vector<CVec> parseGrid(const std::string& spec, int n) {
  if (n < 1) n = 1;
  const std::vector<std::string> f = split(spec, ':');
  std::vector<CVec> pts;
  if (!f.empty() && f[0] == "plane") {
    if (f.size() != 7) throw UsageError("plane grid needs plane:re0:re1:nre:im0:im1:nim");
    const double a = toDouble(f[1]), b = toDouble(f[2]), c = toDouble(f[4]), d = toDouble(f[5]);
    const int nr = toCount(f[3]), ni = toCount(f[6]);
    if (static_cast<long long>(nr) * ni > 10'000'000) throw UsageError("grid too large");
    for (int k = 0; k < ni; ++k)
      for (int j = 0; j < nr; ++j) {
        CVec z = CVec::Zero(n);
        z[0] = cplx(node(a, b, nr, j), node(c, d, ni, k));
        pts.push_back(z);
      }
  } else if (!f.empty() && f[0] == "radial") {
    if (f.size() != 4) throw UsageError("radial grid needs radial:r0:r1:nr");
    const double a = toDouble(f[1]), b = toDouble(f[2]);
    const int nr = toCount(f[3]);
    for (int j = 0; j < nr; ++j) {
      CVec z = CVec::Zero(n);
      z[0] = node(a, b, nr, j);
      pts.push_back(z);
    }
  } else {
    throw UsageError("unknown grid spec '" + spec + "' (expected plane:... or radial:...)");
  }
  return pts;
}

CVec parsePoint(const std::string& text) {
  const std::vector<std::string> coords = split(text, ';');
  if (coords.empty()) throw UsageError("empty point");
  CVec z(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const std::vector<std::string> parts = split(coords[j], ',');
    if (parts.empty() || parts.size() > 2) throw UsageError("point coordinate must be 're' or 're,im'");
    z[static_cast<Eigen::Index>(j)] = cplx(toDouble(parts[0]), parts.size() == 2 ? toDouble(parts[1]) : 0.0);
  }
  return z;
}

std::vector<EvalRow> evaluate(const std::string& name, const std::vector<CVec>& points,
                              const RunConfig& cfg) {
  const auto it = functionRegistry().find(name);
  if (it == functionRegistry().end()) throw UsageError("unknown function '" + name + "'");
  std::vector<EvalRow> rows;
  rows.reserve(points.size());
  for (const CVec& z : points) {
    EvalRow row{z, std::numeric_limits<double>::quiet_NaN(), ""};
    try {
      row.value = it->second.fn(CPoint(z), cfg);
      if (!std::isfinite(row.value)) row.flag = "nonfinite";
    } catch (const Singular&) {
      row.value = -std::numeric_limits<double>::infinity();
      row.flag = "singular";
    } catch (const DomainError& e) {
      row.flag = std::string("domain_error: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pluri::cli
