#include "pluri/metric_density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pluri/extremal.hpp"
#include "pluri/rng.hpp"

namespace pluri {

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

CPoint shifted(const RVec& x, const RVec& y, double t) { return CPoint::fromParts(x, t * y); }

}  // namespace

DeltaEstimate baranDeltaNumeric(const Evaluator& V, const RVec& x, const RVec& y,
                                BaranOptions opt) {
  if (x.size() != y.size()) throw DomainError("baranDeltaNumeric: x and y differ in dimension");
  if (!(opt.t0 > 0.0) || opt.depth < 1) throw DomainError("baranDeltaNumeric: bad t-sequence");
  const double base = V(CPoint::fromReal(x));
  const int L = opt.depth;
  std::vector<std::vector<double>> T(L + 1, std::vector<double>(L + 1, 0.0));
  double t = opt.t0;
  for (int k = 0; k <= L; ++k, t *= 0.5) {
    T[k][0] = (V(shifted(x, y, t)) - base) / t;
    double p = 1.0;
    for (int j = 1; j <= k; ++j) {
      p *= 2.0;
      T[k][j] = T[k][j - 1] + (T[k][j - 1] - T[k - 1][j - 1]) / (p - 1.0);
    }
  }
  DeltaEstimate est;
  est.value = T[L][L];
  est.lastCorrection = std::abs(T[L][L] - T[L - 1][L - 1]);
  est.converged = std::isfinite(est.value) && est.lastCorrection <= opt.convergenceTol;
  return est;
}

double baranDeltaClosed(const RVec& x, const RVec& y) {
  const double x2 = x.squaredNorm();
  return std::sqrt(y.squaredNorm() + gramDefect(x, y)) / (1.0 + x2);
}

MetricTensor metricTensorAt(const RVec& x) {
  const Eigen::Index n = x.size();
  if (n < 1) throw DomainError("metricTensorAt: empty base point");
  const double s = 1.0 + x.squaredNorm();
  MetricTensor m;
  m.x = x;
  m.G = (s * Eigen::MatrixXd::Identity(n, n) - x * x.transpose()) / (s * s);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.G, Eigen::EigenvaluesOnly);
  m.eigenvalues = es.eigenvalues();
  m.detG = m.eigenvalues.prod();
  return m;
}

double metricSpectrumDeviation(const MetricTensor& m) {
  const Eigen::Index n = m.x.size();
  const double s = 1.0 + m.x.squaredNorm();
  RVec expected(n);
  expected[0] = 1.0 / (s * s);
  for (Eigen::Index j = 1; j < n; ++j) expected[j] = 1.0 / s;
  double dev = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    dev = std::max(dev, std::abs(m.eigenvalues[j] - expected[j]) / expected[j]);
  const double det = std::pow(s, -static_cast<double>(n + 1));
  dev = std::max(dev, std::abs(m.detG - det) / det);
  dev = std::max(dev, std::abs(m.G.determinant() - det) / det);
  return dev;
}

double unitBallVolume(int n) {
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

double dualBallVolumeClosed(const MetricTensor& m, VolumeNormalization norm) {
  const double v = std::sqrt(m.detG);
  const int n = static_cast<int>(m.x.size());
  return norm == VolumeNormalization::lebesgue ? v * unitBallVolume(n) : v;
}

double primalBallVolumeClosed(const MetricTensor& m, VolumeNormalization norm) {
  const double v = 1.0 / std::sqrt(m.detG);
  const int n = static_cast<int>(m.x.size());
  return norm == VolumeNormalization::lebesgue ? v * unitBallVolume(n) : v;
}

VolumeEstimate monteCarloBodyVolume(const NormFn& gauge, int n, double halfSide,
                                    const McOptions& opt) {
  if (n < 1 || !(halfSide > 0.0) || opt.samples < 1)
    throw DomainError("monteCarloBodyVolume: bad sampling parameters");
  CounterRng rng(opt.seed, opt.stream);
  RVec p(n);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < opt.samples; ++i) {
    for (int j = 0; j < n; ++j) p[j] = rng.uniform(-halfSide, halfSide);
    if (gauge(p) <= 1.0) ++hits;
  }
  const double box = std::pow(2.0 * halfSide, n);
  const double N = static_cast<double>(opt.samples);
  const double frac = hits / N;
  VolumeEstimate est{box * frac, box * std::sqrt(frac * (1.0 - frac) / N), opt.samples};
  if (opt.normalization == VolumeNormalization::unitBall) {
    const double w = unitBallVolume(n);
    est.value /= w;
    est.stdError /= w;
  }
  return est;
}

std::vector<RVec> sphereDirections(int n, int count, std::uint64_t seed) {
  if (n < 1) throw DomainError("sphereDirections: n must be >= 1");
  std::vector<RVec> dirs;
  if (n == 1) {
    dirs.push_back(RVec::Constant(1, 1.0));
    dirs.push_back(RVec::Constant(1, -1.0));
    return dirs;
  }
  if (count < 4) throw DomainError("sphereDirections: need at least 4 directions");
  dirs.reserve(static_cast<std::size_t>(count));
  if (n == 2) {
    for (int k = 0; k < count; ++k) {
      const double a = 2.0 * std::numbers::pi * k / count;
      RVec d(2);
      d << std::cos(a), std::sin(a);
      dirs.push_back(d);
    }
  } else if (n == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < count; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      RVec d(3);
      d << r * std::cos(golden * k), r * std::sin(golden * k), z;
      dirs.push_back(d);
    }
  } else {
    CounterRng rng(seed, 0x5eed);
    for (int k = 0; k < count; ++k) {
      RVec d(n);
      for (int j = 0; j < n; ++j) d[j] = rng.normal();
      dirs.push_back(d.normalized());
    }
  }
  return dirs;
}

VolumeEstimate dualBallVolumeMC(const NormFn& norm, int n, const McOptions& opt) {
  const std::vector<RVec> dirs = sphereDirections(n, opt.directions, opt.seed);
  Eigen::MatrixXd D(static_cast<Eigen::Index>(dirs.size()), n);
  double maxN = 0.0;
  double minN = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const double N = norm(dirs[k]);
    if (!std::isfinite(N)) throw DomainError("dualBallVolumeMC: norm is not finite on a direction");
    maxN = std::max(maxN, N);
    minN = std::min(minN, N);
    D.row(static_cast<Eigen::Index>(k)) = dirs[k].transpose() / N;
  }
  if (!(minN > 1e-12 * maxN) || !(maxN > 0.0))
    throw DomainError("dualBallVolumeMC: norm vanishes on a ray");
  // xi in B_x^* implies |xi| <= max N.
  const NormFn gauge = [&D](const RVec& xi) { return (D * xi).maxCoeff(); };
  return monteCarloBodyVolume(gauge, n, opt.boxSlack * maxN, opt);
}

VolumeEstimate dualBallVolumeMC(const MetricTensor& m, const McOptions& opt) {
  const int n = static_cast<int>(m.x.size());
  const Eigen::LLT<Eigen::MatrixXd> llt(m.G);
  if (llt.info() != Eigen::Success) throw DomainError("dualBallVolumeMC: G is not positive definite");
  const NormFn gauge = [&llt](const RVec& xi) { return std::sqrt(xi.dot(llt.solve(xi))); };
  const double halfSide = opt.boxSlack * std::sqrt(m.eigenvalues.maxCoeff());
  return monteCarloBodyVolume(gauge, n, halfSide, opt);
}

VolumeEstimate primalBallVolumeMC(const MetricTensor& m, const McOptions& opt) {
  const int n = static_cast<int>(m.x.size());
  const Eigen::MatrixXd& G = m.G;
  const NormFn gauge = [&G](const RVec& y) { return std::sqrt(y.dot(G * y)); };
  const double halfSide = opt.boxSlack / std::sqrt(m.eigenvalues.minCoeff());
  return monteCarloBodyVolume(gauge, n, halfSide, opt);
}

DensitySample maDensity(const RVec& x, int n) {
  if (n < 1) throw DomainError("maDensity: n must be >= 1");
  if (x.size() != n) throw DomainError("maDensity: x has the wrong dimension");
  const double s = 1.0 + x.squaredNorm();
  const double base = std::pow(s, -0.5 * (n + 1));
  DensitySample d;
  d.x = x;
  d.lambda = factorial(n) * base;
  const MetricTensor m = metricTensorAt(x);
  const double w = unitBallVolume(n);
  d.busemann = w / primalBallVolumeClosed(m);
  d.holmesThompson = dualBallVolumeClosed(m) / w;
  const double viaMetric = factorial(n) * std::sqrt(m.detG);
  if (std::abs(d.lambda - viaMetric) > 1e-12 * d.lambda)
    throw std::logic_error("maDensity: lambda disagrees with n! sqrt(det G)");
  return d;
}

MassResult totalMass(int n, QuadratureBudget budget) {
  if (n < 1 || n > 6) throw DomainError("totalMass: n must lie in [1, 6]");
  // int_{R^n} (1+r^2)^{-(n+1)/2} dx = |S^{n-1}| int_0^{pi/2} sin^{n-1}(theta) dtheta
  const auto integrand = [n](double theta) { return std::pow(std::sin(theta), n - 1); };
  double err = 0.0;
  const double I = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, std::numbers::pi / 2.0, budget.maxDepth, budget.tolerance, &err);
  const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
  MassResult r;
  r.value = factorial(n) * sphere * I;
  r.errorEstimate = factorial(n) * sphere * err;
  r.converged = err <= std::max(budget.tolerance * std::abs(I), 1e-15);
  return r;
}

double totalMassClosedForm(int n) {
  return factorial(n) * std::pow(std::numbers::pi, 0.5 * (n + 1)) / std::tgamma(0.5 * (n + 1));
}

PipelineResult ballDensityPipeline(const RVec& x, const PipelineOptions& opt) {
  const int n = static_cast<int>(x.size());
  if (n < 1) throw DomainError("ballDensityPipeline: empty base point");
  if (!(x.norm() <= 0.9 + 1e-15)) throw DomainError("ballDensityPipeline: requires |x| <= 0.9");
  PipelineResult res;
  const NormFn norm = [&](const RVec& y) {
    const DeltaEstimate d = baranDeltaNumeric(vBall, x, y, opt.baran);
    if (!d.converged) res.converged = false;
    return d.value;
  };
  const VolumeEstimate v = dualBallVolumeMC(norm, n, opt.mc);
  res.lambda = factorial(n) * v.value;
  res.stdError = factorial(n) * v.stdError;
  return res;
}

double ballDensityClosedForm(const RVec& x) {
  const int n = static_cast<int>(x.size());
  return factorial(n) * unitBallVolume(n) / std::sqrt(1.0 - x.squaredNorm());
}

double lineLaplacianQ(const CPoint& z0, const CVec& d, double h) {
  const auto q = [&](cplx zeta) {
    const EvalResult r = weightQ(CPoint(z0.coords() + zeta * d));
    if (r.singular) throw DomainError("lineLaplacianQ: stencil touches {1 + z^2 = 0}");
    return r.value;
  };
  const double q0 = q(0.0);
  const auto five = [&](double s) {
    const cplx is(0.0, s);
    return (q(s) + q(-s) + q(is) + q(-is) - 4.0 * q0) / (s * s);
  };
  return (4.0 * five(0.5 * h) - five(h)) / 3.0;
}

double qLimitExponent(const RVec& x, const RVec& y, double tMin, double tMax, int points) {
  const double q0 = weightQ(CPoint::fromReal(x)).value;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int k = 0; k < points; ++k) {
    const double lt = std::log(tMin) + (std::log(tMax) - std::log(tMin)) * k / (points - 1);
    const double t = std::exp(lt);
    const double diff = std::abs(weightQ(shifted(x, y, t)).value - q0);
    const double lv = std::log(diff);
    sx += lt; sy += lv; sxx += lt * lt; sxy += lt * lv;
  }
  const double N = points;
  return (N * sxy - sx * sy) / (N * sxx - sx * sx);
}

PropBaranReport propBaranConditions(const PropBaranBudget& b) {
  const int n = b.n;
  if (n < 1) throw DomainError("propBaranConditions: n must be >= 1");
  PropBaranReport rep;
  CounterRng rng(b.seed, 0xba4a);
  auto gaussC = [&](double scale) {
    CVec c(n);
    for (int j = 0; j < n; ++j) c[j] = cplx(scale * rng.normal(), scale * rng.normal());
    return c;
  };

  // Claim 1: Q harmonic on complex lines off {1 + z^2 = 0}.
  for (int k = 0; k < b.lines;) {
    const CPoint z0(gaussC(1.5));
    if (std::abs(1.0 + z0.quadSum()) < 0.5) continue;
    const CVec d = gaussC(1.0).normalized();
    rep.maxLaplacianQ = std::max(rep.maxLaplacianQ, std::abs(lineLaplacianQ(z0, d)));
    ++k;
  }

  // Claim 2: vKQ - Q >= 0, with equality on R^n.
  rep.minGap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < b.gapSamples; ++k) {
    const CPoint z(gaussC(2.0));
    const EvalResult q = weightQ(z);
    if (q.singular) continue;
    rep.minGap = std::min(rep.minGap, vKQ(z) - q.value);
  }
  const int m = std::max(2, b.realGridPerAxis);
  const int total = static_cast<int>(std::pow(m, std::min(n, 3)));
  for (int idx = 0; idx < total; ++idx) {
    RVec x = RVec::Zero(n);
    int r = idx;
    for (int j = 0; j < std::min(n, 3); ++j) {
      x[j] = -5.0 + 10.0 * (r % m) / (m - 1);
      r /= m;
    }
    const CPoint z = CPoint::fromReal(x);
    rep.maxRealGap = std::max(rep.maxRealGap, std::abs(vKQ(z) - weightQ(z).value));
  }

  // Claim 3: Q(x + ity) - Q(x) = O(t^2).
  if (n >= 2) {
    RVec x = RVec::Zero(n), y = RVec::Zero(n);
    x[0] = 1.0;
    y[1] = 1.0;
    rep.exponents.push_back(qLimitExponent(x, y));
  } else {
    rep.exponents.push_back(qLimitExponent(RVec::Constant(1, 0.5), RVec::Constant(1, 1.0)));
  }
  for (int k = 0; k < b.exponentPairs;) {
    RVec x(n), y(n);
    for (int j = 0; j < n; ++j) { x[j] = rng.normal(); y[j] = rng.normal(); }
    // The t^2 coefficient can vanish on a thin set (|x| = 1 when n = 1), where
    // the decay is faster than t^2; keep pairs with a clearly nonzero leading term.
    const double s = 1.0 + x.squaredNorm();
    const double lead = 4.0 * x.dot(y) * x.dot(y) - 2.0 * y.squaredNorm() * s;
    if (std::abs(lead) < 0.1 * y.squaredNorm() * s) continue;
    rep.exponents.push_back(qLimitExponent(x, y));
    ++k;
  }
  rep.minExponent = *std::min_element(rep.exponents.begin(), rep.exponents.end());
  rep.maxExponent = *std::max_element(rep.exponents.begin(), rep.exponents.end());
  return rep;
}

}  // namespace pluri
