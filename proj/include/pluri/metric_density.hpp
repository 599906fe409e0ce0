#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pluri/core.hpp"

namespace pluri {

// ---------------------------------------------------------------------------
// Baran pseudometric
// ---------------------------------------------------------------------------

struct BaranOptions {
  double t0 = 1e-2;         // first step; later steps halve
  int depth = 3;            // Richardson levels beyond the first quotient
  double convergenceTol = 1e-4;
};

struct DeltaEstimate {
  double value = 0.0;
  double lastCorrection = 0.0;  // |T[L][L] - T[L-1][L-1]|
  bool converged = true;
};

/// lim_{t->0+} (V(x + ity) - V(x)) / t by Richardson extrapolation of the
/// one-sided difference quotients at t0, t0/2, ..., t0/2^depth.
DeltaEstimate baranDeltaNumeric(const Evaluator& V, const RVec& x, const RVec& y,
                                BaranOptions opt = {});

/// Closed form for V_{K,Q}: sqrt(y^2 + x^2 y^2 - (x.y)^2) / (1 + x^2).
double baranDeltaClosed(const RVec& x, const RVec& y);

// ---------------------------------------------------------------------------
// Metric tensor G(x) = ((1 + x^2) I - x x^t) / (1 + x^2)^2
// ---------------------------------------------------------------------------

struct MetricTensor {
  RVec x;
  Eigen::MatrixXd G;
  RVec eigenvalues;  // ascending, from a dense symmetric solver
  double detG = 0.0;
};

MetricTensor metricTensorAt(const RVec& x);

/// Largest relative deviation of the computed spectrum and determinant from
/// {(1+x^2)^-2, (1+x^2)^-1 x (n-1)} and (1+x^2)^-(n+1).
double metricSpectrumDeviation(const MetricTensor& m);

// ---------------------------------------------------------------------------
// Unit-ball volumes
// ---------------------------------------------------------------------------

/// How volumes are reported. `lebesgue` is plain Lebesgue measure on R^n;
/// `unitBall` divides by the volume of the Euclidean unit ball, so the
/// Euclidean ball has volume 1 and vol(B_x) vol(B_x^*) = 1 for Riemannian
/// metrics.
enum class VolumeNormalization { lebesgue, unitBall };

double unitBallVolume(int n);

/// Closed form vol(B_x^*) = sqrt(det G) under the chosen normalization.
double dualBallVolumeClosed(const MetricTensor& m,
                            VolumeNormalization norm = VolumeNormalization::lebesgue);
double primalBallVolumeClosed(const MetricTensor& m,
                              VolumeNormalization norm = VolumeNormalization::lebesgue);

struct McOptions {
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 20261015;
  std::uint64_t stream = 0;
  int directions = 720;      // used when the dual gauge is built from a direction grid
  double boxSlack = 1.1;
  VolumeNormalization normalization = VolumeNormalization::lebesgue;
};

struct VolumeEstimate {
  double value = 0.0;
  double stdError = 0.0;
  std::int64_t samples = 0;
};

using NormFn = std::function<double(const RVec&)>;

/// Monte Carlo volume of {p : gauge(p) <= 1} inside the cube [-halfSide, halfSide]^n.
VolumeEstimate monteCarloBodyVolume(const NormFn& gauge, int n, double halfSide,
                                    const McOptions& opt);

/// Unit directions covering S^{n-1}: exact grid for n <= 2, a Fibonacci
/// lattice for n = 3, seeded Gaussian directions above.
std::vector<RVec> sphereDirections(int n, int count, std::uint64_t seed = 1);

/// vol {xi : sup_{N(y) <= 1} xi.y <= 1} for a norm given only as an evaluator.
/// The support function is approximated by a maximum over `opt.directions`
/// directions. Throws DomainError if N vanishes (numerically) on a direction.
VolumeEstimate dualBallVolumeMC(const NormFn& norm, int n, const McOptions& opt = {});

/// Same, for the Riemannian norm of G, using the exact dual gauge sqrt(xi^t G^-1 xi).
VolumeEstimate dualBallVolumeMC(const MetricTensor& m, const McOptions& opt = {});

/// vol {y : sqrt(y^t G y) <= 1} by Monte Carlo.
VolumeEstimate primalBallVolumeMC(const MetricTensor& m, const McOptions& opt = {});

// ---------------------------------------------------------------------------
// Monge-Ampere density and mass
// ---------------------------------------------------------------------------

struct DensitySample {
  RVec x;
  double lambda = 0.0;          // n! (1 + x^2)^{-(n+1)/2}
  double busemann = 0.0;        // vol(unit ball) / vol(B_x)
  double holmesThompson = 0.0;  // vol(B_x^*) / vol(unit ball)
};

/// Throws std::logic_error if lambda and n! sqrt(det G(x)) disagree beyond 1e-12.
DensitySample maDensity(const RVec& x, int n);

struct QuadratureBudget {
  unsigned maxDepth = 15;
  double tolerance = 1e-13;
};

struct MassResult {
  double value = 0.0;
  double errorEstimate = 0.0;
  bool converged = true;
};

/// Integral of n! (1+x^2)^{-(n+1)/2} over R^n by radial reduction and r = tan(theta).
MassResult totalMass(int n, QuadratureBudget budget = {});

/// n! pi^{(n+1)/2} / Gamma((n+1)/2).
double totalMassClosedForm(int n);

// ---------------------------------------------------------------------------
// Ball density pipeline
// ---------------------------------------------------------------------------

struct PipelineOptions {
  BaranOptions baran{};
  McOptions mc{200'000, 20261015, 7, 360, 1.1, VolumeNormalization::lebesgue};
};

struct PipelineResult {
  double lambda = 0.0;
  double stdError = 0.0;
  bool converged = true;  // false if any direction's Baran limit was flagged
};

/// n! vol(B_x^*) for the real ball B_n, with the Baran metric taken numerically
/// from Lundin's formula on a direction grid. Requires |x| <= 0.9.
PipelineResult ballDensityPipeline(const RVec& x, const PipelineOptions& opt = {});

/// Reference n! vol(B_n) (1 - |x|^2)^{-1/2}.
double ballDensityClosedForm(const RVec& x);

// ---------------------------------------------------------------------------
// Conditions behind the density theorem
// ---------------------------------------------------------------------------

struct PropBaranBudget {
  int n = 2;
  int lines = 10;
  int gapSamples = 10'000;
  int realGridPerAxis = 11;
  int exponentPairs = 10;
  std::uint64_t seed = 20261015;
};

struct PropBaranReport {
  double maxLaplacianQ = 0.0;        // claim 1
  double minGap = 0.0;               // claim 2, min of vKQ - Q
  double maxRealGap = 0.0;           // claim 2, max |vKQ - Q| on the real grid
  double minExponent = 0.0;          // claim 3
  double maxExponent = 0.0;
  std::vector<double> exponents;
};

/// Laplacian in zeta of Q(z0 + zeta d) at zeta = 0: five-point stencils at h
/// and h/2 combined by one Richardson step.
double lineLaplacianQ(const CPoint& z0, const CVec& d, double h = 1e-3);

/// Least-squares slope of log|Q(x+ity) - Q(x)| against log t on a geometric t grid.
double qLimitExponent(const RVec& x, const RVec& y, double tMin = 1e-4, double tMax = 1e-2,
                      int points = 9);

PropBaranReport propBaranConditions(const PropBaranBudget& budget = {});

}  // namespace pluri
