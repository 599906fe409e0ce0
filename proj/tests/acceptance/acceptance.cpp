// Acceptance checks. Each criterion prints one PASS/FAIL line; exit status 1 if any fails.
// Reference values are computed here from independent formulas, not from the library.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pluri/capacity.hpp"
#include "pluri/envelope.hpp"
#include "pluri/extremal.hpp"
#include "pluri/foliation.hpp"
#include "pluri/ma_verify.hpp"
#include "pluri/metric_density.hpp"
#include "pluri/rng.hpp"
#include "pluri/sphere_lift.hpp"

using namespace pluri;

namespace {

constexpr std::uint64_t kSeed = 0xacce97;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Line {
  std::string label;
  double value;
  double tol;
  bool strict;  // value < tol instead of value <= tol
  bool ok() const { return std::isfinite(value) && (strict ? value < tol : value <= tol); }
};

int failures = 0;

void report(int id, const std::string& title, const std::vector<Line>& lines) {
  bool pass = true;
  std::string detail;
  for (const Line& l : lines) {
    pass = pass && l.ok();
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.3e%s%.1e", detail.empty() ? "" : ", ", l.label.c_str(), l.value,
                  l.strict ? "<" : "<=", l.tol);
    detail += buf;
  }
  if (!pass) ++failures;
  std::printf("%s [%2d] %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
}

// ---- oracles ----------------------------------------------------------------

double oracleVKQ(const CVec& z) {
  const RVec x = z.real(), y = z.imag();
  const double xy = x.dot(y);
  const double rad = 4.0 * (y.squaredNorm() + x.squaredNorm() * y.squaredNorm() - xy * xy);
  return 0.5 * std::log(1.0 + z.squaredNorm() + std::sqrt(std::max(rad, 0.0)));
}

double oracleQ(const CVec& z) {
  cplx s = 1.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) s += z[j] * z[j];
  return std::log(std::abs(s)) / 2.0;
}

Eigen::MatrixXd oracleG(const RVec& x) {
  const int n = static_cast<int>(x.size());
  const double a = 1.0 + x.squaredNorm();
  return (a * Eigen::MatrixXd::Identity(n, n) - x * x.transpose()) / (a * a);
}

// Complex Hessian d^2 u / dz_j dzbar_k from real central differences with Richardson.
Eigen::MatrixXcd oracleHessian(const std::function<double(const CVec&)>& u, const CVec& z, double h) {
  const int n = static_cast<int>(z.size());
  auto realHess = [&](double s) {
    Eigen::MatrixXd H(2 * n, 2 * n);
    auto shift = [&](int a, double t) {
      CVec e = CVec::Zero(n);
      e[a % n] = a < n ? cplx(t, 0) : cplx(0, t);
      return e;
    };
    const double u0 = u(z);
    for (int a = 0; a < 2 * n; ++a) {
      H(a, a) = (u(z + shift(a, s)) - 2 * u0 + u(z - shift(a, s))) / (s * s);
      for (int b = a + 1; b < 2 * n; ++b) {
        const CVec p = shift(a, s), q = shift(b, s);
        H(a, b) = H(b, a) = (u(z + p + q) - u(z + p - q) - u(z - p + q) + u(z - p - q)) / (4 * s * s);
      }
    }
    return H;
  };
  const Eigen::MatrixXd R = (4.0 * realHess(h / 2) - realHess(h)) / 3.0;
  Eigen::MatrixXcd C(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      C(j, k) = 0.25 * cplx(R(j, k) + R(n + j, n + k), R(j, n + k) - R(n + j, k));
  return C;
}

RVec unit(CounterRng& rng, int n) {
  RVec v(n);
  for (int j = 0; j < n; ++j) v[j] = rng.normal();
  return v / v.norm();
}

RVec box(CounterRng& rng, int n, double r) {
  RVec v(n);
  for (int j = 0; j < n; ++j) v[j] = rng.uniform(-r, r);
  return v;
}

// Strip point with ||Im z|| < s (strip norm is the Euclidean norm of the imaginary part).
CPoint stripPoint(CounterRng& rng, int n, double s) {
  return CPoint::fromParts(box(rng, n, 3.0), unit(rng, n) * s * std::sqrt(rng.uniform()) * 0.999);
}

// ---- criteria ---------------------------------------------------------------

void oneVariable() {
  double worst = 0.0;
  for (int a = 0; a <= 200; ++a)
    for (int b = 0; b <= 200; ++b) {
      const cplx z(-3.0 + 0.03 * a, -3.0 + 0.03 * b);
      const double ref = std::max(std::log(std::abs(z - cplx(0, 1))), std::log(std::abs(z + cplx(0, 1))));
      CVec v(1);
      v[0] = z;
      worst = std::max(worst, std::abs(vKQ(CPoint(v)) - ref));
    }
  report(1, "n=1 exactness on 201x201 grid", {{"max_abs_err", worst, 1e-12, true}});
}

void liftConsistency() {
  CounterRng rng(kSeed, 2);
  double worst = 0.0, oracle = 0.0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 10'000; ++k) {
      const CPoint z = stripPoint(rng, n, 0.9);
      const EvalResult q = weightQ(z);
      const double lhs = vBall(liftF(StripPoint(z, 0.9)).W());
      worst = std::max(worst, std::abs(lhs - (vKQ(z) - q.value)));
      // The same quantity from the oracle closed forms.
      oracle = std::max(oracle, std::abs(lhs - (oracleVKQ(z.coords()) - oracleQ(z.coords()))));
    }
  report(2, "lift consistency, 1e4 strip points, n=1..4",
         {{"max_residual", worst, 1e-9, true}, {"vs_oracle", oracle, 1e-9, true}});
}

void semiIdentityCheck() {
  CounterRng rng(kSeed, 3);
  double worst = 0.0, flip = 0.0, gauge = 0.0;
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k < 1000; ++k) {
      const CPoint z = stripPoint(rng, n, 0.9);
      const SpherePoint W = liftF(StripPoint(z, 0.9));
      worst = std::max(worst, semiIdentity(W));
      CVec neg = W.W().coords();
      neg[0] = -neg[0];
      flip = std::max(flip, std::abs(vBall(CPoint(neg)) - vBall(W.W())));
      // Lundin argument |W|^2 + |W.W - 1| agrees for W and its tail.
      const CVec full = W.W().coords(), tail = full.tail(n);
      const double tFull = full.squaredNorm() + std::abs(full.cwiseProduct(full).sum() - 1.0);
      const double tTail = tail.squaredNorm() + std::abs(tail.cwiseProduct(tail).sum() - 1.0);
      gauge = std::max(gauge, std::abs(tFull - tTail) / tFull);
    }
  report(3, "sphere/tail identity at 1e3 lifted points, n=2,3",
         {{"max_residual", worst, 1e-11, true}, {"sign_flip", flip, 1e-11, true},
          {"lundin_argument_rel", gauge, 1e-11, true}});
}

void foliation() {
  CounterRng rng(kSeed, 4);
  const Evaluator V = [](const CPoint& W) { return vBall(W); };
  LeafSampling sampling;
  sampling.radii = {1.0, 1.1, 1.5, 2.0, 4.0, 10.0};
  double gap = 0.0, lap = 0.0, ownGap = 0.0, ownLap = 0.0;
  int singular = 0;
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 4;
    const RVec u = unit(rng, n + 1);
    RVec v = unit(rng, n + 1);
    v = (v - v.dot(u) * u).normalized();
    const LeafSpec leaf = greatCircleLeaf(u, v);
    const LeafReport r = checkLeaf(V, leaf, sampling);
    gap = std::max(gap, r.maxExtremalityGap);
    lap = std::max(lap, r.maxLaplacianResidual);
    singular += r.singularSamples;

    // Own parametrisation: zeta -> c zeta + conj(c)/zeta with c = (u - i v)/2.
    const CVec c = (u.cast<cplx>() - cplx(0, 1) * v.cast<cplx>()) / 2.0;
    auto onLeaf = [&](cplx zeta) { return vBall(CPoint(CVec(c * zeta + c.conjugate() / zeta))); };
    for (double rad : sampling.radii)
      for (int a = 0; a < 16; ++a) {
        const cplx zeta = std::polar(rad, 2 * std::numbers::pi * (a + 0.5) / 16);
        ownGap = std::max(ownGap, std::abs(onLeaf(zeta) - std::max(0.0, std::log(rad))));
        if (rad > 1.0) {
          const double h = 1e-3;
          const double l = (onLeaf(zeta + h) + onLeaf(zeta - h) + onLeaf(zeta + cplx(0, h)) +
                            onLeaf(zeta - cplx(0, h)) - 4 * onLeaf(zeta)) / (h * h);
          ownLap = std::max(ownLap, std::abs(l));
        }
      }
  }
  report(4, "foliation, 20 great-circle leaves, n<=4",
         {{"extremality_gap", gap, 1e-9, true}, {"leaf_laplacian", lap, 1e-6, true},
          {"oracle_gap", ownGap, 1e-9, true}, {"oracle_laplacian", ownLap, 1e-6, true},
          {"singular_samples", static_cast<double>(singular), 0.0, false}});
}

void maximality() {
  const double h = 1e-3;
  double kernel = 0.0, det = 0.0, eigDeficit = 0.0, kRatio = 0.0, dRatio = 0.0, oracleKernel = 0.0;
  for (int n = 2; n <= 3; ++n) {
    CounterRng rng(kSeed, 50 + n);
    std::vector<CPoint> pts;
    for (int k = 0; k < 1000; ++k) pts.push_back(CPoint::fromParts(box(rng, n, 3.0), unit(rng, n) * rng.uniform(0.2, 5.0)));
    double kPlain = 0.0, kCoarse = 0.0, dPlain = 0.0, dCoarse = 0.0;
    for (const CPoint& z : pts) {
      const MaxReport fine = maximalityCheck(z, {h, true});
      kernel = std::max(kernel, fine.kernelResidual);
      det = std::max(det, fine.normalizedDet);
      eigDeficit = std::max(eigDeficit, -fine.minEigenvalue);
      const MaxReport p = maximalityCheck(z, {h, false}), c = maximalityCheck(z, {2 * h, false});
      kPlain = std::max(kPlain, p.kernelResidual);
      kCoarse = std::max(kCoarse, c.kernelResidual);
      dPlain = std::max(dPlain, p.normalizedDet);
      dCoarse = std::max(dCoarse, c.normalizedDet);
    }
    kRatio = std::max(kRatio, std::abs(kCoarse / kPlain - 4.0));
    dRatio = std::max(dRatio, std::abs(dCoarse / dPlain - 4.0));
    for (int k = 0; k < 100; ++k) {
      const CVec z = pts[static_cast<std::size_t>(k)].coords();
      const Eigen::MatrixXcd H = oracleHessian(oracleVKQ, z, h);
      const CVec d = z - z.conjugate();
      oracleKernel = std::max(oracleKernel, (H * d).norm() / d.norm());
    }
  }
  report(5, "maximality at 1e3 points, n=2,3",
         {{"kernel_residual", kernel, 1e-4, true}, {"normalized_det", det, 1e-4, true},
          {"min_eig_deficit", eigDeficit, 1e-6, true}, {"kernel_halving_|ratio-4|", kRatio, 0.5, false},
          {"det_halving_|ratio-4|", dRatio, 0.5, false}, {"oracle_kernel", oracleKernel, 1e-4, true}});
}

void baranMetric() {
  CounterRng rng(kSeed, 6);
  const Evaluator V = [](const CPoint& p) { return vKQ(p); };
  double rel = 0.0, spec = 0.0, det = 0.0, tensor = 0.0;
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + k % 5;
    const RVec x = box(rng, n, 2.0), y = unit(rng, n) * rng.uniform(0.1, 2.0);
    const Eigen::MatrixXd G = oracleG(x);
    const double closed = std::sqrt(y.dot(G * y));
    rel = std::max(rel, std::abs(baranDeltaNumeric(V, x, y).value - closed) / closed);
    rel = std::max(rel, std::abs(baranDeltaClosed(x, y) - closed) / closed);
    const MetricTensor m = metricTensorAt(x);
    tensor = std::max(tensor, (m.G - G).cwiseAbs().maxCoeff() / G.cwiseAbs().maxCoeff());
    const double a = 1.0 + x.squaredNorm();
    std::vector<double> want(static_cast<std::size_t>(n), 1.0 / a);
    want[0] = 1.0 / (a * a);
    std::sort(want.begin(), want.end());
    for (int j = 0; j < n; ++j)
      spec = std::max(spec, std::abs(m.eigenvalues[j] - want[static_cast<std::size_t>(j)]) / want[static_cast<std::size_t>(j)]);
    const double d = std::pow(a, -(n + 1));
    det = std::max(det, std::abs(m.detG - d) / d);
  }
  report(6, "metric limit and tensor at 500 points, n<=5",
         {{"delta_rel", rel, 1e-6, true}, {"tensor_rel", tensor, 1e-12, true},
          {"spectrum_rel", spec, 1e-12, true}, {"det_rel", det, 1e-12, true}});
}

void dualVolume() {
  CounterRng rng(kSeed, 7);
  const int n = 2;
  const double omega = std::numbers::pi;  // Lebesgue volume of the unit disc
  double dual = 0.0, prod = 0.0;
  for (int k = 0; k < 20; ++k) {
    const RVec x = box(rng, n, 2.0);
    const Eigen::MatrixXd G = oracleG(x);
    const double ref = omega * std::sqrt(G.determinant());
    McOptions opt;
    opt.samples = 1'000'000;
    opt.seed = kSeed;
    opt.stream = 2 * static_cast<std::uint64_t>(k);
    const VolumeEstimate d = dualBallVolumeMC([&G](const RVec& y) { return std::sqrt(y.dot(G * y)); }, n, opt);
    dual = std::max(dual, std::abs(d.value - ref) / d.stdError);
    opt.stream += 1;
    const VolumeEstimate p = primalBallVolumeMC(metricTensorAt(x), opt);
    const double sigma = std::hypot(p.stdError * d.value, d.stdError * p.value);
    prod = std::max(prod, std::abs(p.value * d.value - omega * omega) / sigma);
  }
  report(7, "dual-ball volume by Monte Carlo, 20 points x 1e6 samples",
         {{"dual_max_sigmas", dual, 3.0, false}, {"product_max_sigmas", prod, 3.0, false}});
}

void densityAndMass() {
  CounterRng rng(kSeed, 8);
  double ident = 0.0;
  for (int k = 0; k < 600; ++k) {
    const int n = 1 + k % 6;
    const RVec x = box(rng, n, 3.0);
    const double ref = std::tgamma(n + 1.0) * std::pow(1.0 + x.squaredNorm(), -(n + 1) / 2.0);
    ident = std::max(ident, std::abs(maDensity(x, n).lambda - ref) / ref);
  }
  const double pi = std::numbers::pi;
  const double refs[] = {pi, 4 * pi, 6 * pi * pi};
  double mass = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const double general = std::tgamma(n + 1.0) * std::pow(pi, (n + 1) / 2.0) / std::tgamma((n + 1) / 2.0);
    const double m = totalMass(n).value;
    mass = std::max({mass, std::abs(m - general) / general, std::abs(m - refs[n - 1]) / refs[n - 1]});
  }
  report(8, "density identity and total mass, n=1..3",
         {{"density_rel", ident, 1e-12, true}, {"mass_rel", mass, 1e-6, true}});
}

void ballPipeline() {
  const std::vector<RVec> xs = {RVec::Zero(2), (RVec(2) << 0.5, 0.0).finished(), (RVec(2) << 0.3, 0.4).finished()};
  double worst = 0.0;
  for (const RVec& x : xs) {
    const double ref = 2.0 * std::numbers::pi / std::sqrt(1.0 - x.squaredNorm());
    worst = std::max(worst, std::abs(ballDensityPipeline(x).lambda - ref) / ref);
  }
  report(9, "reconstructed density for the real disc", {{"max_rel", worst, 0.02, true}});
}

void capacity() {
  const double half = 0.5 * std::numbers::ln2;
  double sup = 0.0, cap = 0.0, lo = kInf, hi = -kInf;
  for (int n = 1; n <= 6; ++n) {
    const CapacityResult r = alexanderSup(n);
    sup = std::max(sup, std::abs(r.supValue - half));
    cap = std::max(cap, std::abs(r.capacity - std::sqrt(0.5)));
    lo = std::min(lo, r.supValue);
    hi = std::max(hi, r.supValue);
  }
  // At z = i e_1 the potential is log 2 and the base term 1/2 log 2.
  CVec z = CVec::Zero(3);
  z[0] = cplx(0, 1);
  const double atI = std::abs(omegaExtremal(Chart::affine, CPoint(z)) - (oracleVKQ(z) - 0.5 * std::log(2.0)));
  report(10, "capacity for n=1..6",
         {{"sup_err", sup, 1e-8, true}, {"capacity_err", cap, 1e-8, true}, {"spread", hi - lo, 1e-10, true},
          {"oracle_at_i", atI, 1e-14, true}});
}

void envelope() {
  CounterRng rng(kSeed, 11);
  double excess = -kInf, axis = 0.0;
  for (int k = 0; k < 100'000; ++k) {
    const int n = 1 + k % 4;
    const CPoint z = CPoint::fromParts(box(rng, n, 3.0), box(rng, n, 3.0));
    excess = std::max(excess, linearFamilyLB(z).lowerBound - oracleVKQ(z.coords()));
    if (k % 2000 == 0)
      for (int d = 2; d <= 4; ++d) excess = std::max(excess, productFamilyLB(z, d).lowerBound - oracleVKQ(z.coords()));
    if (k % 100 == 0) {
      const RVec y = box(rng, n, 5.0);
      axis = std::max(axis, std::abs(linearFamilyLB(CPoint::fromParts(RVec::Zero(n), y)).lowerBound - std::log1p(y.norm())));
    }
  }
  report(11, "envelope soundness over 1e5 trials and imaginary-axis tightness",
         {{"excess_over_vkq", std::max(excess, 0.0), 1e-9, false}, {"axis_gap", axis, 1e-10, true}});
}

void weightConditions() {
  CounterRng rng(kSeed, 12);
  double minGap = kInf, realGap = 0.0, lap = 0.0, expDev = 0.0, ownExpDev = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 10'000; ++k) {
      const CPoint z = CPoint::fromParts(box(rng, n, 3.0), box(rng, n, 3.0));
      const EvalResult q = weightQ(z);
      if (!q.singular) minGap = std::min(minGap, vKQ(z) - q.value);
    }
    for (int a = 0; a <= 20; ++a) {
      RVec x = RVec::Zero(n);
      x[0] = -5.0 + 0.5 * a;
      if (n > 1) x[1] = 2.0 - 0.2 * a;
      const CPoint p = CPoint::fromReal(x);
      realGap = std::max(realGap, std::abs(vKQ(p) - weightQ(p).value));
    }
    for (int k = 0; k < 20; ++k) {
      const CPoint z0 = CPoint::fromParts(box(rng, n, 2.0), box(rng, n, 0.5));
      CVec d(n);
      for (int j = 0; j < n; ++j) d[j] = cplx(rng.normal(), rng.normal());
      d.normalize();
      try {
        lap = std::max(lap, std::abs(lineLaplacianQ(z0, d)));
      } catch (const DomainError&) {
      }
    }
    for (int k = 0; k < 10; ++k) {
      const RVec x = box(rng, n, 2.0), y = unit(rng, n);
      expDev = std::max(expDev, std::abs(qLimitExponent(x, y) - 2.0));
      // Own fit: least-squares slope of log|Q(x + t i y) - Q(x)| against log t.
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      const int m = 9;
      for (int j = 0; j < m; ++j) {
        const double t = 1e-4 * std::pow(100.0, j / double(m - 1));
        const CVec zt = x.cast<cplx>() + cplx(0, t) * y.cast<cplx>();
        const double lx = std::log(t), ly = std::log(std::abs(oracleQ(zt) - oracleQ(x.cast<cplx>())));
        sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
      }
      ownExpDev = std::max(ownExpDev, std::abs((m * sxy - sx * sy) / (m * sxx - sx * sx) - 2.0));
    }
  }
  report(12, "weight conditions, n=1..3",
         {{"gap_deficit", std::max(0.0, -minGap), 1e-12, false}, {"real_gap", realGap, 1e-12, false},
          {"exponent_|p-2|", expDev, 0.1, false}, {"oracle_exponent_|p-2|", ownExpDev, 0.1, false},
          {"line_laplacian_Q", lap, 1e-6, true}});
}

}  // namespace

int main() {
  oneVariable();
  liftConsistency();
  semiIdentityCheck();
  foliation();
  maximality();
  baranMetric();
  dualVolume();
  densityAndMass();
  ballPipeline();
  capacity();
  envelope();
  weightConditions();
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
