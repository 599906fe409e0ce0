#include "pluri/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "pluri/capacity.hpp"
#include "pluri/core.hpp"
#include "pluri/envelope.hpp"
#include "pluri/extremal.hpp"
#include "pluri/foliation.hpp"
#include "pluri/ma_verify.hpp"
#include "pluri/metric_density.hpp"
#include "pluri/rng.hpp"
#include "pluri/sphere_lift.hpp"

namespace pluri {

namespace {

class Recorder {
 public:
  explicit Recorder(const RunConfig& cfg) : scale_(cfg.tolScale) {}

  // residual <= tolerance * scale
  void upper(const std::string& name, double residual, double tolerance) {
    const double tol = tolerance * scale_;
    checks_.push_back({name, residual, tol, std::isfinite(residual) && residual <= tol});
  }
  // residual < tolerance * scale (strict)
  void below(const std::string& name, double residual, double tolerance) {
    const double tol = tolerance * scale_;
    checks_.push_back({name, residual, tol, std::isfinite(residual) && residual < tol});
  }
  void flag(const std::string& name, bool ok) { checks_.push_back({name, ok ? 0.0 : 1.0, 0.0, ok}); }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  double scale_;
  std::vector<Check> checks_;
};

std::vector<int> dims(const RunConfig& cfg, std::vector<int> defaults) {
  if (cfg.n > 0) return {cfg.n};
  return defaults;
}

std::string tag(const std::string& base, int n) { return base + "[n=" + std::to_string(n) + "]"; }

RVec uniformBox(CounterRng& rng, int n, double half) {
  RVec x(n);
  for (int j = 0; j < n; ++j) x[j] = rng.uniform(-half, half);
  return x;
}

RVec unitVector(CounterRng& rng, int n) {
  RVec v(n);
  do {
    for (int j = 0; j < n; ++j) v[j] = rng.normal();
  } while (v.norm() < 1e-8);
  return v.normalized();
}

// Uniform in the open ball of radius r.
RVec ballPoint(CounterRng& rng, int n, double r) {
  return unitVector(rng, n) * r * std::pow(rng.uniform(), 1.0 / n);
}

CounterRng suiteRng(const RunConfig& cfg, const std::string& suite, std::uint64_t sub = 0) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ULL;
  return CounterRng(cfg.seed, CounterRng::substream(h, sub));
}

// ---------------------------------------------------------------------------

void suiteOnevar(const RunConfig&, Recorder& rec) {
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    for (int k = 0; k <= 200; ++k) {
      const cplx z(-3.0 + 0.03 * i, -3.0 + 0.03 * k);
      CVec c(1);
      c[0] = z;
      worst = std::max(worst, std::abs(vKQ(CPoint(c)) - oneVarExact(z)));
    }
  }
  rec.below("grid201_max_abs_error", worst, 1e-12);
}

void suiteFullin(const RunConfig& cfg, Recorder& rec) {
  for (int n : dims(cfg, {1, 2, 3, 4})) {
    CounterRng rng = suiteRng(cfg, "fullin", n);
    double worst = 0.0, oneSided = 0.0, need = 0.0, normSq = 0.0;
    for (int k = 0; k < 10'000; ++k) {
      const RVec x = uniformBox(rng, n, 3.0);
      const RVec y = ballPoint(rng, n, cfg.strip);
      const StripPoint z(CPoint::fromParts(x, y), cfg.strip);
      worst = std::max(worst, fullinResidual(z));
      const SpherePoint W = liftF(z);
      const double lhs = vKQ(z.z()) - weightQ(z.z()).value;
      oneSided = std::max(oneSided, lhs - vBall(W.W()));
      need = std::max(need, std::abs(-std::log(std::abs(W.w0())) - weightQ(z.z()).value));
      normSq = std::max(normSq, std::abs(liftNormSq(z) - W.W().normSq()) / W.W().normSq());
    }
    rec.below(tag("lift_consistency_max", n), worst, 1e-9);
    rec.upper(tag("one_sided_excess", n), std::max(oneSided, 0.0), 1e-9);
    rec.below(tag("w0_weight_identity", n), need, 1e-12);
    rec.below(tag("lift_norm_identity", n), normSq, 1e-12);
  }
}

void suiteSemi(const RunConfig& cfg, Recorder& rec) {
  for (int n : dims(cfg, {2, 3})) {
    CounterRng rng = suiteRng(cfg, "semi", n);
    double worst = 0.0, sign = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const StripPoint z(CPoint::fromParts(uniformBox(rng, n, 3.0), ballPoint(rng, n, cfg.strip)),
                         cfg.strip);
      const SpherePoint W = liftF(z);
      worst = std::max(worst, semiIdentity(W));
      CVec flipped = W.W().coords();
      flipped[0] = -flipped[0];
      sign = std::max(sign, std::abs(vBall(CPoint(flipped)) - vBall(W.W())));
    }
    rec.below(tag("semi_identity_max", n), worst, 1e-11);
    rec.below(tag("sign_symmetry", n), sign, 1e-12);

    double defect = 0.0, drift = 0.0;
    for (int k = 0; k < 100; ++k) {
      Eigen::MatrixXd M(n + 1, n + 1);
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) M(i, j) = rng.normal();
      const Eigen::MatrixXd T = Eigen::HouseholderQR<Eigen::MatrixXd>(M).householderQ();
      const StripPoint z(CPoint::fromParts(uniformBox(rng, n, 3.0), ballPoint(rng, n, cfg.strip)),
                         cfg.strip);
      const SpherePoint W = liftF(z);
      const SpherePoint TW = orthogonalPushforward(T, W);
      defect = std::max(defect, TW.defect());
      drift = std::max(drift, std::abs(vBall(TW.W()) - vBall(W.W())));
    }
    rec.below(tag("rotation_defect", n), defect, 1e-10);
    rec.below(tag("rotation_vball_drift", n), drift, 1e-10);
  }
}

std::vector<LeafReport> leafSweep(const RunConfig& cfg, std::vector<int>* leafDims) {
  const std::vector<int> ns = dims(cfg, {1, 2, 3, 4});
  CounterRng rng = suiteRng(cfg, "leaves");
  LeafSampling sampling;
  sampling.radii = {1.0, 1.1, 1.5, 2.0, 4.0, 10.0};
  std::vector<LeafReport> out;
  for (int k = 0; k < 20; ++k) {
    const int n = ns[static_cast<std::size_t>(k) % ns.size()];
    const RVec u = unitVector(rng, n + 1);
    RVec v = unitVector(rng, n + 1);
    while (std::abs(u.dot(v)) > 0.99) v = unitVector(rng, n + 1);
    out.push_back(checkLeaf([](const CPoint& W) { return vBall(W); }, greatCircleLeaf(u, v), sampling));
    if (leafDims) leafDims->push_back(n);
  }
  return out;
}

void suiteLeaves(const RunConfig& cfg, Recorder& rec) {
  LeafReport total;
  for (const LeafReport& r : leafSweep(cfg, nullptr)) total = mergeReports(total, r);
  rec.below("leaf_extremality_gap", total.maxExtremalityGap, 1e-9);
  rec.below("leaf_laplacian", total.maxLaplacianResidual, 1e-6);
  rec.flag("leaf_no_singular_samples", total.singularSamples == 0);

  // Images off the unit circle leave the real ball.
  CounterRng rng = suiteRng(cfg, "leaves", 1);
  double minIm = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 4;
    const RVec u = unitVector(rng, n + 1);
    const RVec v = unitVector(rng, n + 1);
    if (std::abs(u.dot(v)) > 0.99) continue;
    const LeafSpec leaf = greatCircleLeaf(u, v);
    const double r = rng.uniform(1.01, 10.0), t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    minIm = std::min(minIm, leafPoint(leaf, std::polar(r, t)).im().norm());
  }
  rec.flag("leaf_images_off_real_ball", minIm > 0.0);
}

struct MaxSweep {
  double kernel = 0.0, normDet = 0.0, minEig = std::numeric_limits<double>::infinity();
};

MaxSweep maxSweep(const std::vector<CPoint>& pts, FdOptions opt) {
  MaxSweep s;
  for (const CPoint& z : pts) {
    const MaxReport r = maximalityCheck(z, opt);
    s.kernel = std::max(s.kernel, r.kernelResidual);
    s.normDet = std::max(s.normDet, r.normalizedDet);
    s.minEig = std::min(s.minEig, r.minEigenvalue);
  }
  return s;
}

std::vector<CPoint> offRealPoints(CounterRng& rng, int n, int count) {
  std::vector<CPoint> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const RVec x = uniformBox(rng, n, 3.0);
    const RVec y = unitVector(rng, n) * rng.uniform(0.2, 5.0);
    pts.push_back(CPoint::fromParts(x, y));
  }
  return pts;
}

void suiteKernel(const RunConfig& cfg, Recorder& rec) {
  const double h = cfg.fdStep;
  for (int n : dims(cfg, {2, 3})) {
    CounterRng rng = suiteRng(cfg, "kernel", n);
    const std::vector<CPoint> pts = offRealPoints(rng, n, 1000);
    const MaxSweep fine = maxSweep(pts, {h, true});
    rec.below(tag("kernel_residual_max", n), fine.kernel, 1e-4);
    const double coarse = maxSweep(pts, {2.0 * h, false}).kernel;
    const double plain = maxSweep(pts, {h, false}).kernel;
    rec.upper(tag("kernel_halving_ratio_minus_4", n), std::abs(coarse / plain - 4.0), 0.5);

    double sym = 0.0, imag = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Evaluator f = [](const CPoint& p) { return vKQ(p); };
      const HermitianForm a = wirtingerHessianFD(f, pts[static_cast<std::size_t>(k)], {h, true});
      const HermitianForm b = wirtingerHessianFD(f, pts[static_cast<std::size_t>(k)].conj(), {h, true});
      sym = std::max(sym, (a.entries - b.entries).cwiseAbs().maxCoeff());
      imag = std::max(imag, a.entries.imag().cwiseAbs().maxCoeff());
    }
    rec.below(tag("conjugation_symmetry", n), sym, 1e-8);
    rec.below(tag("hessian_imaginary_part", n), imag, 1e-8);
  }

  for (int m : dims(cfg, {1, 2, 3})) {
    const int dimZ = m + 1;
    CounterRng rng = suiteRng(cfg, "kernel_homogeneous", dimZ);
    double worst = 0.0, homog = 0.0;
    int accepted = 0;
    while (accepted < 500) {
      CVec Z(dimZ);
      for (int j = 0; j < dimZ; ++j) Z[j] = cplx(rng.normal(), rng.normal());
      const CPoint P(Z);
      const double target = rng.uniform(1.5, 10.0);
      const CPoint Q(Z * (target / lieNorm(P)));
      HomogeneousReport r;
      try {
        r = homogeneousKernelCheck(Q, {h, true});
      } catch (const DomainError&) {
        continue;  // too close to the cone where U is not smooth
      }
      ++accepted;
      worst = std::max({worst, r.residualZ, r.residualZbar});
      const cplx lambda = std::polar(rng.uniform(1.1, 5.0), rng.uniform(0.0, 6.0));
      homog = std::max(homog, std::abs(lieU(CPoint(Q.coords() * lambda)) - lieU(Q) -
                                       std::log(std::abs(lambda))));
    }
    rec.below(tag("homogeneous_kernel_max", dimZ), worst, 1e-4);
    rec.below(tag("log_homogeneity", dimZ), homog, 1e-12);
  }
}

void suiteMaximality(const RunConfig& cfg, Recorder& rec) {
  const double h = cfg.fdStep;
  for (int n : dims(cfg, {2, 3})) {
    CounterRng rng = suiteRng(cfg, "kernel", n);  // same draws as the kernel suite
    const std::vector<CPoint> pts = offRealPoints(rng, n, 1000);
    const MaxSweep fine = maxSweep(pts, {h, true});
    rec.below(tag("normalized_det_max", n), fine.normDet, 1e-4);
    rec.upper(tag("min_eigenvalue_deficit", n), std::max(0.0, -fine.minEig), 1e-6);
    const double coarse = maxSweep(pts, {2.0 * h, false}).normDet;
    const double plain = maxSweep(pts, {h, false}).normDet;
    rec.upper(tag("det_halving_ratio_minus_4", n), std::abs(coarse / plain - 4.0), 0.5);
  }
  if (cfg.n <= 1) {
    // One variable: the determinant is the Laplacian / 4, harmonic off the real axis.
    CounterRng rng = suiteRng(cfg, "maximality_1d");
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      CVec z(1);
      z[0] = cplx(rng.uniform(-3.0, 3.0), (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.2, 5.0));
      worst = std::max(worst, std::abs(maximalityCheck(CPoint(z), {h, false}).detValue));
    }
    rec.below("laplacian_quarter[n=1]", worst, 1e-5);
  }
}

void suiteMetric(const RunConfig& cfg, Recorder& rec) {
  CounterRng rng = suiteRng(cfg, "metric");
  const std::vector<int> ns = dims(cfg, {1, 2, 3, 4, 5});
  double relNum = 0.0, spec = 0.0, quad = 0.0, homog = 0.0, tri = 0.0;
  bool allConverged = true;
  const Evaluator V = [](const CPoint& p) { return vKQ(p); };
  for (int k = 0; k < 500; ++k) {
    const int n = ns[static_cast<std::size_t>(k) % ns.size()];
    const RVec x = uniformBox(rng, n, 2.0);
    const RVec y = unitVector(rng, n) * rng.uniform(0.1, 2.0);
    const DeltaEstimate d = baranDeltaNumeric(V, x, y);
    allConverged = allConverged && d.converged;
    const double closed = baranDeltaClosed(x, y);
    relNum = std::max(relNum, std::abs(d.value - closed) / closed);
    const MetricTensor m = metricTensorAt(x);
    spec = std::max(spec, metricSpectrumDeviation(m));
    const double q = y.dot(m.G * y);
    quad = std::max(quad, std::abs(closed * closed - q) / q);
    const double lam = rng.uniform(-3.0, 3.0);
    homog = std::max(homog, std::abs(baranDeltaClosed(x, lam * y) - std::abs(lam) * closed) /
                                std::max(closed, 1e-300));
  }
  for (int k = 0; k < 1000; ++k) {
    const int n = ns[static_cast<std::size_t>(k) % ns.size()];
    const RVec x = uniformBox(rng, n, 2.0);
    const RVec a = uniformBox(rng, n, 1.0), b = uniformBox(rng, n, 1.0);
    const double excess = baranDeltaClosed(x, a + b) - baranDeltaClosed(x, a) - baranDeltaClosed(x, b);
    tri = std::max(tri, excess);
  }
  rec.below("baran_numeric_vs_closed_rel", relNum, 1e-6);
  rec.flag("baran_richardson_converged", allConverged);
  rec.below("metric_spectrum_det_rel", spec, 1e-12);
  rec.below("delta_squared_vs_quadratic_form", quad, 1e-12);
  rec.below("delta_homogeneity", homog, 1e-14);
  rec.upper("delta_triangle_excess", std::max(tri, 0.0), 1e-14);
}

void suiteDensity(const RunConfig& cfg, Recorder& rec) {
  CounterRng rng = suiteRng(cfg, "density");
  double ident = 0.0, dens = 0.0;
  for (int k = 0; k < 600; ++k) {
    const int n = cfg.n > 0 ? cfg.n : 1 + k % 6;
    const RVec x = uniformBox(rng, n, 3.0);
    const DensitySample s = maDensity(x, n);
    const MetricTensor m = metricTensorAt(x);
    const double fact = std::tgamma(n + 1.0);
    ident = std::max(ident, std::abs(s.lambda - fact * std::sqrt(m.detG)) / s.lambda);
    const double ref = std::pow(1.0 + x.squaredNorm(), -(n + 1) / 2.0);
    dens = std::max({dens, std::abs(s.busemann - ref) / ref, std::abs(s.holmesThompson - ref) / ref});
  }
  rec.below("lambda_vs_sqrt_detG", ident, 1e-12);
  rec.below("busemann_holmes_thompson", dens, 1e-12);

  // Monte Carlo dual-ball volumes.
  const int n = cfg.n > 0 ? cfg.n : 2;
  double worstDual = 0.0, worstProd = 0.0;
  for (int k = 0; k < 20; ++k) {
    const RVec x = uniformBox(rng, n, 2.0);
    const MetricTensor m = metricTensorAt(x);
    McOptions opt;
    opt.samples = cfg.mcSamples;
    opt.seed = cfg.seed;
    opt.stream = CounterRng::substream(0xd0a1, static_cast<std::uint64_t>(k));
    VolumeEstimate dual;
    if (n <= 2) {
      dual = dualBallVolumeMC([&x](const RVec& y) { return baranDeltaClosed(x, y); }, n, opt);
    } else {
      dual = dualBallVolumeMC(m, opt);
    }
    const double closed = dualBallVolumeClosed(m);
    worstDual = std::max(worstDual, std::abs(dual.value - closed) / dual.stdError);

    opt.stream = CounterRng::substream(0x9a1, static_cast<std::uint64_t>(k));
    const VolumeEstimate primal = primalBallVolumeMC(m, opt);
    const double prod = primal.value * dual.value;
    const double sigma = std::hypot(primal.stdError * dual.value, dual.stdError * primal.value);
    const double w = unitBallVolume(n);
    worstProd = std::max(worstProd, std::abs(prod - w * w) / sigma);
  }
  rec.upper(tag("dual_volume_sigmas", n), worstDual, 3.0);
  rec.upper(tag("volume_product_sigmas", n), worstProd, 3.0);
}

void suiteMass(const RunConfig& cfg, Recorder& rec) {
  for (int n : dims(cfg, {1, 2, 3, 4, 5, 6})) {
    const MassResult m = totalMass(n);
    const double ref = totalMassClosedForm(n);
    rec.below(tag("total_mass_rel", n), std::abs(m.value - ref) / ref, 1e-6);
    rec.flag(tag("quadrature_converged", n), m.converged);
  }
  rec.below("mass_n1_vs_pi", std::abs(totalMass(1).value - std::numbers::pi) / std::numbers::pi, 1e-6);
  rec.below("mass_n2_vs_4pi", std::abs(totalMass(2).value - 4 * std::numbers::pi) / (4 * std::numbers::pi),
            1e-6);
  const double six = 6 * std::numbers::pi * std::numbers::pi;
  rec.below("mass_n3_vs_6pi2", std::abs(totalMass(3).value - six) / six, 1e-6);
}

void suiteBallPipeline(const RunConfig& cfg, Recorder& rec) {
  PipelineOptions opt;
  opt.mc.seed = cfg.seed;
  const std::vector<RVec> xs = {RVec::Zero(2), (RVec(2) << 0.5, 0.0).finished(),
                                (RVec(2) << 0.3, 0.4).finished(), RVec::Zero(1)};
  const char* names[] = {"ball_density[x=0]", "ball_density[x=(0.5,0)]", "ball_density[x=(0.3,0.4)]",
                         "ball_density[n=1,x=0]"};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const PipelineResult r = ballDensityPipeline(xs[k], opt);
    const double ref = ballDensityClosedForm(xs[k]);
    rec.below(names[k], std::abs(r.lambda - ref) / ref, 0.02);
  }
}

void suiteEnvelope(const RunConfig& cfg, Recorder& rec) {
  CounterRng rng = suiteRng(cfg, "envelope");
  const std::vector<int> ns = dims(cfg, {1, 2, 3, 4});
  double sound = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 100'000; ++k) {
    const int n = ns[static_cast<std::size_t>(k) % ns.size()];
    const CPoint z = CPoint::fromParts(uniformBox(rng, n, 3.0), uniformBox(rng, n, 3.0));
    LinearSearchBudget lb;
    lb.seed = cfg.seed;
    const EnvelopeCertificate c = linearFamilyLB(z, lb);
    sound = std::max(sound, c.lowerBound - vKQ(z));
    if (k % 1000 == 0) {
      ProductBudget pb;
      pb.linear = lb;
      pb.seed = cfg.seed + static_cast<std::uint64_t>(k);
      for (int d = 2; d <= 4; ++d) sound = std::max(sound, productFamilyLB(z, d, pb).lowerBound - vKQ(z));
    }
  }
  rec.upper("certificate_excess_over_vkq", std::max(sound, 0.0), 1e-9);

  double tight = 0.0, tight1 = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = ns[static_cast<std::size_t>(k) % ns.size()];
    const CPoint z = CPoint::fromParts(RVec::Zero(n), uniformBox(rng, n, 5.0));
    tight = std::max(tight, std::abs(linearFamilyLB(z).lowerBound - vKQ(z)));
    CVec w(1);
    w[0] = cplx(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
    tight1 = std::max(tight1, std::abs(linearFamilyLB(CPoint(w)).lowerBound - oneVarExact(w[0])));
  }
  rec.below("imaginary_axis_tightness", tight, 1e-10);
  rec.below("one_variable_tightness", tight1, 1e-10);

  // Homogenization identities on strip points.
  double lift = 0.0, roundTrip = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = ns[static_cast<std::size_t>(k) % ns.size()];
    std::vector<Monomial> terms;
    int deg = 0;
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      m.exponents.resize(static_cast<std::size_t>(n));
      for (int& e : m.exponents) e = static_cast<int>(rng.uniform(0.0, 3.0));
      m.coeff = cplx(rng.normal(), rng.normal());
      int s = 0;
      for (int e : m.exponents) s += e;
      deg = std::max(deg, s);
      terms.push_back(m);
    }
    const Polynomial p(n, terms);
    const int d = deg + static_cast<int>(rng.uniform(0.0, 2.0));
    const StripPoint z(CPoint::fromParts(uniformBox(rng, n, 2.0), ballPoint(rng, n, cfg.strip)), cfg.strip);
    lift = std::max(lift, liftIdentityResidual(p, d, z));
    const Polynomial back = dehomogenize(homogenize(p, d));
    const CVec zz = z.z().coords();
    roundTrip = std::max(roundTrip, std::abs(back(zz) - p(zz)) / std::max(1.0, std::abs(p(zz))));
  }
  rec.below("homogenized_lift_identity_rel", lift, 1e-12);
  rec.below("dehomogenize_round_trip", roundTrip, 1e-12);

  // Degree monotonicity with nested budgets.
  double drop = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = ns[static_cast<std::size_t>(k) % ns.size()];
    const CPoint z = CPoint::fromParts(uniformBox(rng, n, 2.0), uniformBox(rng, n, 2.0));
    double prev = -std::numeric_limits<double>::infinity();
    for (int d = 1; d <= 4; ++d) {
      const double v = productFamilyLB(z, d).lowerBound;
      drop = std::max(drop, prev - v);
      prev = v;
    }
  }
  rec.upper("degree_monotonicity_drop", std::max(drop, 0.0), 1e-12);
}

void suiteCapacity(const RunConfig& cfg, Recorder& rec) {
  const double target = 0.5 * std::numbers::ln2;
  std::vector<double> sups;
  for (int n : dims(cfg, {1, 2, 3, 4, 5, 6})) {
    CapacityBudget b;
    b.seed = cfg.seed;
    const CapacityResult r = alexanderSup(n, b);
    sups.push_back(r.supValue);
    rec.below(tag("sup_vs_half_log2", n), std::abs(r.supValue - target), 1e-8);
    rec.below(tag("capacity_vs_inv_sqrt2", n), std::abs(r.capacity - 1.0 / std::numbers::sqrt2), 1e-8);
    rec.flag(tag("optimizer_converged", n), r.converged);
  }
  const auto [lo, hi] = std::minmax_element(sups.begin(), sups.end());
  rec.below("sup_spread_across_n", *hi - *lo, 1e-10);

  CounterRng rng = suiteRng(cfg, "capacity");
  double over = -1.0, compat = 0.0;
  for (int k = 0; k < 100'000; ++k) {
    const int n = 1 + k % 4;
    CVec z(n);
    for (int j = 0; j < n; ++j) z[j] = cplx(3.0 * rng.normal(), 3.0 * rng.normal());
    over = std::max(over, omegaExtremal(Chart::affine, CPoint(z)) - target);
    over = std::max(over, omegaExtremal(Chart::infinity, CPoint(z)) - target);
    if (k % 100 == 0) {
      const CVec u = z.normalized();
      compat = std::max(compat, std::abs(omegaExtremal(Chart::affine, CPoint(CVec(u * 1e6))) -
                                         omegaExtremal(Chart::infinity, CPoint(u))));
    }
  }
  rec.upper("omega_bound_excess", std::max(over, 0.0), 1e-12);
  rec.below("chart_compatibility", compat, 1e-6);
}

void suitePropBaran(const RunConfig& cfg, Recorder& rec) {
  for (int n : dims(cfg, {1, 2, 3})) {
    PropBaranBudget b;
    b.n = n;
    b.seed = cfg.seed;
    const PropBaranReport r = propBaranConditions(b);
    rec.below(tag("q_pluriharmonic_laplacian", n), r.maxLaplacianQ, 1e-6);
    rec.upper(tag("gap_negativity", n), std::max(0.0, -r.minGap), 1e-12);
    rec.upper(tag("gap_on_real_grid", n), r.maxRealGap, 1e-12);
    rec.upper(tag("q_limit_exponent_minus_2", n),
              std::max(std::abs(r.minExponent - 2.0), std::abs(r.maxExponent - 2.0)), 0.1);
  }
}

using SuiteFn = void (*)(const RunConfig&, Recorder&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"onevar", suiteOnevar},         {"fullin", suiteFullin},   {"semi", suiteSemi},
      {"leaves", suiteLeaves},         {"kernel", suiteKernel},   {"maximality", suiteMaximality},
      {"metric", suiteMetric},         {"density", suiteDensity}, {"mass", suiteMass},
      {"ballpipeline", suiteBallPipeline}, {"envelope", suiteEnvelope}, {"capacity", suiteCapacity},
      {"propbaran", suitePropBaran}};
  return r;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {"onevar", "fullin",  "semi",         "leaves",
                                                 "kernel", "maximality", "metric",    "density",
                                                 "mass",   "ballpipeline", "envelope", "capacity",
                                                 "propbaran"};
  return names;
}

bool isSuite(const std::string& name) { return registry().count(name) > 0; }

SuiteResult runSuite(const std::string& name, const RunConfig& cfg) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + name);
  SuiteResult res;
  res.name = name;
  Recorder rec(cfg);
  try {
    it->second(cfg, rec);
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  res.checks = rec.take();
  res.pass = res.error.empty() && !res.checks.empty() &&
             std::all_of(res.checks.begin(), res.checks.end(), [](const Check& c) { return c.pass; });
  return res;
}

std::vector<Table> plotTables(const RunConfig& cfg) {
  std::vector<Table> out;

  Table dens{"density_profile_n2", {"r", "lambda", "busemann", "holmes_thompson", "radial_mass_integrand"}, {}};
  for (int k = 0; k <= 4000; ++k) {
    const double r = 0.025 * k;
    RVec x(2);
    x << r, 0.0;
    const DensitySample s = maDensity(x, 2);
    dens.rows.push_back({r, s.lambda, s.busemann, s.holmesThompson, 2.0 * std::numbers::pi * r * s.lambda});
  }
  out.push_back(std::move(dens));

  Table env{"envelope_gaps", {"point", "n", "degree", "vkq", "lower_bound", "gap"}, {}};
  CounterRng rng = suiteRng(cfg, "envelope_plot");
  for (int p = 0; p < 12; ++p) {
    const int n = 2 + p % 2;
    const CPoint z = CPoint::fromParts(uniformBox(rng, n, 2.0), uniformBox(rng, n, 2.0));
    ProductBudget pb;
    pb.seed = cfg.seed;
    pb.linear.seed = cfg.seed;
    const double v = vKQ(z);
    for (int d = 1; d <= 6; ++d) {
      const double lb = productFamilyLB(z, d, pb).lowerBound;
      env.rows.push_back({double(p), double(n), double(d), v, lb, v - lb});
    }
  }
  out.push_back(std::move(env));

  Table leaves{"leaf_gaps", {"leaf", "n", "max_extremality_gap", "max_laplacian_residual", "samples"}, {}};
  std::vector<int> leafDims;
  const std::vector<LeafReport> reps = leafSweep(cfg, &leafDims);
  for (std::size_t k = 0; k < reps.size(); ++k)
    leaves.rows.push_back({double(k), double(leafDims[k]), reps[k].maxExtremalityGap,
                           reps[k].maxLaplacianResidual, double(reps[k].samples)});
  out.push_back(std::move(leaves));
  return out;
}

}  // namespace pluri
