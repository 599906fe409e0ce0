#include "pluri/capacity.hpp"

#include <cmath>
#include <numbers>

#include "pluri/rng.hpp"

namespace pluri {

namespace {

// Complex residual r(z) = N(z) / D(z) and its real 2 x 2n Jacobian in (x, y).
struct Residual {
  cplx r;
  Eigen::MatrixXd J;
};

Residual evalResidual(const CVec& z, Chart chart) {
  const Eigen::Index n = z.size();
  const cplx N = (chart == Chart::affine ? 1.0 : 0.0) + z.cwiseProduct(z).sum();
  const double D = (chart == Chart::affine ? 1.0 : 0.0) + z.squaredNorm();
  Residual res{N / D, Eigen::MatrixXd(2, 2 * n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    const cplx dNx = 2.0 * z[j];
    const cplx dNy = cplx(0.0, 2.0) * z[j];
    const double dDx = 2.0 * z[j].real();
    const double dDy = 2.0 * z[j].imag();
    const cplx gx = dNx / D - N * dDx / (D * D);
    const cplx gy = dNy / D - N * dDy / (D * D);
    res.J(0, j) = gx.real();
    res.J(1, j) = gx.imag();
    res.J(0, n + j) = gy.real();
    res.J(1, n + j) = gy.imag();
  }
  return res;
}

CVec polish(CVec z, Chart chart, int maxIterations) {
  const Eigen::Index n = z.size();
  double mu = 1e-3;
  Residual cur = evalResidual(z, chart);
  for (int it = 0; it < maxIterations && std::abs(cur.r) > 1e-16; ++it) {
    const Eigen::Vector2d r(cur.r.real(), cur.r.imag());
    const Eigen::Matrix2d JJt = cur.J * cur.J.transpose();
    bool accepted = false;
    for (int tries = 0; tries < 30 && !accepted; ++tries) {
      const Eigen::Vector2d w = (JJt + mu * Eigen::Matrix2d::Identity()).ldlt().solve(r);
      const RVec step = -cur.J.transpose() * w;
      CVec trial(n);
      for (Eigen::Index j = 0; j < n; ++j) trial[j] = z[j] + cplx(step[j], step[n + j]);
      if (chart == Chart::infinity) trial.normalize();
      const Residual next = evalResidual(trial, chart);
      if (std::abs(next.r) < std::abs(cur.r)) {
        z = trial;
        cur = next;
        mu = std::max(mu * 0.1, 1e-14);
        accepted = true;
      } else {
        mu *= 10.0;
      }
    }
    if (!accepted) break;
  }
  return z;
}

bool lexLess(const CVec& a, const CVec& b) {
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    if (a[j].real() != b[j].real()) return a[j].real() < b[j].real();
    if (a[j].imag() != b[j].imag()) return a[j].imag() < b[j].imag();
  }
  return false;
}

}  // namespace

CapacityResult alexanderSup(int n, const CapacityBudget& budget) {
  if (n < 1) throw DomainError("alexanderSup: n must be >= 1");
  CapacityResult best;
  best.supValue = -1.0;
  best.affineSup = best.infinitySup = -1.0;

  auto consider = [&](Chart chart, const CVec& z) {
    const double v = omegaExtremal(chart, CPoint(z));
    double& chartBest = chart == Chart::affine ? best.affineSup : best.infinitySup;
    chartBest = std::max(chartBest, v);
    const bool wins = v > best.supValue ||
                      (v == best.supValue &&
                       (static_cast<int>(chart) < static_cast<int>(best.chart) ||
                        (chart == best.chart && lexLess(z, best.argmax))));
    if (wins) {
      best.supValue = v;
      best.chart = chart;
      best.argmax = z;
    }
  };

  for (int s = 0; s < budget.affineStarts; ++s) {
    CounterRng rng(budget.seed, CounterRng::substream(0xaff1, static_cast<std::uint64_t>(s)));
    CVec z(n);
    for (int j = 0; j < n; ++j) z[j] = cplx(rng.normal(), rng.normal());
    consider(Chart::affine, polish(z, Chart::affine, budget.maxIterations));
  }
  for (int s = 0; s < budget.infinityStarts; ++s) {
    CounterRng rng(budget.seed, CounterRng::substream(0x1af, static_cast<std::uint64_t>(s)));
    CVec z(n);
    for (int j = 0; j < n; ++j) z[j] = cplx(rng.normal(), rng.normal());
    z.normalize();
    consider(Chart::infinity, polish(z, Chart::infinity, budget.maxIterations));
  }

  best.capacity = std::exp(-best.supValue);
  best.argmaxResidual = std::abs(evalResidual(best.argmax, best.chart).r);
  if (best.chart == Chart::affine)
    best.argmaxResidual = std::abs(1.0 + best.argmax.cwiseProduct(best.argmax).sum());
  best.converged = best.supValue >= 0.5 * std::numbers::ln2 - 1e-4;
  return best;
}

double alexanderCapacity(int n, const CapacityBudget& budget) {
  return alexanderSup(n, budget).capacity;
}

}  // namespace pluri
