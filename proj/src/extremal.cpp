#include "pluri/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pluri {

EvalResult weightQ(const CPoint& z) {
  const double m = std::abs(1.0 + z.quadSum());
  if (m < kWeightSingularEps) return {-std::numeric_limits<double>::infinity(), true};
  return {0.5 * std::log(m), false};
}

double vkqRadicand(const CPoint& z) {
  const RVec x = z.re();
  const RVec y = z.im();
  return 4.0 * (y.squaredNorm() + gramDefect(x, y));
}

double vkqRadicandDirect(const CPoint& z) {
  const double a = 1.0 + z.normSq();
  return a * a - std::norm(1.0 + z.quadSum());
}

double vKQ(const CPoint& z) {
  return 0.5 * std::log(1.0 + z.normSq() + std::sqrt(vkqRadicand(z)));
}

double vBallExcess(const CPoint& W) {
  // With W = u + iv: a = |W|^2 - 1, b = |W^2 - 1|, excess = a + b. For a < 0 use
  // b^2 - a^2 = 4 v^2 (1 - u^2) + 4 (u.v)^2.
  const RVec u = W.re();
  const RVec v = W.im();
  const double u2 = u.squaredNorm();
  const double v2 = v.squaredNorm();
  const double a = u2 + v2 - 1.0;
  const double b = std::abs(W.quadSum() - 1.0);
  if (a >= 0.0) return a + b;
  const double uv = u.dot(v);
  const double num = 4.0 * v2 * (1.0 - u2) + 4.0 * uv * uv;
  const double den = b - a;
  return den > 0.0 ? std::max(0.0, num / den) : 0.0;
}

double vBall(const CPoint& W) {
  const double excess = vBallExcess(W);
  if (excess <= kBallEps * std::max(1.0, W.normSq())) return 0.0;
  return 0.5 * logJoukowskiInverse1p(excess);
}

double lieNorm(const CPoint& Z) {
  const double root = 2.0 * std::sqrt(gramDefect(Z.re(), Z.im()));
  return std::sqrt(Z.normSq() + root);
}

double lieU(const CPoint& Z) {
  if (Z.normSq() == 0.0) throw DomainError("lieU: Z = 0 is outside the domain");
  const double root = 2.0 * std::sqrt(gramDefect(Z.re(), Z.im()));
  return 0.5 * std::log(Z.normSq() + root);
}

bool lieMember(const CPoint& Z, double eps) { return lieNorm(Z) <= 1.0 + eps; }

double omegaExtremal(Chart chart, const CPoint& z) {
  double ratio = 0.0;  // sqrt(1 - |.|^2 / (.)^2), in [0, 1]
  if (chart == Chart::affine) {
    ratio = std::sqrt(vkqRadicand(z)) / (1.0 + z.normSq());
  } else {
    if (z.normSq() == 0.0) throw DomainError("omegaExtremal: [0:0] is not a point of P^n");
    ratio = 2.0 * std::sqrt(gramDefect(z.re(), z.im())) / z.normSq();
  }
  return 0.5 * std::log1p(std::min(ratio, 1.0));
}

}  // namespace pluri
