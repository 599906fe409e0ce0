#pragma once

#include "pluri/core.hpp"

namespace pluri {

/// A value that may sit on a singular locus. When `singular` is set the value
/// is -infinity and must not be used as a number.
struct EvalResult {
  double value = 0.0;
  bool singular = false;
};

/// Threshold on |1 + z^2| below which weightQ reports the singular locus.
inline constexpr double kWeightSingularEps = 1e-300;

/// Q(z) = 1/2 log |1 + z^2|, the pluriharmonic extension of 1/2 log(1 + x^2).
EvalResult weightQ(const CPoint& z);

/// (1 + |z|^2)^2 - |1 + z^2|^2 evaluated through the exact identity
/// 4 (y^2 + x^2 y^2 - (x.y)^2), z = x + iy.
double vkqRadicand(const CPoint& z);

/// The same radicand formed directly from |z|^2 and z^2. Loses accuracy near
/// R^n; kept for cross-checks.
double vkqRadicandDirect(const CPoint& z);

/// Weighted extremal function of K = R^n with potential 1/2 log(1 + x^2):
///   V(z) = 1/2 log([1+|z|^2] + {[1+|z|^2]^2 - |1+z^2|^2}^{1/2}).
double vKQ(const CPoint& z);

/// Lundin's formula for the real unit ball of C^m:
///   V(W) = 1/2 log h(|W|^2 + |W^2 - 1|).
/// Returns exactly 0 when the argument of h is within kBallEps of 1.
double vBall(const CPoint& W);

/// h-argument minus one, |W|^2 + |W^2 - 1| - 1, without cancellation.
double vBallExcess(const CPoint& W);

inline constexpr double kBallEps = 4e-15;

/// Logarithmically homogeneous extremal function of the Lie ball,
///   U(Z) = 1/2 log(|Z|^2 + sqrt(|Z|^4 - |Z^2|^2)),  Z != 0.
double lieU(const CPoint& Z);

/// Lie norm N(Z) with N(Z)^2 = |Z|^2 + sqrt(|Z|^4 - |Z^2|^2).
double lieNorm(const CPoint& Z);
bool lieMember(const CPoint& Z, double eps = 1e-12);

enum class Chart { affine, infinity };

/// Unweighted omega-psh extremal function of RP^n in the affine chart [1:z]
/// or the hyperplane at infinity [0:z]. Values lie in [0, 1/2 log 2].
double omegaExtremal(Chart chart, const CPoint& z);

}  // namespace pluri
