#pragma once

#include "pluri/core.hpp"

namespace pluri {

inline constexpr double kTolVariety = 1e-10;
inline constexpr double kBranchGuard = 1e-6;
inline constexpr double kDefaultStrip = 0.9;

/// A point of the complexified sphere A = {W in C^{n+1} : W_0^2 + ... + W_n^2 = 1}.
class SpherePoint {
 public:
  /// Throws DomainError when |W^2 - 1| exceeds `tol`.
  explicit SpherePoint(CPoint W, double tol = kTolVariety);

  const CPoint& W() const { return W_; }
  cplx w0() const { return W_[0]; }
  /// W' = (W_1, ..., W_n).
  CPoint tail() const;
  double defect() const { return defect_; }

 private:
  CPoint W_;
  double defect_ = 0.0;
};

/// A point of the strip {z : ||Im z|| < s}, s < 1, around R^n.
class StripPoint {
 public:
  StripPoint(CPoint z, double s = kDefaultStrip);
  const CPoint& z() const { return z_; }
  double stripNorm() const { return stripNorm_; }

 private:
  CPoint z_;
  double stripNorm_ = 0.0;
};

/// F(z) = (f(z), z f(z)) with f = (1 + z^2)^{-1/2}, principal branch.
SpherePoint liftF(const StripPoint& z);

/// |F(z)|^2 = (1 + |z|^2) / |1 + z^2|.
double liftNormSq(const StripPoint& z);

/// |V_{B_{n+1}}(F(z)) - (V_{K,Q}(z) - Q(z))|.
double fullinResidual(const StripPoint& z);

/// |V_{B_{n+1}}(W) - V_{B_n}(W')| for W on A.
double semiIdentity(const SpherePoint& W);

/// Complex-linear extension T(u + iv) = Tu + iTv of a real orthogonal map.
SpherePoint orthogonalPushforward(const Eigen::MatrixXd& T, const SpherePoint& W);

}  // namespace pluri
