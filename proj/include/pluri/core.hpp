#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace pluri {

using cplx = std::complex<double>;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

/// Raised when an input lies outside an operation's domain (bad dimension,
/// non-finite entry, a point on a branch cut, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point of C^n together with the two scalar invariants every closed form in
/// this library is built from: |z|^2 = sum |z_j|^2 and z^2 = sum z_j^2.
class CPoint {
 public:
  CPoint() = default;
  explicit CPoint(CVec coords);

  static CPoint fromReal(const RVec& x);
  static CPoint fromParts(const RVec& re, const RVec& im);

  const CVec& coords() const { return coords_; }
  Eigen::Index dim() const { return coords_.size(); }
  cplx operator[](Eigen::Index j) const { return coords_[j]; }

  double normSq() const { return normSq_; }
  cplx quadSum() const { return quadSum_; }

  RVec re() const { return coords_.real(); }
  RVec im() const { return coords_.imag(); }

  CPoint conj() const { return CPoint(coords_.conjugate()); }

 private:
  CVec coords_;
  double normSq_ = 0.0;
  cplx quadSum_ = 0.0;
};

CPoint quadAndNorm(std::span<const cplx> z);

/// Branch h >= 1 of the inverse of the Joukowski map t = (h + 1/h) / 2.
double joukowskiInverse(double t);

/// log h(1 + delta) for delta >= 0, evaluated without forming 1 + delta.
double logJoukowskiInverse1p(double delta);

/// Lagrange form of |a|^2 |b|^2 - (a.b)^2 = sum_{j<k} (a_j b_k - a_k b_j)^2.
/// Exactly nonnegative in floating point.
double gramDefect(const RVec& a, const RVec& b);

using Evaluator = std::function<double(const CPoint&)>;

/// Mixed Wirtinger Hessian d^2 f / dz_j dzbar_k, Hermitian-symmetrized, with its
/// spectrum in ascending order.
struct HermitianForm {
  Eigen::MatrixXcd entries;
  RVec eigenvalues;
  double hermitianDefect = 0.0;
};

HermitianForm makeHermitianForm(Eigen::MatrixXcd raw);

struct FdOptions {
  double step = 1e-4;
  bool richardson = false;  // combine steps h and h/2 into an O(h^4) estimate
};

/// Thrown when the evaluator returns a non-finite value on the stencil.
class SingularityError : public DomainError {
 public:
  SingularityError(const std::string& what, CPoint node)
      : DomainError(what), node_(std::move(node)) {}
  const CPoint& node() const { return node_; }

 private:
  CPoint node_;
};

/// Centered-difference Wirtinger Hessian. Uses
///   d^2/dz_j dzbar_k = 1/4 (f_{x_j x_k} + f_{y_j y_k}) + i/4 (f_{x_j y_k} - f_{y_j x_k}).
HermitianForm wirtingerHessianFD(const Evaluator& f, const CPoint& z, FdOptions opt = {});

}  // namespace pluri
