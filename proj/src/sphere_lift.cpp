#include "pluri/sphere_lift.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pluri/extremal.hpp"

namespace pluri {

SpherePoint::SpherePoint(CPoint W, double tol) : W_(std::move(W)) {
  if (W_.dim() < 2) throw DomainError("SpherePoint: need at least two coordinates");
  defect_ = std::abs(W_.quadSum() - 1.0);
  if (!(defect_ < tol)) {
    std::ostringstream os;
    os << "SpherePoint: |W^2 - 1| = " << defect_ << " exceeds tolerance " << tol;
    throw DomainError(os.str());
  }
}

CPoint SpherePoint::tail() const { return CPoint(W_.coords().tail(W_.dim() - 1)); }

StripPoint::StripPoint(CPoint z, double s) : z_(std::move(z)) {
  if (!(s > 0.0 && s < 1.0)) throw DomainError("StripPoint: strip parameter must lie in (0, 1)");
  stripNorm_ = z_.im().norm();
  if (!(stripNorm_ < s)) {
    std::ostringstream os;
    os << "StripPoint: ||Im z|| = " << stripNorm_ << " is not below s = " << s;
    throw DomainError(os.str());
  }
}

SpherePoint liftF(const StripPoint& zp) {
  const CPoint& z = zp.z();
  const cplx g = 1.0 + z.quadSum();
  if (std::abs(g) == 0.0 || std::numbers::pi - std::abs(std::arg(g)) < kBranchGuard)
    throw DomainError("liftF: 1 + z^2 is on or near the branch cut of the square root");
  const cplx f = 1.0 / std::sqrt(g);
  CVec W(z.dim() + 1);
  W[0] = f;
  W.tail(z.dim()) = f * z.coords();
  return SpherePoint(CPoint(std::move(W)));
}

double liftNormSq(const StripPoint& zp) {
  const CPoint& z = zp.z();
  return (1.0 + z.normSq()) / std::abs(1.0 + z.quadSum());
}

double fullinResidual(const StripPoint& zp) {
  const SpherePoint W = liftF(zp);
  const double lhs = vBall(W.W());
  const double rhs = vKQ(zp.z()) - weightQ(zp.z()).value;
  return std::abs(lhs - rhs);
}

double semiIdentity(const SpherePoint& W) {
  return std::abs(vBall(W.W()) - vBall(W.tail()));
}

SpherePoint orthogonalPushforward(const Eigen::MatrixXd& T, const SpherePoint& W) {
  const Eigen::Index m = W.W().dim();
  if (T.rows() != m || T.cols() != m)
    throw DomainError("orthogonalPushforward: matrix size does not match the point");
  const double dev = (T.transpose() * T - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
  if (!(dev <= 1e-12)) throw DomainError("orthogonalPushforward: matrix is not orthogonal");
  const RVec u = T * W.W().re();
  const RVec v = T * W.W().im();
  return SpherePoint(CPoint::fromParts(u, v), 10.0 * kTolVariety);
}

}  // namespace pluri
