#include "pluri/ma_verify.hpp"

#include <cmath>
#include <sstream>

#include "pluri/extremal.hpp"

namespace pluri {

namespace {

void requireOffReals(const CPoint& z, double step) {
  const double imNorm = z.im().norm();
  if (!(imNorm >= kStandOff * step)) {
    std::ostringstream os;
    os << "maximality: ||Im z|| = " << imNorm << " is within " << kStandOff
       << " FD steps of R^n, where V_{K,Q} is not smooth";
    throw DomainError(os.str());
  }
}

MaxReport analyze(const HermitianForm& H, const CPoint& z) {
  MaxReport rep;
  const Eigen::Index n = z.dim();
  const CVec d = z.coords() - z.coords().conjugate();
  rep.kernelResidual = (H.entries * d).norm() / d.norm();
  rep.eigenvalues = H.eigenvalues;
  rep.minEigenvalue = H.eigenvalues[0];
  rep.detValue = H.eigenvalues.prod();
  // Ascending order: eigenvalues 1..n-1 are the top n-1.
  double scale = 1.0;
  for (Eigen::Index j = 1; j < n; ++j) scale *= std::abs(H.eigenvalues[j]);
  rep.normalizedDet = scale > 0.0 ? std::abs(rep.detValue) / scale : std::abs(rep.detValue);
  return rep;
}

}  // namespace

MaxReport kernelCheck(const CPoint& z, FdOptions opt) {
  requireOffReals(z, opt.step);
  return analyze(wirtingerHessianFD(vKQ, z, opt), z);
}

MaxReport maximalityCheck(const CPoint& z, FdOptions opt) {
  // Same Hessian; callers read the determinant and spectrum fields.
  return kernelCheck(z, opt);
}

HomogeneousReport homogeneousKernelCheck(const CPoint& Z, FdOptions opt) {
  const double norm = std::sqrt(Z.normSq());
  if (!(norm > 0.0)) throw DomainError("homogeneousKernelCheck: Z = 0");
  if (!(lieNorm(Z) >= 1.0 + kStandOff * opt.step))
    throw DomainError("homogeneousKernelCheck: Z is within the stand-off of the Lie ball");
  if (Z.dim() >= 2) {
    // Distance to the cone C * R^{n+1} is comparable to |Z| * sqrt(1 - |Z^2|^2/|Z|^4) / 2.
    const double coneRatio = 2.0 * std::sqrt(gramDefect(Z.re(), Z.im())) / Z.normSq();
    if (!(0.5 * coneRatio * norm >= kStandOff * opt.step))
      throw DomainError("homogeneousKernelCheck: Z is too close to a complex line through a real point");
  }
  const HermitianForm H = wirtingerHessianFD(lieU, Z, opt);
  HomogeneousReport rep;
  rep.residualZ = (H.entries * Z.coords()).norm();
  rep.residualZbar = (H.entries * Z.coords().conjugate()).norm();
  rep.minEigenvalue = H.eigenvalues[0];
  return rep;
}

}  // namespace pluri
