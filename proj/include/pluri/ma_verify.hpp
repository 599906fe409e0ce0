#pragma once

#include "pluri/core.hpp"

namespace pluri {

/// Finite-difference evidence that the candidate u = V_{K,Q} is psh and maximal
/// off R^n.
struct MaxReport {
  double kernelResidual = 0.0;   // ||H (z - zbar)|| / ||z - zbar||
  double detValue = 0.0;         // det of the symmetrized Hessian
  double normalizedDet = 0.0;    // |det| / product of the top n-1 eigenvalues
  double minEigenvalue = 0.0;
  RVec eigenvalues;
};

/// Minimum distance, in units of the FD step, between the stencil centre and
/// the sets where the candidate is not smooth.
inline constexpr double kStandOff = 10.0;

MaxReport kernelCheck(const CPoint& z, FdOptions opt = {1e-3, false});
MaxReport maximalityCheck(const CPoint& z, FdOptions opt = {1e-3, false});

struct HomogeneousReport {
  double residualZ = 0.0;     // ||H_U(Z) Z||
  double residualZbar = 0.0;  // ||H_U(Z) conj(Z)||
  double minEigenvalue = 0.0;
};

/// Kernel identities H_U(Z) Z = 0 and H_U(Z) conj(Z) = 0 for the homogenized
/// candidate U on C^{n+1}. Z must be off the closed Lie ball and off the cone
/// C * R^{n+1} where U is not smooth.
HomogeneousReport homogeneousKernelCheck(const CPoint& Z, FdOptions opt = {1e-3, false});

}  // namespace pluri
