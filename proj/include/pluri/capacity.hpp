#pragma once

#include <cstdint>

#include "pluri/core.hpp"
#include "pluri/extremal.hpp"

namespace pluri {

struct CapacityBudget {
  int affineStarts = 32;
  int infinityStarts = 32;
  int maxIterations = 100;
  std::uint64_t seed = 20261015;
};

struct CapacityResult {
  double supValue = 0.0;
  Chart chart = Chart::affine;
  CVec argmax;
  double capacity = 1.0;        // exp(-supValue)
  double affineSup = 0.0;       // best value found in each chart
  double infinitySup = 0.0;
  double argmaxResidual = 0.0;  // |1 + z^2| (affine) or |z^2| / |z|^2 (infinity) at argmax
  bool converged = true;        // false if supValue < 1/2 log 2 - 1e-4
};

/// sup over P^n of the omega-psh extremal function of RP^n, by multi-start
/// damped Gauss-Newton on the residual (1 + z^2) / (1 + |z|^2) in the affine
/// chart and z^2 / |z|^2 on unit vectors in the chart at infinity.
/// Ties break by value, then affine before infinity, then lexicographic coordinates.
CapacityResult alexanderSup(int n, const CapacityBudget& budget = {});

/// T_omega(RP^n) = exp(-sup v).
double alexanderCapacity(int n, const CapacityBudget& budget = {});

}  // namespace pluri
