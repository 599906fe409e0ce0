#pragma once

#include <vector>

#include "pluri/core.hpp"

namespace pluri {

/// Complex ellipse zeta -> a + c zeta + conj(c) / zeta.
struct LeafSpec {
  RVec a;
  CVec c;
};

CPoint leafPoint(const LeafSpec& leaf, cplx zeta);

/// Complexified great circle u cos(t) + v sin(t): a = 0, c = (u - iv) / 2.
/// u and v are re-orthonormalized internally.
LeafSpec greatCircleLeaf(const RVec& u, const RVec& v);

struct LeafReport {
  double maxExtremalityGap = 0.0;    // sup |V(F(zeta)) - log+ |zeta||
  double maxLaplacianResidual = 0.0; // sup |Delta_zeta V(F(zeta))| for |zeta| > 1
  int singularSamples = 0;           // samples where the evaluator was non-finite
  int samples = 0;
};

struct LeafSampling {
  std::vector<double> radii{1.1, 1.5, 2.0, 4.0, 10.0};
  int angles = 64;
  double laplacianStep = 1e-3;
};

/// Samples the evaluator on the leaf. Radii equal to 1 contribute only to the
/// extremality gap; the Laplacian is taken where |zeta| > 1.
LeafReport checkLeaf(const Evaluator& V, const LeafSpec& leaf, const LeafSampling& sampling = {});

/// Order-independent merge of sweep results.
LeafReport mergeReports(const LeafReport& a, const LeafReport& b);

}  // namespace pluri
