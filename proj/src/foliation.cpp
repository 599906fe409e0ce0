#include "pluri/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pluri {

CPoint leafPoint(const LeafSpec& leaf, cplx zeta) {
  if (zeta == 0.0) throw DomainError("leafPoint: zeta = 0 is a pole of the leaf");
  if (leaf.a.size() != leaf.c.size()) throw DomainError("leafPoint: a and c differ in dimension");
  CVec p = leaf.a.cast<cplx>() + leaf.c * zeta + leaf.c.conjugate() / zeta;
  return CPoint(std::move(p));
}

LeafSpec greatCircleLeaf(const RVec& u, const RVec& v) {
  if (u.size() != v.size() || u.size() < 2)
    throw DomainError("greatCircleLeaf: u and v must share a dimension >= 2");
  const double nu = u.norm();
  if (!(nu > 0.0)) throw DomainError("greatCircleLeaf: u is zero");
  const RVec e1 = u / nu;
  RVec w = v - e1.dot(v) * e1;
  const double nw = w.norm();
  if (!(nw > 1e-8 * std::max(1.0, v.norm())))
    throw DomainError("greatCircleLeaf: u and v are parallel");
  const RVec e2 = w / nw;
  LeafSpec leaf;
  leaf.a = RVec::Zero(u.size());
  leaf.c = (e1.cast<cplx>() - cplx(0.0, 1.0) * e2.cast<cplx>()) / 2.0;
  return leaf;
}

LeafReport checkLeaf(const Evaluator& V, const LeafSpec& leaf, const LeafSampling& sampling) {
  LeafReport rep;
  const double h = sampling.laplacianStep;
  for (double r : sampling.radii) {
    if (!(r >= 1.0)) throw DomainError("checkLeaf: radii must be >= 1");
    for (int k = 0; k < sampling.angles; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / sampling.angles;
      const cplx zeta = std::polar(r, theta);
      ++rep.samples;
      const double v0 = V(leafPoint(leaf, zeta));
      if (!std::isfinite(v0)) {
        ++rep.singularSamples;
        continue;
      }
      rep.maxExtremalityGap = std::max(rep.maxExtremalityGap, std::abs(v0 - std::log(r)));
      if (r > 1.0 && r - 1.0 > 10.0 * h) {
        const double s = V(leafPoint(leaf, zeta + h)) + V(leafPoint(leaf, zeta - h)) +
                         V(leafPoint(leaf, zeta + cplx(0.0, h))) +
                         V(leafPoint(leaf, zeta - cplx(0.0, h)));
        const double lap = (s - 4.0 * v0) / (h * h);
        if (!std::isfinite(lap)) {
          ++rep.singularSamples;
          continue;
        }
        rep.maxLaplacianResidual = std::max(rep.maxLaplacianResidual, std::abs(lap));
      }
    }
  }
  return rep;
}

LeafReport mergeReports(const LeafReport& a, const LeafReport& b) {
  return {std::max(a.maxExtremalityGap, b.maxExtremalityGap),
          std::max(a.maxLaplacianResidual, b.maxLaplacianResidual),
          a.singularSamples + b.singularSamples, a.samples + b.samples};
}

}  // namespace pluri
