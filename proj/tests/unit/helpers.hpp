#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>

#include "pluri/core.hpp"
#include "pluri/rng.hpp"

namespace testing {

using pluri::CPoint;
using pluri::CVec;
using pluri::RVec;
using pluri::cplx;

inline CVec cv(std::initializer_list<cplx> v) {
  CVec z(static_cast<Eigen::Index>(v.size()));
  Eigen::Index j = 0;
  for (cplx c : v) z[j++] = c;
  return z;
}

inline RVec rv(std::initializer_list<double> v) {
  RVec x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index j = 0;
  for (double c : v) x[j++] = c;
  return x;
}

inline CPoint cp(std::initializer_list<cplx> v) { return CPoint(cv(v)); }

inline CVec randomC(pluri::CounterRng& rng, int n, double scale = 1.0) {
  CVec z(n);
  for (int j = 0; j < n; ++j) z[j] = cplx(scale * rng.normal(), scale * rng.normal());
  return z;
}

inline RVec randomR(pluri::CounterRng& rng, int n, double scale = 1.0) {
  RVec x(n);
  for (int j = 0; j < n; ++j) x[j] = scale * rng.normal();
  return x;
}

inline const cplx I(0.0, 1.0);

}  // namespace testing
