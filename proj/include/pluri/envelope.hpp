#pragma once

#include <cstdint>
#include <vector>

#include "pluri/core.hpp"
#include "pluri/sphere_lift.hpp"

namespace pluri {

// ---------------------------------------------------------------------------
// Polynomials in several complex variables
// ---------------------------------------------------------------------------

struct Monomial {
  std::vector<int> exponents;
  cplx coeff;
};

class Polynomial {
 public:
  explicit Polynomial(int nvars, std::vector<Monomial> terms = {});

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  int totalDegree() const;
  bool isHomogeneous(int d) const;

  cplx operator()(const CVec& z) const;
  cplx operator()(const CPoint& z) const { return (*this)(z.coords()); }

 private:
  int nvars_;
  std::vector<Monomial> terms_;
};

/// H_d(t, z) = t^d p(z / t), with t as variable 0. Throws if d < deg p.
Polynomial homogenize(const Polynomial& p, int d);

/// p(z) = H(1, z).
Polynomial dehomogenize(const Polynomial& H);

/// Relative residual of |H_d(F(z))| = w(z)^d |p(z)|, w = |1 + z^2|^{-1/2}, at a
/// strip point.
double liftIdentityResidual(const Polynomial& p, int d, const StripPoint& z);

// ---------------------------------------------------------------------------
// Certified lower bounds
// ---------------------------------------------------------------------------

/// Product of linear factors 1 - i a_k.z with real unit vectors a_k. Every such
/// product satisfies |p(x)| (1 + x^2)^{-deg/2} <= 1 on R^n, since each factor
/// has |1 - i a.x|^2 = 1 + (a.x)^2 <= 1 + x^2.
struct AdmissiblePoly {
  std::vector<RVec> factors;
  double admissibilityMargin = 0.0;  // diagnostic only, from auditAdmissibility
  double auditRadius = 0.0;

  int degree() const { return static_cast<int>(factors.size()); }
  cplx operator()(const CPoint& z) const;
  /// (1/deg) log |p(z)|.
  double normalizedLog(const CPoint& z) const;
};

/// 1 - sup over a grid of [-radius, radius]^n of w(x)^deg |p(x)|. Records the
/// result in the polynomial. Diagnostic: never used to certify.
double auditAdmissibility(AdmissiblePoly& p, double radius = 10.0, int perAxis = 21);

struct EnvelopeCertificate {
  CPoint z;
  double lowerBound = 0.0;
  AdmissiblePoly witness;
  bool budgetExhausted = false;  // ascent stopped on the step limit, not on stationarity
};

struct LinearSearchBudget {
  int coarseFactor = 1;   // coarse directions = coarseFactor * 2^n * n (at least 4)
  int ascentStarts = 3;
  int ascentSteps = 50;
  std::uint64_t seed = 20261015;
};

/// Best degree-1 certificate (1/1) log|1 - i a.z| over real unit a.
EnvelopeCertificate linearFamilyLB(const CPoint& z, const LinearSearchBudget& budget = {});

struct ProductBudget {
  LinearSearchBudget linear{};
  int randomTuples = 64;
  std::uint64_t seed = 20261015;
};

/// Best degree-d certificate among products of d linear factors. The d-fold
/// repeat of the best linear factor is always a candidate, so the result never
/// falls below the degree-1 bound.
EnvelopeCertificate productFamilyLB(const CPoint& z, int degree, const ProductBudget& budget = {});

/// max(log|z - i|, log|z + i|).
double oneVarExact(cplx z);

}  // namespace pluri
