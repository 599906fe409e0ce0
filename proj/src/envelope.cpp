#include "pluri/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "pluri/metric_density.hpp"
#include "pluri/rng.hpp"

namespace pluri {

Polynomial::Polynomial(int nvars, std::vector<Monomial> terms)
    : nvars_(nvars), terms_(std::move(terms)) {
  if (nvars_ < 1) throw DomainError("Polynomial: need at least one variable");
  for (const Monomial& m : terms_) {
    if (static_cast<int>(m.exponents.size()) != nvars_)
      throw DomainError("Polynomial: exponent vector has the wrong length");
    for (int e : m.exponents)
      if (e < 0) throw DomainError("Polynomial: negative exponent");
  }
}

int Polynomial::totalDegree() const {
  int d = 0;
  for (const Monomial& m : terms_) {
    if (m.coeff == 0.0) continue;
    int s = 0;
    for (int e : m.exponents) s += e;
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::isHomogeneous(int d) const {
  for (const Monomial& m : terms_) {
    int s = 0;
    for (int e : m.exponents) s += e;
    if (m.coeff != 0.0 && s != d) return false;
  }
  return true;
}

cplx Polynomial::operator()(const CVec& z) const {
  if (z.size() != nvars_) throw DomainError("Polynomial: point has the wrong dimension");
  cplx acc = 0.0;
  for (const Monomial& m : terms_) {
    cplx t = m.coeff;
    for (int j = 0; j < nvars_; ++j)
      if (m.exponents[j] > 0) t *= std::pow(z[j], m.exponents[j]);
    acc += t;
  }
  return acc;
}

Polynomial homogenize(const Polynomial& p, int d) {
  if (d < p.totalDegree() || d < 0)
    throw DomainError("homogenize: degree is below the total degree of the polynomial");
  std::vector<Monomial> out;
  out.reserve(p.terms().size());
  for (const Monomial& m : p.terms()) {
    int s = 0;
    for (int e : m.exponents) s += e;
    Monomial h;
    h.exponents.push_back(d - s);
    h.exponents.insert(h.exponents.end(), m.exponents.begin(), m.exponents.end());
    h.coeff = m.coeff;
    out.push_back(std::move(h));
  }
  return Polynomial(p.nvars() + 1, std::move(out));
}

Polynomial dehomogenize(const Polynomial& H) {
  if (H.nvars() < 2) throw DomainError("dehomogenize: need at least two variables");
  std::map<std::vector<int>, cplx> merged;
  for (const Monomial& m : H.terms())
    merged[std::vector<int>(m.exponents.begin() + 1, m.exponents.end())] += m.coeff;
  std::vector<Monomial> out;
  for (auto& [e, c] : merged) out.push_back({e, c});
  return Polynomial(H.nvars() - 1, std::move(out));
}

double liftIdentityResidual(const Polynomial& p, int d, const StripPoint& z) {
  const Polynomial H = homogenize(p, d);
  const SpherePoint W = liftF(z);
  const double lhs = std::abs(H(W.W()));
  const double w = std::pow(std::abs(1.0 + z.z().quadSum()), -0.5);
  const double rhs = std::pow(w, d) * std::abs(p(z.z()));
  return std::abs(lhs - rhs) / std::max(rhs, std::numeric_limits<double>::min());
}

cplx AdmissiblePoly::operator()(const CPoint& z) const {
  cplx acc = 1.0;
  const cplx i(0.0, 1.0);
  for (const RVec& a : factors) acc *= 1.0 - i * a.cast<cplx>().dot(z.coords());
  return acc;
}

namespace {

// |1 - i a.z|^2 = (1 + a.y)^2 + (a.x)^2 for z = x + iy.
double factorNormSq(const RVec& a, const RVec& x, const RVec& y) {
  const double p = 1.0 + a.dot(y);
  const double q = a.dot(x);
  return p * p + q * q;
}

bool lexLess(const RVec& a, const RVec& b) {
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    if (a[j] < b[j]) return true;
    if (a[j] > b[j]) return false;
  }
  return false;
}

}  // namespace

double AdmissiblePoly::normalizedLog(const CPoint& z) const {
  if (factors.empty()) throw DomainError("AdmissiblePoly: degree must be >= 1");
  const RVec x = z.re(), y = z.im();
  double s = 0.0;
  for (const RVec& a : factors) s += 0.5 * std::log(factorNormSq(a, x, y));
  return s / degree();
}

double auditAdmissibility(AdmissiblePoly& p, double radius, int perAxis) {
  if (p.factors.empty()) throw DomainError("auditAdmissibility: empty polynomial");
  const int n = static_cast<int>(p.factors.front().size());
  const int axes = std::min(n, 3);
  const int total = static_cast<int>(std::pow(perAxis, axes));
  double sup = 0.0;
  for (int idx = 0; idx < total; ++idx) {
    RVec x = RVec::Zero(n);
    int r = idx;
    for (int j = 0; j < axes; ++j) {
      x[j] = -radius + 2.0 * radius * (r % perAxis) / (perAxis - 1);
      r /= perAxis;
    }
    const CPoint z = CPoint::fromReal(x);
    const double w = std::pow(1.0 + x.squaredNorm(), -0.5);
    sup = std::max(sup, std::pow(w, p.degree()) * std::abs(p(z)));
  }
  p.auditRadius = radius;
  p.admissibilityMargin = 1.0 - sup;
  return p.admissibilityMargin;
}

EnvelopeCertificate linearFamilyLB(const CPoint& z, const LinearSearchBudget& budget) {
  const int n = static_cast<int>(z.dim());
  const RVec x = z.re(), y = z.im();

  std::vector<RVec> cands;
  const int coarse = std::max(4, budget.coarseFactor * (1 << std::min(n, 20)) * n);
  for (RVec& d : sphereDirections(n, coarse, budget.seed)) cands.push_back(std::move(d));
  for (const RVec* v : {&x, &y}) {
    const double nv = v->norm();
    if (nv > 0.0) {
      cands.push_back(*v / nv);
      cands.push_back(-*v / nv);
    }
  }

  auto better = [](double fa, const RVec& a, double fb, const RVec& b) {
    return fa > fb || (fa == fb && lexLess(a, b));
  };

  std::vector<std::pair<double, RVec>> scored;
  scored.reserve(cands.size());
  for (RVec& a : cands) scored.emplace_back(factorNormSq(a, x, y), std::move(a));
  std::sort(scored.begin(), scored.end(), [&](const auto& l, const auto& r) {
    return better(l.first, l.second, r.first, r.second);
  });

  RVec best = scored.front().second;
  double bestVal = scored.front().first;
  bool exhausted = false;
  const int starts = std::min<int>(budget.ascentStarts, static_cast<int>(scored.size()));
  for (int s = 0; s < starts; ++s) {
    RVec a = scored[s].second;
    double fa = scored[s].first;
    double eta = 0.5;
    bool stationary = (n == 1);
    for (int it = 0; it < budget.ascentSteps && !stationary; ++it) {
      const RVec grad = 2.0 * (1.0 + a.dot(y)) * y + 2.0 * a.dot(x) * x;
      const RVec tang = grad - grad.dot(a) * a;
      if (tang.norm() <= 1e-14 * std::max(1.0, grad.norm())) {
        stationary = true;
        break;
      }
      bool moved = false;
      while (eta > 1e-16) {
        const RVec trial = (a + eta * tang).normalized();
        const double ft = factorNormSq(trial, x, y);
        if (ft > fa) {
          a = trial;
          fa = ft;
          eta *= 2.0;
          moved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!moved) stationary = true;
    }
    if (!stationary) exhausted = true;
    if (better(fa, a, bestVal, best)) {
      best = a;
      bestVal = fa;
    }
  }

  EnvelopeCertificate cert;
  cert.z = z;
  cert.witness.factors = {best};
  cert.lowerBound = 0.5 * std::log(bestVal);
  cert.budgetExhausted = exhausted;
  return cert;
}

EnvelopeCertificate productFamilyLB(const CPoint& z, int degree, const ProductBudget& budget) {
  if (degree < 1) throw DomainError("productFamilyLB: degree must be >= 1");
  EnvelopeCertificate lin = linearFamilyLB(z, budget.linear);
  if (degree == 1) return lin;

  const int n = static_cast<int>(z.dim());
  EnvelopeCertificate best = lin;
  best.witness.factors.assign(static_cast<std::size_t>(degree), lin.witness.factors.front());
  best.lowerBound = best.witness.normalizedLog(z);

  CounterRng rng(budget.seed, static_cast<std::uint64_t>(degree));
  for (int k = 0; k < budget.randomTuples; ++k) {
    AdmissiblePoly p;
    for (int f = 0; f < degree; ++f) {
      // Mix the best linear direction with random ones.
      if (rng.uniform() < 0.5) {
        p.factors.push_back(lin.witness.factors.front());
      } else {
        RVec a(n);
        for (int j = 0; j < n; ++j) a[j] = rng.normal();
        p.factors.push_back(a.normalized());
      }
    }
    const double v = p.normalizedLog(z);
    if (v > best.lowerBound) {
      best.lowerBound = v;
      best.witness = std::move(p);
    }
  }
  return best;
}

double oneVarExact(cplx z) {
  const cplx i(0.0, 1.0);
  return std::max(std::log(std::abs(z - i)), std::log(std::abs(z + i)));
}

}  // namespace pluri
