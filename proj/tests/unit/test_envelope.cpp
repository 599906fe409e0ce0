#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "pluri/envelope.hpp"
#include "pluri/extremal.hpp"

using namespace pluri;
using namespace testing;

TEST_SUITE("envelope") {
  TEST_CASE("oneVarExact examples") {
    CHECK(oneVarExact(1.7) == doctest::Approx(0.5 * std::log(1 + 1.7 * 1.7)).epsilon(1e-15));
    CHECK(oneVarExact(2.0 * I) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(oneVarExact(cplx(1, 1)) == doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-15));
  }

  TEST_CASE("linearFamilyLB examples") {
    EnvelopeCertificate c = linearFamilyLB(cp({2.0 * I}));
    CHECK(c.lowerBound == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(c.witness.degree() == 1);
    const RVec y = rv({0.4, -0.3, 1.2});
    c = linearFamilyLB(CPoint::fromParts(RVec::Zero(3), y));
    CHECK(std::abs(c.lowerBound - std::log1p(y.norm())) < 1e-10);
    const RVec x = rv({1.0, -2.0});
    c = linearFamilyLB(CPoint::fromReal(x));
    CHECK(c.lowerBound <= 0.5 * std::log1p(x.squaredNorm()) + 1e-15);
    CHECK(c.lowerBound == doctest::Approx(0.5 * std::log1p(x.squaredNorm())).epsilon(1e-9));
  }

  TEST_CASE("certificate value is the witness value") {
    CounterRng rng(71, 1);
    for (int k = 0; k < 200; ++k) {
      const CPoint z(randomC(rng, 1 + k % 4, 2.0));
      const EnvelopeCertificate c = productFamilyLB(z, 1 + k % 3);
      CHECK(c.lowerBound == doctest::Approx(c.witness.normalizedLog(z)).epsilon(1e-13));
      CHECK(std::abs(std::log(std::abs(c.witness(z))) / c.witness.degree() - c.lowerBound) < 1e-12);
      for (const RVec& a : c.witness.factors) CHECK(std::abs(a.norm() - 1.0) < 1e-12);
    }
  }

  TEST_CASE("property: soundness, certificates never exceed vKQ") {
    CounterRng rng(72, 1);
    for (int k = 0; k < 3000; ++k) {
      const CPoint z(randomC(rng, 1 + k % 4, 3.0));
      CHECK(linearFamilyLB(z).lowerBound <= vKQ(z) + 1e-9);
      if (k % 100 == 0)
        for (int d = 2; d <= 4; ++d) CHECK(productFamilyLB(z, d).lowerBound <= vKQ(z) + 1e-9);
    }
  }

  TEST_CASE("property: tightness on the imaginary axis and for n = 1") {
    CounterRng rng(73, 1);
    for (int k = 0; k < 500; ++k) {
      const int n = 1 + k % 4;
      const CPoint z = CPoint::fromParts(RVec::Zero(n), randomR(rng, n, 2.0));
      CHECK(std::abs(linearFamilyLB(z).lowerBound - vKQ(z)) < 1e-10);
      const cplx w(rng.normal() * 2, rng.normal() * 2);
      CHECK(std::abs(linearFamilyLB(cp({w})).lowerBound - vKQ(cp({w}))) < 1e-10);
    }
  }

  TEST_CASE("productFamilyLB examples") {
    const CPoint z = cp({cplx(0.5, 0.5), cplx(0, 0.3)});
    CHECK(productFamilyLB(z, 1).lowerBound == linearFamilyLB(z).lowerBound);
    double prev = -1e300;
    for (int d = 1; d <= 4; ++d) {
      const double lb = productFamilyLB(z, d).lowerBound;
      CHECK(lb <= vKQ(z) + 1e-9);
      CHECK(lb >= prev - 1e-12);
      prev = lb;
    }
    const RVec x = rv({0.5, -1.5});
    for (int d = 1; d <= 4; ++d)
      CHECK(productFamilyLB(CPoint::fromReal(x), d).lowerBound <= weightQ(CPoint::fromReal(x)).value + 1e-15);
    CHECK_THROWS_AS(productFamilyLB(z, 0), DomainError);
  }

  TEST_CASE("admissibility audit of the linear family") {
    AdmissiblePoly p;
    p.factors = {rv({0.6, 0.8}), rv({1, 0}), rv({0, -1})};
    const double margin = auditAdmissibility(p, 10.0, 21);
    CHECK(margin >= -1e-12);
    CHECK(p.auditRadius == 10.0);
  }

  TEST_CASE("homogenize examples") {
    // p = z1 with d = 1 -> H = z1
    const Polynomial z1(2, {{{1, 0}, 1.0}});
    const Polynomial H1 = homogenize(z1, 1);
    CHECK(H1.nvars() == 3);
    CHECK(H1.isHomogeneous(1));
    const StripPoint s(cp({cplx(0.4, 0.3), cplx(-1.0, 0.2)}));
    const SpherePoint W = liftF(s);
    const double w = std::pow(std::abs(1.0 + s.z().quadSum()), -0.5);
    CHECK(std::abs(std::abs(W.W()[1]) - w * std::abs(s.z()[0])) < 1e-14);
    // p = 1 - i z1 -> |W0 - i W1| = w |1 - i z1|
    const Polynomial lin(2, {{{0, 0}, 1.0}, {{1, 0}, -I}});
    CHECK(std::abs(std::abs(W.W()[0] - I * W.W()[1]) - w * std::abs(1.0 - I * s.z()[0])) < 1e-14);
    CHECK(liftIdentityResidual(lin, 1, s) < 1e-12);
    // p = 1, d = 1 -> H = t, |W0| = w
    const Polynomial one(2, {{{0, 0}, 1.0}});
    CHECK(std::abs(std::abs(W.w0()) - w) < 1e-14);
    CHECK(liftIdentityResidual(one, 1, s) < 1e-12);
    CHECK_THROWS_AS(homogenize(lin, 0), DomainError);
  }

  TEST_CASE("property: H-principle identities") {
    CounterRng rng(74, 1);
    for (int k = 0; k < 200; ++k) {
      const int n = 1 + k % 3;
      std::vector<Monomial> terms;
      for (int t = 0; t < 5; ++t) {
        Monomial m;
        for (int j = 0; j < n; ++j) m.exponents.push_back(static_cast<int>(rng.uniform(0, 3)));
        m.coeff = cplx(rng.normal(), rng.normal());
        terms.push_back(m);
      }
      const Polynomial p(n, terms);
      const int d = p.totalDegree() + (k % 2);
      const Polynomial H = homogenize(p, d);
      CHECK(H.isHomogeneous(d));
      const CVec z = randomC(rng, n);
      CHECK(std::abs(dehomogenize(H)(z) - p(z)) <= 1e-12 * (1 + std::abs(p(z))));
      const cplx t(rng.normal(), rng.normal());
      CVec tz(n + 1);
      tz << t, t * z;
      CHECK(std::abs(std::abs(H(tz)) - std::pow(std::abs(t), d) * std::abs(p(z))) <=
            1e-11 * (1 + std::pow(std::abs(t), d) * std::abs(p(z))));
      RVec y = randomR(rng, n);
      y *= 0.8 / y.norm() * rng.uniform();
      CHECK(liftIdentityResidual(p, d, StripPoint(CPoint::fromParts(randomR(rng, n), y))) < 1e-12);
    }
  }

  TEST_CASE("Polynomial validation") {
    CHECK_THROWS_AS(Polynomial(0), DomainError);
    CHECK_THROWS_AS(Polynomial(2, {{{1}, 1.0}}), DomainError);
    CHECK_THROWS_AS(Polynomial(1, {{{-1}, 1.0}}), DomainError);
  }
}
