#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"
#include "pluri/extremal.hpp"
#include "pluri/foliation.hpp"

using namespace pluri;
using namespace testing;

TEST_SUITE("foliation") {
  TEST_CASE("leafPoint examples") {
    const LeafSpec leaf{rv({0.5, -1.0}), cv({cplx(0.2, 0.1), cplx(-0.3, 0.4)})};
    const CVec at1 = leafPoint(leaf, 1.0).coords();
    CHECK((at1 - (leaf.a + 2.0 * leaf.c.real()).cast<cplx>()).norm() < 1e-15);
    for (double t : {0.3, 1.7, 4.0}) CHECK(leafPoint(leaf, std::polar(1.0, t)).im().norm() < 1e-15);
    CHECK_THROWS_AS(leafPoint(leaf, 0.0), DomainError);
  }

  TEST_CASE("greatCircleLeaf examples") {
    const RVec e1 = rv({1, 0, 0}), e2 = rv({0, 1, 0});
    const LeafSpec leaf = greatCircleLeaf(e1, e2);
    CHECK((leafPoint(leaf, 1.0).coords() - e1.cast<cplx>()).norm() < 1e-15);
    const CVec at2 = leafPoint(leaf, 2.0).coords();
    CHECK(std::abs(at2[0] - 1.25) < 1e-15);
    CHECK(std::abs(at2[1] - cplx(0, -0.75)) < 1e-15);
    for (cplx zeta : {cplx(2, 0), cplx(0.3, -0.2), cplx(-5, 7)})
      CHECK(std::abs(leafPoint(leaf, zeta).quadSum() - 1.0) < 1e-13 * std::norm(zeta));
    const double t = 0.9;
    const CVec circ = leafPoint(leaf, std::polar(1.0, t)).coords();
    CHECK((circ - (std::cos(t) * e1 + std::sin(t) * e2).cast<cplx>()).norm() < 1e-15);
    CHECK_THROWS_AS(greatCircleLeaf(e1, 3.0 * e1), DomainError);
  }

  TEST_CASE("Gram-Schmidt repairs non-orthonormal input") {
    const LeafSpec leaf = greatCircleLeaf(rv({2, 0}), rv({1, 1}));
    CHECK(std::abs(leafPoint(leaf, cplx(3, 1)).quadSum() - 1.0) < 1e-13);
  }

  TEST_CASE("vBall along great-circle leaves") {
    const LeafSpec leaf = greatCircleLeaf(rv({1, 0, 0}), rv({0, 0, 1}));
    CHECK(std::abs(vBall(leafPoint(leaf, 2.0)) - std::log(2.0)) < 1e-10);
    const Evaluator V = [](const CPoint& W) { return vBall(W); };
    LeafSampling unit;
    unit.radii = {1.0};
    CHECK(checkLeaf(V, leaf, unit).maxExtremalityGap < 1e-12);
    LeafSampling outer;
    outer.radii = {1.5, 2.0, 4.0};
    const LeafReport r = checkLeaf(V, leaf, outer);
    CHECK(r.maxLaplacianResidual < 1e-6);
    CHECK(r.maxExtremalityGap < 1e-9);
    CHECK(r.samples == 3 * outer.angles);
  }

  TEST_CASE("|F(zeta)|^2 on a great-circle leaf") {
    const LeafSpec leaf = greatCircleLeaf(rv({0.6, 0.8}), rv({-0.8, 0.6}));
    for (double r : {1.1, 2.0, 7.0}) {
      const CPoint W = leafPoint(leaf, std::polar(r, 0.4));
      CHECK(W.normSq() == doctest::Approx(0.5 * (r * r + 1 / (r * r))).epsilon(1e-14));
    }
  }

  TEST_CASE("non-finite evaluators are flagged, not propagated") {
    const LeafSpec leaf = greatCircleLeaf(rv({1, 0}), rv({0, 1}));
    const Evaluator bad = [](const CPoint& W) { return W.normSq() > 3 ? std::nan("") : 0.0; };
    LeafSampling s;
    s.radii = {1.1, 4.0};
    const LeafReport r = checkLeaf(bad, leaf, s);
    CHECK(r.singularSamples > 0);
    CHECK(std::isfinite(r.maxExtremalityGap));
  }

  TEST_CASE("merge is a max-reduction and order independent") {
    LeafReport a{1e-12, 3e-7, 0, 10}, b{5e-13, 4e-7, 2, 20};
    const LeafReport ab = mergeReports(a, b), ba = mergeReports(b, a);
    CHECK(ab.maxExtremalityGap == 1e-12);
    CHECK(ab.maxLaplacianResidual == 4e-7);
    CHECK(ab.singularSamples == 2);
    CHECK(ab.samples == 30);
    CHECK(ba.maxLaplacianResidual == ab.maxLaplacianResidual);
  }

  TEST_CASE("property: random leaves, n <= 4") {
    CounterRng rng(41, 1);
    LeafSampling s;
    s.radii = {1.0, 1.1, 1.5, 2.0, 4.0, 10.0};
    const Evaluator V = [](const CPoint& W) { return vBall(W); };
    for (int k = 0; k < 20; ++k) {
      const int m = 2 + k % 4;
      const LeafSpec leaf = greatCircleLeaf(randomR(rng, m), randomR(rng, m));
      const LeafReport r = checkLeaf(V, leaf, s);
      CHECK(r.maxExtremalityGap < 1e-9);
      CHECK(r.maxLaplacianResidual < 1e-6);
      CHECK(leafPoint(leaf, std::polar(1.01, 2.0)).im().norm() > 0.0);
    }
  }
}
