#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "pluri/extremal.hpp"
#include "pluri/sphere_lift.hpp"

using namespace pluri;
using namespace testing;

TEST_SUITE("sphere_lift") {
  TEST_CASE("liftF examples") {
    SpherePoint W = liftF(StripPoint(cp({0.0, 0.0})));
    CHECK(W.W()[0] == cplx(1.0));
    CHECK(std::abs(W.W()[1]) == 0.0);

    const RVec x = rv({0.5, -2.0});
    W = liftF(StripPoint(CPoint::fromReal(x)));
    const double s = std::sqrt(1 + x.squaredNorm());
    CHECK(std::abs(W.w0() - 1.0 / s) < 1e-15);
    CHECK(std::abs(W.W()[1] - x[0] / s) < 1e-15);
    CHECK(std::abs(W.W()[2] - x[1] / s) < 1e-15);
    CHECK(W.w0().real() > 0);
    CHECK(W.W().im().norm() < 1e-16);
  }

  TEST_CASE("liftNormSq examples") {
    CHECK(liftNormSq(StripPoint(cp({0.0}))) == 1.0);
    CHECK(liftNormSq(StripPoint(cp({2.5, -1.0}))) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(liftNormSq(StripPoint(cp({0.3 * I}))) == doctest::Approx(1.09 / 0.91).epsilon(1e-15));
  }

  TEST_CASE("strip and variety preconditions") {
    CHECK_THROWS_AS(StripPoint(cp({0.95 * I})), DomainError);
    CHECK_THROWS_AS(StripPoint(cp({0.1 * I}), 1.0), DomainError);
    CHECK_THROWS_AS(SpherePoint(cp({1.0, 0.1})), DomainError);
    CHECK_NOTHROW(SpherePoint(cp({0.6, 0.8})));
  }

  TEST_CASE("fullinResidual examples") {
    CHECK(fullinResidual(StripPoint(cp({1.0, -3.0}))) < 1e-15);
    CHECK(fullinResidual(StripPoint(cp({0.4 * I, 0.2}))) < 1e-10);
  }

  TEST_CASE("semiIdentity examples and the algebra behind it") {
    CHECK(semiIdentity(liftF(StripPoint(cp({0.3, 0.7})))) < 1e-15);
    const SpherePoint W = liftF(StripPoint(cp({0.5 * I, 0.0})));
    CHECK(semiIdentity(W) < 1e-12);
    // on A: |W'^2 - 1| = |W0|^2
    const cplx tailSq = W.tail().quadSum();
    CHECK(std::abs(std::abs(tailSq - 1.0) - std::norm(W.w0())) < 1e-14);
  }

  TEST_CASE("orthogonalPushforward") {
    const SpherePoint W = liftF(StripPoint(cp({cplx(0.3, 0.2), cplx(-1.0, 0.5)})));
    const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(3, 3);
    CHECK((orthogonalPushforward(Id, W).W().coords() - W.W().coords()).norm() == 0.0);
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(3, 3);
    P(0, 2) = P(1, 0) = P(2, 1) = 1.0;
    const SpherePoint PW = orthogonalPushforward(P, W);
    CHECK(PW.W()[0] == W.W()[2]);
    CHECK(std::abs(vBall(PW.W()) - vBall(W.W())) < 1e-15);
    Eigen::MatrixXd bad = Id;
    bad(0, 1) = 1e-6;
    CHECK_THROWS_AS(orthogonalPushforward(bad, W), DomainError);

    CounterRng rng(31, 1);
    for (int k = 0; k < 100; ++k) {
      Eigen::MatrixXd M(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M(i, j) = rng.normal();
      const Eigen::MatrixXd T = Eigen::HouseholderQR<Eigen::MatrixXd>(M).householderQ();
      const SpherePoint TW = orthogonalPushforward(T, W);
      CHECK(TW.defect() < 1e-10);
      CHECK(std::abs(vBall(TW.W()) - vBall(W.W())) < 1e-10);
    }
  }

  TEST_CASE("property: lift identities on random strip points") {
    CounterRng rng(32, 1);
    for (int k = 0; k < 2000; ++k) {
      const int n = 1 + k % 4;
      RVec y = randomR(rng, n);
      y *= rng.uniform(0.0, 0.899) / std::max(y.norm(), 1e-300);
      const StripPoint z(CPoint::fromParts(randomR(rng, n, 2.0), y));
      const SpherePoint W = liftF(z);
      CHECK(std::abs(W.W().quadSum() - 1.0) < 1e-12);
      CHECK(std::abs(liftNormSq(z) - W.W().normSq()) < 1e-12 * W.W().normSq());
      // |W0| = |1 + z^2|^{-1/2}: -log|W0| = Q(z)
      CHECK(std::abs(-std::log(std::abs(W.w0())) - weightQ(z.z()).value) < 1e-12);
      CHECK(fullinResidual(z) < 1e-9);
      // one-sided form: vKQ - Q <= vBall(F)
      CHECK(vKQ(z.z()) - weightQ(z.z()).value <= vBall(W.W()) + 1e-9);
      // sign symmetry
      CVec flip = W.W().coords();
      flip[0] = -flip[0];
      CHECK(std::abs(vBall(CPoint(flip)) - vBall(W.W())) < 1e-15);
    }
  }
}
