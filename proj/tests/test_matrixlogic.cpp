#include <doctest.h>

#include <cmath>

#include "omset/matrixlogic.hpp"

using namespace omset::matrix;

namespace {

Projection rankOne2(double a, std::complex<double> b) {
  Eigen::VectorXcd v(2);
  v << a, b;
  return Projection::rankOne(v);
}

}  // namespace

TEST_CASE("projection invariants are validated") {
  Mat bad(2, 2);
  bad << 0.5, 0.4, 0.1, 0.5;  // not Hermitian
  CHECK_THROWS_AS(Projection{bad}, std::invalid_argument);
  Mat notIdem(2, 2);
  notIdem << 0.5, 0.0, 0.0, 0.5;  // Hermitian, not idempotent
  CHECK_THROWS_AS(Projection{notIdem}, std::invalid_argument);
  CHECK_NOTHROW(Projection::identity(4));
  CHECK_NOTHROW(Projection::zero(3));
}

TEST_CASE("meet and join on simple pairs") {
  const Projection p = rankOne2(1.0, 0.0);
  SUBCASE("P with itself") {
    CHECK(dist(projMeet(p, p), p) < kTol);
    CHECK(dist(projJoin(p, p), p) < kTol);
  }
  SUBCASE("P with its complement") {
    CHECK(projMeet(p, p.ortho()).mat().norm() < kTol);
    CHECK(dist(projJoin(p, p.ortho()), Projection::identity(2)) < kTol);
  }
  SUBCASE("a nonorthogonal rank-one pair spans everything and meets in nothing") {
    const Projection phi = rankOne2(0.5, std::sqrt(3.0) / 2.0);
    const Projection one = rankOne2(0.0, 1.0);
    CHECK(projMeet(phi, one).mat().norm() < kTol);
    CHECK(dist(projJoin(phi, one), Projection::identity(2)) < kTol);
    CHECK_FALSE(projCommutes(phi, one));
  }
  SUBCASE("dimension mismatch is an error") {
    CHECK_THROWS_AS(projMeet(Projection::zero(2), Projection::zero(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("circTheta is the identity at theta 0 and fixes commuting pairs") {
  const Projection p = rankOne2(1.0, 0.0);
  const Projection q = rankOne2(0.5, std::sqrt(3.0) / 2.0);
  CHECK(dist(circTheta(p, q, 0.0), q) < kTol);
  // commuting: q against a diagonal projection it commutes with
  const Projection diag = Projection::identity(2);
  CHECK(dist(circTheta(diag, q, 1.3), q) < kTol);
  CHECK(dist(circTheta(p, p, 2.1), p) < kTol);
}

TEST_CASE("twisted implications reproduce the polynomials at theta 0") {
  const Projection p = rankOne2(0.5, std::sqrt(3.0) / 2.0);
  const Projection q = rankOne2(0.0, 1.0);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 2; ++i)
      CHECK(dist(twistedImpl(j, 0.0, i, p, q), projKotas(j, p, q)) < kTol);
}

TEST_CASE("the phi/one C^2 pair under =>_{1,theta,1}") {
  const double theta = M_PI / 3;
  const Projection p = rankOne2(0.5, std::sqrt(3.0) / 2.0);
  const Projection q = rankOne2(0.0, 1.0);
  Eigen::VectorXcd phiTheta(2);
  phiTheta << 0.5, std::exp(std::complex<double>(0, theta)) * std::sqrt(3.0) / 2.0;
  const Projection expected = Projection::rankOne(phiTheta);
  CHECK(dist(twistedImpl(1, theta, 1, p, q), expected) < kTol);
  CHECK(dist(circTheta(q, p, theta), expected) < kTol);
  // the (3, theta, 0) twist is theta-invariant on this pair as well
  CHECK(dist(twistedImpl(3, theta, 0, p, q), projKotas(3, p, q)) < kTol);
}

TEST_CASE("non-polynomiality witness") {
  for (double theta : {M_PI / 4, M_PI / 2, M_PI, 3 * M_PI / 2}) {
    const WitnessReport w = nonPolynomialWitness(theta);
    CAPTURE(theta);
    CHECK(w.ok);
    CHECK(w.comNorm < kTol);
    CHECK(std::abs(w.ipOnePhi - std::sqrt(3.0) / 2.0) < 1e-12);
    const std::complex<double> expected =
        (1.0 + 3.0 * std::exp(std::complex<double>(0, theta))) / 4.0;
    CHECK(std::abs(w.ipPhiPhiTheta - expected) < 1e-12);
    for (double d : w.distanceToSix) CHECK(d > 1e-3);
  }
  SUBCASE("theta = pi gives the -1/2 overlap") {
    const WitnessReport w = nonPolynomialWitness(M_PI);
    CHECK(std::abs(w.ipPhiPhiTheta - std::complex<double>(-0.5, 0.0)) < 1e-12);
  }
  SUBCASE("theta = 0 is rejected") {
    CHECK_THROWS_AS(nonPolynomialWitness(0.0), std::invalid_argument);
    CHECK_THROWS_AS(nonPolynomialWitness(2 * M_PI), std::invalid_argument);
  }
}

TEST_CASE("orthomodular law and twisted relations on seeded samples") {
  const TwistedRelationsReport rep = verifyTwistedRelations({2, 3}, 40, 7, false);
  CHECK(rep.ok());
  CHECK(rep.worstResidual < kTol);
  CHECK(rep.checked > 0);
}

TEST_CASE("results re-pass the projection invariants") {
  const Projection p = rankOne2(0.5, std::sqrt(3.0) / 2.0);
  const Projection q = rankOne2(0.0, 1.0);
  for (int j = 0; j < 6; ++j) {
    const Projection r = twistedImpl(j, 1.1, 1, p, q);
    CHECK((r.mat() - r.mat().adjoint()).norm() < kTol);
    CHECK((r.mat() * r.mat() - r.mat()).norm() < kTol);
  }
}

TEST_CASE("order relation and ranks") {
  const Projection p = rankOne2(1.0, 0.0);
  const Projection q = rankOne2(0.5, std::sqrt(3.0) / 2.0);
  CHECK(p.rank() == 1);
  CHECK(p.ortho().rank() == 1);
  CHECK(Projection::identity(2).rank() == 2);
  CHECK(projLe(projMeet(p, q), p));
  CHECK(projLe(p, projJoin(p, q)));
  CHECK(projLe(Projection::zero(2), q));
  CHECK_FALSE(projLe(p, q));
}

TEST_CASE("csv dump has 2*dim columns per row") {
  const Projection p = Projection::identity(2);
  const std::string csv = matrixToCsv(p.mat());
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(std::count(csv.begin(), csv.end(), ',') == 2 * (2 * 2 - 1));
}
