#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/extension.hpp"

using namespace coringlab;

namespace {

template <class K>
AlgebraPtr<K> ptr(Algebra<K> a) {
  return std::make_shared<const Algebra<K>>(std::move(a));
}

template <class K>
RingExtension<K> diagInMat2() {
  RingExtension<K> ext;
  ext.total = ptr(matrixAlgebra<K>(2));
  ext.base = ptr(directProductAlgebra<K>(groundAlgebra<K>(), groundAlgebra<K>()));
  ext.iota = zeros<K>(4, 2);
  ext.iota(0, 0) = K(1);
  ext.iota(3, 1) = K(1);
  Mat<K> e = zeros<K>(2, 4);
  e(0, 0) = K(1);
  e(1, 3) = K(1);
  ext.expectation = e;
  return ext;
}

template <class K>
RingExtension<K> dualNumbersInTriangular() {
  RingExtension<K> ext;
  ext.total = ptr(upperTriangularAlgebra<K>(2));
  ext.base = ptr(truncatedPolynomialAlgebra<K>(2));
  ext.iota = zeros<K>(3, 2);
  ext.iota(0, 0) = K(1);
  ext.iota(2, 0) = K(1);
  ext.iota(1, 1) = K(1);
  return ext;
}

template <class K>
RingExtension<K> groundInside(AlgebraPtr<K> total) {
  RingExtension<K> ext;
  ext.total = total;
  ext.base = ptr(groundAlgebra<K>());
  ext.iota = total->unit;
  return ext;
}

// Two grouplike points over the ground field: coproduct doubles each basis
// vector, counit sends both to one.
template <class K>
Coring<K> twoPointCoring(const AlgebraPtr<K>& ground) {
  Bimodule<K> carrier;
  carrier.left = ground;
  carrier.right = ground;
  carrier.dim = 2;
  carrier.leftAct.push_back(identity<K>(2));
  carrier.rightAct.push_back(identity<K>(2));
  TensorProduct<K> square = tensorOver(carrier, carrier);
  Mat<K> coproduct = zeros<K>(square.space.dim, 2);
  coproduct.col(0) = square.pure(carrier.basisVec(0), carrier.basisVec(0));
  coproduct.col(1) = square.pure(carrier.basisVec(1), carrier.basisVec(1));
  Mat<K> counit = Mat<K>::Constant(1, 2, K(1));
  Coring<K> c;
  c.carrier = std::move(carrier);
  c.square = std::move(square);
  c.coproduct = std::move(coproduct);
  c.counit = std::move(counit);
  return c;
}

}  // namespace

TEST_CASE_TEMPLATE("trivial coring satisfies all the axioms", K, Rational, Fp) {
  AlgebraPtr<K> a = ptr(matrixAlgebra<K>(2));
  Coring<K> c = trivialCoring(a);
  CHECK(c.square.space.dim == 4);
  CHECK_FALSE(checkCoring(c).has_value());
  CHECK_FALSE(grouplikeViolation(c, Vec<K>(a->unit)).has_value());
  Vec<K> twice = Vec<K>(K(2) * a->unit);
  CHECK(grouplikeViolation(c, twice).has_value());
}

TEST_CASE_TEMPLATE("two point coring: checks, cosplitting, unique cointegral", K, Rational, Fp) {
  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());
  Coring<K> c = twoPointCoring(ground);
  CHECK(c.square.space.dim == 4);
  CHECK_FALSE(checkCoring(c).has_value());
  CHECK_FALSE(grouplikeViolation(c, Vec<K>(c.carrier.basisVec(0))).has_value());
  CHECK_FALSE(grouplikeViolation(c, Vec<K>(c.carrier.basisVec(1))).has_value());

  auto e = findCosplitting(c);
  REQUIRE(e.has_value());
  Vec<K> one = Vec<K>(*c.counit * *e);
  CHECK(one(0) == K(1));

  CointegralResult<K> sol = solveCointegral(c);
  REQUIRE(sol.gamma.has_value());
  CHECK(sol.kernel.empty());
  // gamma(e_i tensor e_i) = 1, gamma(e_i tensor e_j) = 0 off the diagonal.
  Vec<K> d00 = c.square.pure(c.carrier.basisVec(0), c.carrier.basisVec(0));
  Vec<K> d01 = c.square.pure(c.carrier.basisVec(0), c.carrier.basisVec(1));
  Vec<K> g00 = Vec<K>(*sol.gamma * d00);
  Vec<K> g01 = Vec<K>(*sol.gamma * d01);
  CHECK(g00(0) == K(1));
  CHECK(g01(0) == K(0));
}

TEST_CASE_TEMPLATE("broken coproducts and counits are reported", K, Rational, Fp) {
  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());
  Coring<K> c = twoPointCoring(ground);

  Coring<K> badCounit = c;
  (*badCounit.counit)(0, 1) = K(2);
  auto why = checkCoring(badCounit);
  REQUIRE(why.has_value());
  CHECK(why->find("counit") != std::string::npos);

  Coring<K> badDelta = c;
  // Delta(e1) = e1 tensor e1 + e0 tensor e1 fails coassociativity.
  badDelta.coproduct.col(1) =
      Vec<K>(c.square.pure(c.carrier.basisVec(1), c.carrier.basisVec(1)) +
             c.square.pure(c.carrier.basisVec(0), c.carrier.basisVec(1)));
  auto why2 = checkCoring(badDelta);
  REQUIRE(why2.has_value());
  CHECK(why2->find("coassociative") != std::string::npos);
}

TEST_CASE_TEMPLATE("canonical coring of the diagonal pair", K, Rational, Fp) {
  RingExtension<K> ext = diagInMat2<K>();
  SweedlerCoring<K> s = sweedlerCoring(ext);
  CHECK(s.coring.carrier.dim == 8);
  CHECK_FALSE(checkCoring(s.coring).has_value());

  // 1 tensor 1 is grouplike.
  Vec<K> g = s.tensor.pure(ext.total->unit, ext.total->unit);
  CHECK_FALSE(grouplikeViolation(s.coring, g).has_value());

  // The expectation induces the unique cointegral.
  Mat<K> fromE = cointegralFromExpectation(s, *ext.expectation);
  CHECK_FALSE(cointegralViolation(s.coring, fromE).has_value());
  CointegralResult<K> sol = solveCointegral(s.coring);
  REQUIRE(sol.gamma.has_value());
  CHECK(sol.kernel.empty());
  CHECK(matEq(*sol.gamma, fromE));

  // The contraction of gamma recovers gamma through the counit.
  Mat<K> pi = gammaToPi(s.coring, fromE);
  CHECK(matEq(piToGamma(s.coring, pi), fromE));
}

TEST_CASE_TEMPLATE("canonical coring over the ground field inside the quadratic algebra", K, Rational,
                   Fp) {
  RingExtension<K> ext = groundInside<K>(ptr(gaussAlgebra<K>()));
  CHECK_FALSE(checkExtension(ext).has_value());
  SweedlerCoring<K> s = sweedlerCoring(ext);
  CHECK(s.coring.carrier.dim == 4);
  CHECK_FALSE(checkCoring(s.coring).has_value());

  CointegralResult<K> sol = solveCointegral(s.coring);
  REQUIRE(sol.gamma.has_value());
  // Unital maps to the invariant part leave one free parameter.
  CHECK(sol.kernel.size() == 1);

  // gamma from the coefficient-of-1 expectation: on (1 tensor i) tensor
  // (i tensor 1) it gives E(i*i) = -1.
  Mat<K> e = zeros<K>(1, 2);
  e(0, 0) = K(1);
  Mat<K> fromE = cointegralFromExpectation(s, e);
  Vec<K> v = s.coring.square.pure(s.tensor.pure(ext.total->basisVec(0), ext.total->basisVec(1)),
                                  s.tensor.pure(ext.total->basisVec(1), ext.total->basisVec(0)));
  Vec<K> val = Vec<K>(fromE * v);
  CHECK(val(0) == K(-1));
  CHECK(val(1) == K(0));
}

TEST_CASE_TEMPLATE("nilpotent extension: coseparable but not cosplit", K, Rational, Fp) {
  RingExtension<K> ext = groundInside<K>(ptr(truncatedPolynomialAlgebra<K>(2)));
  SweedlerCoring<K> s = sweedlerCoring(ext);
  CHECK(s.coring.carrier.dim == 4);
  CHECK_FALSE(checkCoring(s.coring).has_value());
  CHECK(solveCointegral(s.coring).gamma.has_value());
  CHECK_FALSE(findCosplitting(s.coring).has_value());
}

TEST_CASE_TEMPLATE("triangular extension: cosplit but not coseparable", K, Rational, Fp) {
  RingExtension<K> ext = dualNumbersInTriangular<K>();
  SweedlerCoring<K> s = sweedlerCoring(ext);
  CHECK(s.coring.carrier.dim == 5);
  CHECK_FALSE(checkCoring(s.coring).has_value());
  CHECK_FALSE(solveCointegral(s.coring).gamma.has_value());
  auto e = findCosplitting(s.coring);
  REQUIRE(e.has_value());
  Vec<K> one = Vec<K>(*s.coring.counit * *e);
  CHECK(matEq(Mat<K>(one), Mat<K>(ext.total->unit)));
}

TEST_CASE_TEMPLATE("comodules over the two point coring", K, Rational, Fp) {
  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());
  Coring<K> c = twoPointCoring(ground);
  Bimodule<K> line;
  line.left = ground;
  line.right = ground;
  line.dim = 1;
  line.leftAct.push_back(identity<K>(1));
  line.rightAct.push_back(identity<K>(1));
  Comodule<K> m = makeComodule(c, line, zeros<K>(0, 0));
  m.coaction = Mat<K>(m.mc.pure(line.basisVec(0), c.carrier.basisVec(0)));
  CHECK_FALSE(checkComodule(c, m).has_value());

  Comodule<K> bad = m;
  bad.coaction = Mat<K>(m.mc.pure(line.basisVec(0), c.carrier.basisVec(0)) +
                        m.mc.pure(line.basisVec(0), c.carrier.basisVec(1)));
  CHECK(checkComodule(c, bad).has_value());
}
