#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "coringlab/algebra.hpp"
#include "coringlab/aring.hpp"
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
RingExtension<K> groundInGauss() {
  RingExtension<K> ext;
  ext.total = ptr(gaussAlgebra<K>());
  ext.base = ptr(groundAlgebra<K>());
  ext.iota = ext.total->unit;
  Mat<K> e = zeros<K>(1, 2);
  e(0, 0) = K(1);
  ext.expectation = e;
  return ext;
}

template <class K>
RingExtension<K> groundInNilpotent() {
  RingExtension<K> ext;
  ext.total = ptr(truncatedPolynomialAlgebra<K>(2));
  ext.base = ptr(groundAlgebra<K>());
  ext.iota = ext.total->unit;
  return ext;
}

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

// A bimodule stripped down to its right half so it can serve as a plain right
// module: the ground field acts trivially on the left.
template <class K>
Bimodule<K> rightHalf(const Bimodule<K>& m, const AlgebraPtr<K>& ground) {
  Bimodule<K> out;
  out.left = ground;
  out.right = m.right;
  out.dim = m.dim;
  out.leftAct = {identity<K>(m.dim)};
  out.rightAct = m.rightAct;
  return out;
}

// The carrier of a coring coacting on itself through the coproduct.
template <class K>
Comodule<K> carrierComodule(const Coring<K>& c, const AlgebraPtr<K>& ground) {
  return makeComodule(c, rightHalf(c.carrier, ground), c.coproduct);
}

}  // namespace

TEST_CASE_TEMPLATE("multiplication form on a trivial coring recovers the algebra", K, Rational,
                   Fp) {
  for (Algebra<K> base : {gaussAlgebra<K>(), matrixAlgebra<K>(2)}) {
    AlgebraPtr<K> a = ptr(std::move(base));
    Coring<K> c = trivialCoring(a);
    Mat<K> gamma = Mat<K>(a->mult * c.square.q.section);
    ARing<K> r = ringFromCointegral(c, gamma);
    CHECK(matEq(r.product, gamma));
    auto unit = findARingUnit(r);
    REQUIRE(unit.has_value());
    CHECK(matEq(Mat<K>(*unit), Mat<K>(a->unit)));
  }

  AlgebraPtr<K> m2 = ptr(matrixAlgebra<K>(2));
  ARing<K> r = ringFromCointegral(trivialCoring(m2), Mat<K>(m2->mult * tensorOver(regularBimodule(m2), regularBimodule(m2)).q.section));
  Vec<K> e01 = m2->basisVec(1);
  Vec<K> e11 = m2->basisVec(3);
  CHECK(matEq(Mat<K>(r.times(e01, e11)), Mat<K>(e01)));
  CHECK(isZero<K>(Mat<K>(r.times(e11, e01))));
}

TEST_CASE_TEMPLATE("zero product is a lawful ring with no unit and no section", K, Rational, Fp) {
  AlgebraPtr<K> a = ptr(gaussAlgebra<K>());
  ARing<K> r = makeARing(regularBimodule(a), zeros<K>(2, 2));
  CHECK_FALSE(checkARing(r).has_value());
  CHECK_FALSE(findARingUnit(r).has_value());
  CHECK_FALSE(findSeparabilitySection(r).has_value());
}

TEST_CASE_TEMPLATE("ring checker pins down broken products", K, Rational, Fp) {
  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());
  Bimodule<K> carrier;
  carrier.left = ground;
  carrier.right = ground;
  carrier.dim = 2;
  carrier.leftAct.push_back(identity<K>(2));
  carrier.rightAct.push_back(identity<K>(2));
  // e0 e0 = e1 and e1 e0 = e0 fail already on the triple (e0, e0, e0).
  Mat<K> product = zeros<K>(2, 4);
  product(1, 0) = K(1);
  product(0, 2) = K(1);
  ARing<K> r = makeARing(std::move(carrier), std::move(product));
  auto why = checkARing(r);
  REQUIRE(why.has_value());
  CHECK(why->find("associative") != std::string::npos);

  AlgebraPtr<K> m2 = ptr(matrixAlgebra<K>(2));
  Coring<K> c = trivialCoring(m2);
  ARing<K> good = ringFromCointegral(c, Mat<K>(m2->mult * c.square.q.section));
  good.product.col(0).setConstant(K(0));
  CHECK(checkARing(good).has_value());
}

TEST_CASE_TEMPLATE("forms with mismatched contractions are rejected", K, Rational, Fp) {
  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());
  Coring<K> c = twoPointCoring(ground);
  CointegralResult<K> sol = solveCointegral(c);
  REQUIRE(sol.gamma.has_value());
  ARing<K> fine = ringFromCointegral(c, *sol.gamma);
  CHECK_FALSE(checkARing(fine).has_value());
  Mat<K> bad = *sol.gamma;
  bad(0, 1) = K(1);  // couples the two points, which no balanced form may do
  CHECK_THROWS_AS(ringFromCointegral(c, bad), Error);
}

TEST_CASE_TEMPLATE("split pair: expectation product equals the induced product", K, Rational, Fp) {
  SweedlerCoring<K> s = sweedlerCoring(diagInMat2<K>());
  Mat<K> gamma = cointegralFromExpectation(s, *s.extension.expectation);
  ARing<K> fromForm = ringFromCointegral(s.coring, gamma);
  ARing<K> fromExpectation = ringFromExpectation(s, *s.extension.expectation);
  CHECK(matEq(fromForm.product, fromExpectation.product));

  // Unit: the sum of all e_pq tensor e_qp. Matrix units multiply along
  // matching middle indices, so this element reproduces every e_ij tensor e_jl.
  const AlgebraPtr<K>& a = s.extension.total;
  Vec<K> ambient = zeros<K>(16, 1);
  for (Index p = 0; p < 2; ++p)
    for (Index q = 0; q < 2; ++q)
      ambient += Vec<K>(kron(Mat<K>(a->basisVec(p * 2 + q)), Mat<K>(a->basisVec(q * 2 + p))));
  Vec<K> carrierCoords = Vec<K>(s.tensor.q.projection * ambient);
  auto unit = findARingUnit(fromExpectation);
  REQUIRE(unit.has_value());
  CHECK(matEq(Mat<K>(*unit), Mat<K>(carrierCoords)));

  auto section = findSeparabilitySection(fromExpectation);
  REQUIRE(section.has_value());
  Coring<K> rebuilt = coringFromSection(fromExpectation, *section);
  CHECK_FALSE(rebuilt.counit.has_value());
  Coring<K> viaCoproduct = coringFromSection(fromExpectation, s.coring.coproduct);
  CHECK_FALSE(checkCoring(viaCoproduct).has_value());
}

TEST_CASE_TEMPLATE("gauss pair: expectation ring is unital", K, Rational, Fp) {
  SweedlerCoring<K> s = sweedlerCoring(groundInGauss<K>());
  ARing<K> r = ringFromExpectation(s, *s.extension.expectation);
  Mat<K> gamma = cointegralFromExpectation(s, *s.extension.expectation);
  CHECK(matEq(r.product, ringFromCointegral(s.coring, gamma).product));

  const AlgebraPtr<K>& a = s.extension.total;
  // 1 tensor 1 minus i tensor i absorbs both factors: the middle expectation
  // kills i and fixes 1, and i i = -1 restores the lost term.
  Vec<K> u = Vec<K>(s.tensor.pure(Vec<K>(a->unit), Vec<K>(a->unit)) -
                    s.tensor.pure(a->basisVec(1), a->basisVec(1)));
  auto unit = findARingUnit(r);
  REQUIRE(unit.has_value());
  CHECK(matEq(Mat<K>(*unit), Mat<K>(u)));
}

TEST_CASE_TEMPLATE("carrier comodules induce firm modules", K, Rational, Fp) {
  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());

  // Trivial coring over 2 x 2 matrices: the regular module, coacting through
  // m -> m tensor 1.
  AlgebraPtr<K> m2 = ptr(matrixAlgebra<K>(2));
  Coring<K> triv = trivialCoring(m2);
  Mat<K> gamma = Mat<K>(m2->mult * triv.square.q.section);
  ARing<K> r = ringFromCointegral(triv, gamma);
  Bimodule<K> reg = rightHalf(regularBimodule(m2), ground);
  TensorProduct<K> mc = tensorOver(reg, triv.carrier);
  Mat<K> coaction = zeros<K>(mc.space.dim, 4);
  for (Index i = 0; i < 4; ++i) coaction.col(i) = mc.pure(m2->basisVec(i), Vec<K>(m2->unit));
  Comodule<K> como = makeComodule(triv, reg, coaction);
  REQUIRE_FALSE(checkComodule(triv, como).has_value());
  RingModule<K> mod = moduleFromComodule(triv, r, como, gamma);
  REQUIRE_FALSE(checkRingModule(r, mod).has_value());
  CHECK(firmness(r, mod).firm());

  // Split pair and nilpotent pair: the carrier coacting on itself.
  {
    SweedlerCoring<K> s = sweedlerCoring(diagInMat2<K>());
    Mat<K> g = cointegralFromExpectation(s, *s.extension.expectation);
    ARing<K> ring = ringFromCointegral(s.coring, g);
    Comodule<K> canonical = carrierComodule(s.coring, ground);
    REQUIRE_FALSE(checkComodule(s.coring, canonical).has_value());
    RingModule<K> m = moduleFromComodule(s.coring, ring, canonical, g);
    CHECK(matEq(m.action, ring.product));
    REQUIRE_FALSE(checkRingModule(ring, m).has_value());
    CHECK(firmness(ring, m).firm());
  }
  {
    SweedlerCoring<K> s = sweedlerCoring(groundInNilpotent<K>());
    CointegralResult<K> sol = solveCointegral(s.coring);
    REQUIRE(sol.gamma.has_value());
    ARing<K> ring = ringFromCointegral(s.coring, *sol.gamma);
    Comodule<K> canonical = carrierComodule(s.coring, ground);
    RingModule<K> m = moduleFromComodule(s.coring, ring, canonical, *sol.gamma);
    CHECK(matEq(m.action, ring.product));
    REQUIRE_FALSE(checkRingModule(ring, m).has_value());
    CHECK(firmness(ring, m).firm());
  }
}

TEST_CASE_TEMPLATE("zero action is lawful but never firm", K, Rational, Fp) {
  SweedlerCoring<K> s = sweedlerCoring(groundInNilpotent<K>());
  CointegralResult<K> sol = solveCointegral(s.coring);
  REQUIRE(sol.gamma.has_value());
  ARing<K> ring = ringFromCointegral(s.coring, *sol.gamma);

  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());
  Bimodule<K> character;
  character.left = ground;
  character.right = s.extension.total;
  character.dim = 1;
  character.leftAct.push_back(identity<K>(1));
  character.rightAct.push_back(identity<K>(1));  // 1 acts as 1
  character.rightAct.push_back(zeros<K>(1, 1));  // the nilpotent acts as 0
  REQUIRE_FALSE(checkBimodule(character).has_value());
  Index pairs = tensorOver(character, ring.carrier).space.dim;
  RingModule<K> m = makeRingModule(ring, character, zeros<K>(1, pairs));
  REQUIRE_FALSE(checkRingModule(ring, m).has_value());
  FirmnessReport<K> report = firmness(ring, m);
  CHECK_FALSE(report.actionSurjective);
  CHECK_FALSE(report.firm());
}

TEST_CASE_TEMPLATE("module checker flags corrupted actions", K, Rational, Fp) {
  AlgebraPtr<K> ground = ptr(groundAlgebra<K>());
  SweedlerCoring<K> s = sweedlerCoring(diagInMat2<K>());
  Mat<K> g = cointegralFromExpectation(s, *s.extension.expectation);
  ARing<K> ring = ringFromCointegral(s.coring, g);
  Comodule<K> canonical = carrierComodule(s.coring, ground);
  RingModule<K> m = moduleFromComodule(s.coring, ring, canonical, g);
  m.action.col(0) = Vec<K>(K(2) * m.action.col(0));
  CHECK(checkRingModule(ring, m).has_value());
}
