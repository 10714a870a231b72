#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "coringlab/algebra.hpp"
#include "coringlab/aring.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/morita.hpp"

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
RingExtension<K> groundInC2() {
  RingExtension<K> ext;
  ext.total = ptr(groupAlgebraC2<K>());
  ext.base = ptr(groundAlgebra<K>());
  ext.iota = ext.total->unit;
  ext.expectation = findExpectation(ext);
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

// Columns spanning a tensor 1 inside a canonical coring.
template <class K>
Mat<K> leftLegSpan(const SweedlerCoring<K>& s) {
  const Index da = s.extension.total->dim;
  Mat<K> cols = zeros<K>(s.coring.carrier.dim, da);
  for (Index i = 0; i < da; ++i) {
    cols.col(i) = s.tensor.pure(s.extension.total->basisVec(i), Vec<K>(s.extension.total->unit));
  }
  return cols;
}

// The whole package of naturality checks that every lawful context must pass.
template <class K>
void checkFunctorRoundTrips(const GrouplikeCoring<K>& d, const MoritaContext<K>& ctx) {
  RingModule<K> base = baseModule(d);
  OmegaTheta<K> onBase = omegaTheta(d, ctx, base);
  CHECK(onBase.bijective);
  Mat<K> viaInvariants = Mat<K>(invariantVectors(d, base) * onBase.omega);
  Mat<K> viaTrace = Mat<K>(ctx.invariants.iota * ctx.tau);
  CHECK(matEq(viaInvariants, viaTrace));
  OmegaTheta<K> onCarrier = omegaTheta(d, ctx, carrierModule(d));
  CHECK(onCarrier.bijective);
  CHECK(endomorphismsMatchInvariants(d, ctx));
  CHECK(extensionUnitBijective(d, ctx));
}

}  // namespace

TEST_CASE_TEMPLATE("multiplication form context is strict with a left unit grouplike", K, Rational,
                   Fp) {
  for (Algebra<K> alg : {gaussAlgebra<K>(), matrixAlgebra<K>(2)}) {
    AlgebraPtr<K> a = ptr(std::move(alg));
    Coring<K> c = trivialCoring(a);
    Mat<K> gamma = Mat<K>(a->mult * c.square.q.section);
    GrouplikeCoring<K> d = makeGrouplikeCoring(std::move(c), gamma, Vec<K>(a->unit));
    MoritaContext<K> ctx = buildMoritaContext(d);

    CHECK(ctx.invariants.base->dim == a->dim);
    CHECK(Subspace<K>::fromColumns(ctx.invariants.iota) ==
          Subspace<K>::fromColumns(identity<K>(a->dim)));
    CHECK(ctx.idealBasis.cols() == a->dim);
    CHECK(ctx.grouplikeLeftUnit);
    CHECK(ctx.sigmaBijective);
    CHECK(ctx.tauBijective);
    CHECK(ctx.strict());

    Mat<K> coeff = dualBases(d, ctx);
    CHECK(coeff.rows() == ctx.idealBasis.cols());
    CHECK(coeff.cols() == a->dim);
    checkFunctorRoundTrips(d, ctx);
  }
}

TEST_CASE_TEMPLATE("split matrix pair gives the diagonal as invariants", K, Rational, Fp) {
  SweedlerCoring<K> s = sweedlerCoring(diagInMat2<K>());
  Mat<K> gamma = cointegralFromExpectation(s, *s.extension.expectation);
  Vec<K> one = Vec<K>(s.extension.total->unit);
  Vec<K> g = s.tensor.pure(one, one);
  GrouplikeCoring<K> d = makeGrouplikeCoring(s.coring, gamma, g);
  MoritaContext<K> ctx = buildMoritaContext(d);

  CHECK(ctx.invariants.base->dim == 2);
  CHECK(Subspace<K>::fromColumns(ctx.invariants.iota) ==
        Subspace<K>::fromColumns(s.extension.iota));
  CHECK(ctx.idealBasis.cols() == 4);
  CHECK(Subspace<K>::fromColumns(ctx.idealBasis) == Subspace<K>::fromColumns(leftLegSpan(s)));
  CHECK(ctx.strict());
  CHECK_FALSE(ctx.grouplikeLeftUnit);

  Mat<K> coeff = dualBases(d, ctx);
  CHECK(coeff.rows() == 4);
  CHECK(coeff.cols() == 4);
  checkFunctorRoundTrips(d, ctx);
}

TEST_CASE_TEMPLATE("split commutative pairs give scalar invariants", K, Rational, Fp) {
  for (RingExtension<K> ext : {groundInGauss<K>(), groundInC2<K>()}) {
    REQUIRE(ext.expectation.has_value());
    SweedlerCoring<K> s = sweedlerCoring(ext);
    Mat<K> gamma = cointegralFromExpectation(s, *ext.expectation);
    Vec<K> one = Vec<K>(ext.total->unit);
    GrouplikeCoring<K> d = makeGrouplikeCoring(s.coring, gamma, s.tensor.pure(one, one));
    MoritaContext<K> ctx = buildMoritaContext(d);

    CHECK(ctx.invariants.base->dim == 1);
    CHECK(matEq(Mat<K>(ctx.invariants.embed(ctx.invariants.base->unit)), Mat<K>(one)));
    CHECK(ctx.idealBasis.cols() == 2);
    CHECK(Subspace<K>::fromColumns(ctx.idealBasis) == Subspace<K>::fromColumns(leftLegSpan(s)));
    CHECK(ctx.strict());
    CHECK_FALSE(ctx.grouplikeLeftUnit);
    CHECK_NOTHROW(dualBases(d, ctx));
    checkFunctorRoundTrips(d, ctx);
  }
}

TEST_CASE_TEMPLATE("nilpotent pair is strict although the grouplike is not a left unit", K,
                   Rational, Fp) {
  SweedlerCoring<K> s = sweedlerCoring(groundInNilpotent<K>());
  CointegralResult<K> sol = solveCointegral(s.coring);
  REQUIRE(sol.gamma.has_value());
  Vec<K> one = Vec<K>(s.extension.total->unit);
  GrouplikeCoring<K> d = makeGrouplikeCoring(s.coring, *sol.gamma, s.tensor.pure(one, one));
  MoritaContext<K> ctx = buildMoritaContext(d);

  CHECK(ctx.invariants.base->dim == 1);
  CHECK(ctx.idealBasis.cols() == 2);
  CHECK(Subspace<K>::fromColumns(ctx.idealBasis) == Subspace<K>::fromColumns(leftLegSpan(s)));
  CHECK(ctx.strict());
  CHECK_FALSE(ctx.grouplikeLeftUnit);
  CHECK_NOTHROW(dualBases(d, ctx));
  checkFunctorRoundTrips(d, ctx);
}

TEST_CASE_TEMPLATE("direct sum context keeps the trace bijective but loses strictness", K,
                   Rational, Fp) {
  AlgebraPtr<K> a = ptr(gaussAlgebra<K>());
  Coring<K> x = trivialCoring(a);
  Coring<K> y = trivialCoring(a);
  CoringSum<K> sum = directSumCoring(x, y);
  REQUIRE_FALSE(checkCoring(sum.coring).has_value());
  Mat<K> gx = Mat<K>(a->mult * x.square.q.section);
  Mat<K> gy = Mat<K>(a->mult * y.square.q.section);
  Mat<K> gamma = directSumForm(sum, x, y, gx, gy);
  Vec<K> g = Vec<K>(sum.intoFirst * a->unit);
  GrouplikeCoring<K> d = makeGrouplikeCoring(sum.coring, gamma, g);
  MoritaContext<K> ctx = buildMoritaContext(d);

  CHECK(ctx.invariants.base->dim == 2);
  CHECK(ctx.idealBasis.cols() == 2);
  CHECK(Subspace<K>::fromColumns(ctx.idealBasis) == Subspace<K>::fromColumns(sum.intoFirst));
  CHECK(ctx.tauBijective);
  CHECK_FALSE(ctx.sigmaBijective);
  CHECK_FALSE(ctx.strict());
  CHECK_FALSE(ctx.grouplikeLeftUnit);
  CHECK_NOTHROW(dualBases(d, ctx));
  checkFunctorRoundTrips(d, ctx);
}

TEST_CASE_TEMPLATE("defective grouplikes and forms are rejected", K, Rational, Fp) {
  AlgebraPtr<K> a = ptr(gaussAlgebra<K>());
  Coring<K> c = trivialCoring(a);
  Mat<K> gamma = Mat<K>(a->mult * c.square.q.section);
  Vec<K> doubled = Vec<K>(K(2) * a->unit);
  CHECK_THROWS_AS(makeGrouplikeCoring(trivialCoring(a), gamma, doubled), Error);
  Mat<K> scaled = Mat<K>(K(2) * gamma);
  CHECK_THROWS_AS(makeGrouplikeCoring(trivialCoring(a), scaled, Vec<K>(a->unit)), Error);
}
