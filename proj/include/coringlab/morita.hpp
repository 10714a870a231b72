#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/aring.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// A coring carrying a normalized balanced form and a grouplike element,
/// together with the ring the form induces on the carrier. This is the data
/// the whole linking construction below runs on.
template <class K>
struct GrouplikeCoring {
  Coring<K> coring;
  ARing<K> ring;
  Mat<K> gamma;
  Vec<K> grouplike;

  const AlgebraPtr<K>& algebra() const { return coring.algebra(); }

  // gamma evaluated on a pair given in ambient carrier coordinates
  Vec<K> pairForm(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> pair = Vec<K>(coring.square.q.projection * kron(Mat<K>(x), Mat<K>(y)));
    return Vec<K>(gamma * pair);
  }
};

template <class K>
GrouplikeCoring<K> makeGrouplikeCoring(Coring<K> c, Mat<K> gamma, Vec<K> grouplike) {
  if (auto why = cointegralViolation(c, gamma)) throw Error("form: " + *why);
  if (auto why = grouplikeViolation(c, grouplike)) throw Error("grouplike: " + *why);
  GrouplikeCoring<K> d;
  d.ring = ringFromCointegral(c, gamma);
  d.coring = std::move(c);
  d.gamma = std::move(gamma);
  d.grouplike = std::move(grouplike);
  return d;
}

/// The base algebra as a firm module over the induced ring: a acted on by c
/// through the form against the grouplike-shifted coaction a -> 1 tensor g a.
template <class K>
RingModule<K> baseModule(const GrouplikeCoring<K>& d) {
  const AlgebraPtr<K>& a = d.algebra();
  Bimodule<K> mod;
  mod.left = groundPtr<K>();
  mod.right = a;
  mod.dim = a->dim;
  mod.leftAct = {identity<K>(a->dim)};
  for (Index i = 0; i < a->dim; ++i) mod.rightAct.push_back(a->rightMult(a->basisVec(i)));
  TensorProduct<K> mc = tensorOver(mod, d.coring.carrier);
  Mat<K> coaction = zeros<K>(mc.space.dim, a->dim);
  for (Index i = 0; i < a->dim; ++i) {
    Vec<K> shifted = Vec<K>(d.coring.carrier.rightAct[i] * d.grouplike);
    coaction.col(i) = mc.pure(Vec<K>(a->unit), shifted);
  }
  Comodule<K> como = makeComodule(d.coring, std::move(mod), std::move(coaction));
  if (auto why = checkComodule(d.coring, como)) {
    throw Error("grouplike coaction is defective: " + *why);
  }
  return moduleFromComodule(d.coring, d.ring, como, d.gamma);
}

/// The carrier as a right module over its own induced ring.
template <class K>
RingModule<K> carrierModule(const GrouplikeCoring<K>& d) {
  Bimodule<K> mod;
  mod.left = groundPtr<K>();
  mod.right = d.coring.carrier.right;
  mod.dim = d.coring.carrier.dim;
  mod.leftAct = {identity<K>(mod.dim)};
  mod.rightAct = d.coring.carrier.rightAct;
  RingModule<K> m;
  m.mr = tensorOver(mod, d.ring.carrier);  // same relation data as the ring's square
  m.module = std::move(mod);
  m.action = d.ring.product;
  return m;
}

/// Elements m with m . c = m gamma(g tensor c) for every c: the part of the
/// module on which the ring acts through the form alone.
template <class K>
Mat<K> invariantVectors(const GrouplikeCoring<K>& d, const RingModule<K>& m) {
  const Index dm = m.module.dim;
  const Index dimC = d.coring.carrier.dim;
  Mat<K> actAmbient = Mat<K>(m.action * m.mr.q.projection);
  Mat<K> stacked = zeros<K>(dm * dimC, dm);
  for (Index j = 0; j < dimC; ++j) {
    Mat<K> slot = zeros<K>(dm * dimC, dm);  // m -> m tensor c_j in the ambient pair space
    for (Index i = 0; i < dm; ++i) slot(i * dimC + j, i) = K(1);
    Vec<K> t = d.pairForm(d.grouplike, d.coring.carrier.basisVec(j));
    stacked.block(j * dm, 0, dm, dm) = Mat<K>(Mat<K>(actAmbient * slot) - m.module.rightAction(t));
  }
  return kernelOf(stacked);
}

/// The invariants of the base algebra, as a subalgebra.
template <class K>
RingExtension<K> invariantsSubring(const GrouplikeCoring<K>& d) {
  Mat<K> basis = invariantVectors(d, baseModule(d));
  RingExtension<K> ext = generatedSubalgebra(d.algebra(), basis);
  if (ext.base->dim != basis.cols()) throw Error("invariants are not closed under the product");
  return ext;
}

/// A module tensored with the invariant ideal over the induced ring, computed
/// as the cokernel of the two-sided action difference.
template <class K>
struct BalancedPairs {
  TensorProduct<K> pairs;     // module tensor_A ideal
  Mat<K> relations;           // action difference out of module tensor carrier tensor ideal
  QuotientSpace<K> balanced;  // pairs modulo the ring action
};

namespace detail {

// The ring product restricted to carrier tensor ideal, in ambient pair
// coordinates on the input and ideal coordinates on the output.
template <class K>
Mat<K> productOntoIdeal(const GrouplikeCoring<K>& d, const Mat<K>& idealBasis) {
  const Index dimC = d.coring.carrier.dim;
  const Index dq = idealBasis.cols();
  Mat<K> piAmb = Mat<K>(d.ring.product * d.coring.square.q.projection);
  Mat<K> out = zeros<K>(dq, dimC * dq);
  for (Index u = 0; u < dimC; ++u) {
    for (Index t = 0; t < dq; ++t) {
      Vec<K> value =
          Vec<K>(piAmb * kron(Mat<K>(d.coring.carrier.basisVec(u)), Mat<K>(idealBasis.col(t))));
      out.col(u * dq + t) = columnCoordinates(idealBasis, value);
    }
  }
  return out;
}

}  // namespace detail

template <class K>
BalancedPairs<K> balancedOverRing(const GrouplikeCoring<K>& d, const RingModule<K>& m,
                                  const Bimodule<K>& idealModule, const Mat<K>& idealBasis) {
  const Index dm = m.module.dim;
  const Index dq = idealBasis.cols();
  BalancedPairs<K> out;
  out.pairs = tensorOver(m.module, idealModule);
  TensorProduct<K> triples = tensorOver(m.mr.space, idealModule);
  Mat<K> lift = triples.q.section;
  Mat<K> term1 = Mat<K>(out.pairs.q.projection * kronBlockLeft(m.action, dq, lift));
  Mat<K> deep = kronBlockLeft(Mat<K>(m.mr.q.section), dq, lift);
  Mat<K> piQ = detail::productOntoIdeal(d, idealBasis);
  Mat<K> term2 = Mat<K>(out.pairs.q.projection * kronBlockRight(dm, piQ, deep));
  out.relations = Mat<K>(term1 - term2);
  out.balanced = quotient(out.pairs.space.dim, Subspace<K>::fromColumns(out.relations));
  return out;
}

/// The full linking data between the invariant subring and the induced ring:
/// the invariant ideal, the evaluation map off the ideal, and the trace map
/// into the subring. The trace map is checked to be bijective; whether the
/// evaluation map is bijective is recorded as strictness.
template <class K>
struct MoritaContext {
  RingExtension<K> invariants;    // B inside the base algebra
  Mat<K> idealBasis;              // Q inside the carrier
  Vec<K> idealCoordsOfGrouplike;  // g expressed in ideal coordinates
  Bimodule<K> idealModule;        // Q with its (base algebra, B) actions
  TensorProduct<K> qa;            // Q tensor_B A
  Mat<K> sigma;                   // qa -> carrier coordinates
  BalancedPairs<K> aq;            // A tensor_ring Q
  Mat<K> tau;                     // aq.balanced -> B coordinates
  bool sigmaBijective = false;
  bool tauBijective = false;
  bool grouplikeLeftUnit = false;

  bool strict() const { return sigmaBijective && tauBijective; }
};

template <class K>
MoritaContext<K> buildMoritaContext(const GrouplikeCoring<K>& d) {
  const AlgebraPtr<K>& a = d.algebra();
  const Index da = a->dim;
  const Index dimC = d.coring.carrier.dim;
  const Bimodule<K>& carrier = d.coring.carrier;
  Mat<K> piAmb = Mat<K>(d.ring.product * d.coring.square.q.projection);
  MoritaContext<K> ctx;

  RingModule<K> base = baseModule(d);
  Mat<K> bBasis = invariantVectors(d, base);
  ctx.invariants = generatedSubalgebra(a, bBasis);
  if (ctx.invariants.base->dim != bBasis.cols()) {
    throw Error("invariants are not closed under the product");
  }
  const Index db = ctx.invariants.base->dim;

  ctx.idealBasis = invariantVectors(d, carrierModule(d));
  const Index dq = ctx.idealBasis.cols();
  Subspace<K> idealSpan = Subspace<K>::fromColumns(ctx.idealBasis);
  ctx.idealCoordsOfGrouplike = columnCoordinates(ctx.idealBasis, d.grouplike);

  // Stability: under the left algebra action, under the ring product from the
  // left, and under the subring from the right. The grouplike is a right unit
  // on the ideal.
  for (Index t = 0; t < dq; ++t) {
    Vec<K> q = Vec<K>(ctx.idealBasis.col(t));
    for (Index i = 0; i < da; ++i) {
      if (!idealSpan.contains(Vec<K>(carrier.leftAct[i] * q))) {
        throw Error("ideal is not stable under the algebra");
      }
    }
    for (Index u = 0; u < dimC; ++u) {
      Vec<K> cq = Vec<K>(piAmb * kron(Mat<K>(carrier.basisVec(u)), Mat<K>(q)));
      if (!idealSpan.contains(cq)) throw Error("ideal is not a left ideal of the ring");
    }
    for (Index s = 0; s < db; ++s) {
      Vec<K> sub = ctx.invariants.embed(ctx.invariants.base->basisVec(s));
      if (!idealSpan.contains(Vec<K>(carrier.rightAction(sub) * q))) {
        throw Error("ideal is not stable under the subring");
      }
    }
    Vec<K> qg = Vec<K>(piAmb * kron(Mat<K>(q), Mat<K>(d.grouplike)));
    if (!matEq(Mat<K>(qg), Mat<K>(q))) throw Error("grouplike is not a right unit on the ideal");
  }

  // The ideal with its own coordinates: the algebra acts on the left, the
  // subring on the right.
  Bimodule<K> ideal;
  ideal.left = a;
  ideal.right = ctx.invariants.base;
  ideal.dim = dq;
  for (Index i = 0; i < da; ++i) {
    Mat<K> act = zeros<K>(dq, dq);
    for (Index t = 0; t < dq; ++t) {
      act.col(t) =
          columnCoordinates(ctx.idealBasis, Vec<K>(carrier.leftAct[i] * ctx.idealBasis.col(t)));
    }
    ideal.leftAct.push_back(std::move(act));
  }
  for (Index s = 0; s < db; ++s) {
    Mat<K> mul = carrier.rightAction(ctx.invariants.embed(ctx.invariants.base->basisVec(s)));
    Mat<K> act = zeros<K>(dq, dq);
    for (Index t = 0; t < dq; ++t) {
      act.col(t) = columnCoordinates(ctx.idealBasis, Vec<K>(mul * ctx.idealBasis.col(t)));
    }
    ideal.rightAct.push_back(std::move(act));
  }
  if (auto why = checkBimodule(ideal)) throw Error("ideal bimodule is defective: " + *why);
  ctx.idealModule = std::move(ideal);

  // Evaluation: q tensor a -> q a, off the tensor product over the subring.
  Bimodule<K> overSub;
  overSub.left = ctx.invariants.base;
  overSub.right = a;
  overSub.dim = da;
  for (Index s = 0; s < db; ++s) {
    overSub.leftAct.push_back(a->leftMult(ctx.invariants.embed(ctx.invariants.base->basisVec(s))));
  }
  for (Index i = 0; i < da; ++i) overSub.rightAct.push_back(a->rightMult(a->basisVec(i)));
  ctx.qa = tensorOver(ctx.idealModule, overSub);
  Mat<K> sigmaAmb = zeros<K>(dimC, dq * da);
  for (Index s = 0; s < dq; ++s) {
    for (Index j = 0; j < da; ++j) {
      sigmaAmb.col(s * da + j) = Vec<K>(carrier.rightAct[j] * ctx.idealBasis.col(s));
    }
  }
  ctx.sigma = Mat<K>(sigmaAmb * ctx.qa.q.section);
  if (auto why = moduleMapViolation(ctx.qa.space, carrier, ctx.sigma, Side::Both)) {
    throw Error("evaluation map is not bilinear: " + *why);
  }
  ctx.sigmaBijective = ctx.qa.space.dim == dimC && rank(ctx.sigma) == dimC;

  // Trace: a tensor q -> gamma(g a tensor q), off the tensor product over the
  // ring, landing in the subring.
  ctx.aq = balancedOverRing(d, base, ctx.idealModule, ctx.idealBasis);
  Mat<K> tauAmb = zeros<K>(db, da * dq);
  for (Index i = 0; i < da; ++i) {
    Vec<K> ga = Vec<K>(carrier.rightAct[i] * d.grouplike);
    for (Index t = 0; t < dq; ++t) {
      Vec<K> value = d.pairForm(ga, Vec<K>(ctx.idealBasis.col(t)));
      tauAmb.col(i * dq + t) = columnCoordinates(ctx.invariants.iota, value);
    }
  }
  Mat<K> tauPairs = Mat<K>(tauAmb * ctx.aq.pairs.q.section);
  if (!isZero<K>(Mat<K>(tauPairs * ctx.aq.relations))) {
    throw Error("trace map is not balanced over the ring");
  }
  ctx.tau = Mat<K>(tauPairs * ctx.aq.balanced.section);
  ctx.tauBijective = ctx.aq.balanced.dim() == db && rank(ctx.tau) == db;
  if (!ctx.tauBijective) throw Error("trace map failed to be bijective");

  // Mixed associativity squares on basis triples.
  for (Index s = 0; s < dq; ++s) {
    Vec<K> q = Vec<K>(ctx.idealBasis.col(s));
    for (Index i = 0; i < da; ++i) {
      Vec<K> ga = Vec<K>(carrier.rightAct[i] * d.grouplike);
      Vec<K> qa = Vec<K>(carrier.rightAct[i] * q);
      for (Index t = 0; t < dq; ++t) {
        Vec<K> qPrime = Vec<K>(ctx.idealBasis.col(t));
        Vec<K> lhs = Vec<K>(piAmb * kron(Mat<K>(qa), Mat<K>(qPrime)));
        Vec<K> trace = d.pairForm(ga, qPrime);
        Vec<K> rhs = Vec<K>(carrier.rightAction(trace) * q);
        if (!matEq(Mat<K>(lhs), Mat<K>(rhs))) {
          throw Error("evaluation against trace square fails");
        }
      }
      for (Index j = 0; j < da; ++j) {
        Vec<K> trace = d.pairForm(ga, q);
        Vec<K> lhs = a->product(trace, a->basisVec(j));
        Vec<K> evaluated = Vec<K>(carrier.rightAct[j] * q);
        Vec<K> rhs = d.pairForm(ga, evaluated);
        if (!matEq(Mat<K>(lhs), Mat<K>(rhs))) {
          throw Error("trace against evaluation square fails");
        }
      }
    }
  }

  ctx.grouplikeLeftUnit =
      matEq(Mat<K>(piAmb * kron(Mat<K>(d.grouplike), identity<K>(dimC))), identity<K>(dimC));
  if (ctx.grouplikeLeftUnit && !ctx.sigmaBijective) {
    throw Error("left unit grouplike must make the context strict");
  }
  return ctx;
}

/// The mutually inverse maps between a module tensored with the ideal over
/// the ring and the module's invariants: act, and pair with the grouplike.
template <class K>
struct OmegaTheta {
  Mat<K> omega;  // balanced coordinates -> invariant coordinates
  Mat<K> theta;  // invariant coordinates -> balanced coordinates
  bool bijective = false;
};

template <class K>
OmegaTheta<K> omegaTheta(const GrouplikeCoring<K>& d, const MoritaContext<K>& ctx,
                         const RingModule<K>& m) {
  const Index dm = m.module.dim;
  Mat<K> invariants = invariantVectors(d, m);
  const Index k = invariants.cols();
  BalancedPairs<K> bp = balancedOverRing(d, m, ctx.idealModule, ctx.idealBasis);
  Mat<K> actQ = Mat<K>(Mat<K>(m.action * m.mr.q.projection) *
                       kron(identity<K>(dm), ctx.idealBasis));  // onto the module
  Mat<K> onPairs = Mat<K>(actQ * bp.pairs.q.section);
  if (!isZero<K>(Mat<K>(onPairs * bp.relations))) {
    throw Error("action is not balanced over the ring");
  }
  Mat<K> onBalanced = Mat<K>(onPairs * bp.balanced.section);
  OmegaTheta<K> out;
  out.omega = zeros<K>(k, onBalanced.cols());
  for (Index j = 0; j < onBalanced.cols(); ++j) {
    out.omega.col(j) = columnCoordinates(invariants, Vec<K>(onBalanced.col(j)));
  }
  out.theta = zeros<K>(bp.balanced.dim(), k);
  for (Index t = 0; t < k; ++t) {
    Vec<K> pair = Vec<K>(kron(Mat<K>(invariants.col(t)), Mat<K>(ctx.idealCoordsOfGrouplike)));
    out.theta.col(t) = Vec<K>(bp.balanced.projection * Vec<K>(bp.pairs.q.projection * pair));
  }
  out.bijective = matEq(Mat<K>(out.omega * out.theta), identity<K>(k)) &&
                  matEq(Mat<K>(out.theta * out.omega), identity<K>(bp.balanced.dim()));
  return out;
}

/// A preimage of the subring unit under the trace map, as coefficients over
/// ideal x algebra basis pairs. Both finiteness identities are verified: the
/// pairs reproduce every algebra element through trace-then-act, and every
/// ideal element through evaluate-then-multiply.
template <class K>
Mat<K> dualBases(const GrouplikeCoring<K>& d, const MoritaContext<K>& ctx) {
  const AlgebraPtr<K>& a = d.algebra();
  const Index da = a->dim;
  const Index dq = ctx.idealBasis.cols();
  const Bimodule<K>& carrier = d.coring.carrier;
  Mat<K> piAmb = Mat<K>(d.ring.product * d.coring.square.q.projection);
  Vec<K> unitCoords = columnCoordinates(ctx.invariants.iota, Vec<K>(a->unit));
  AffineSolution<K> sol = solveAffine(ctx.tau, unitCoords);
  if (!sol.particular) throw Error("unit has no preimage under the trace map");
  Vec<K> pairsCoords = Vec<K>(ctx.aq.balanced.section * *sol.particular);
  Vec<K> ambient = Vec<K>(ctx.aq.pairs.q.section * pairsCoords);
  Mat<K> coeff = matOf(ambient, dq, da);  // coeff(t, i) weights e_i tensor q_t
  for (Index j = 0; j < da; ++j) {
    Vec<K> acc = zeros<K>(da, 1);
    for (Index i = 0; i < da; ++i) {
      Vec<K> ga = Vec<K>(carrier.rightAct[i] * d.grouplike);
      for (Index t = 0; t < dq; ++t) {
        if (coeff(t, i) == K(0)) continue;
        Vec<K> evaluated = Vec<K>(carrier.rightAct[j] * ctx.idealBasis.col(t));
        acc += Vec<K>(coeff(t, i) * d.pairForm(ga, evaluated));
      }
    }
    if (!matEq(Mat<K>(acc), Mat<K>(a->basisVec(j)))) {
      throw Error("dual bases fail on the algebra side");
    }
  }
  for (Index s = 0; s < dq; ++s) {
    Vec<K> q = Vec<K>(ctx.idealBasis.col(s));
    Vec<K> acc = zeros<K>(d.coring.carrier.dim, 1);
    for (Index i = 0; i < da; ++i) {
      Vec<K> evaluated = Vec<K>(carrier.rightAct[i] * q);
      for (Index t = 0; t < dq; ++t) {
        if (coeff(t, i) == K(0)) continue;
        acc += Vec<K>(coeff(t, i) *
                      Vec<K>(piAmb * kron(Mat<K>(evaluated), Mat<K>(ctx.idealBasis.col(t)))));
      }
    }
    if (!matEq(Mat<K>(acc), Mat<K>(q))) throw Error("dual bases fail on the ideal side");
  }
  return coeff;
}

/// Whether the endomorphisms of the base module over the ring are exactly the
/// left multiplications by invariants.
template <class K>
bool endomorphismsMatchInvariants(const GrouplikeCoring<K>& d, const MoritaContext<K>& ctx) {
  const AlgebraPtr<K>& a = d.algebra();
  const Index da = a->dim;
  const Index dimC = d.coring.carrier.dim;
  RingModule<K> base = baseModule(d);
  Mat<K> actAmbient = Mat<K>(base.action * base.mr.q.projection);
  std::vector<MapConstraint<K>> cons;
  for (Index i = 0; i < da; ++i) {
    Mat<K> r = base.module.rightAct[i];
    cons.push_back({[r](const Mat<K>& x) { return Mat<K>(Mat<K>(x * r) - Mat<K>(r * x)); },
                    zeros<K>(da, da)});
  }
  for (Index j = 0; j < dimC; ++j) {
    Mat<K> slot = zeros<K>(da * dimC, da);
    for (Index i = 0; i < da; ++i) slot(i * dimC + j, i) = K(1);
    Mat<K> actBy = Mat<K>(actAmbient * slot);
    cons.push_back(
        {[actBy](const Mat<K>& x) { return Mat<K>(Mat<K>(x * actBy) - Mat<K>(actBy * x)); },
         zeros<K>(da, da)});
  }
  MapSolution<K> sol = solveLinearMap<K>(da, da, cons);
  Mat<K> endos = zeros<K>(da * da, static_cast<Index>(sol.kernel.size()));
  for (Index t = 0; t < static_cast<Index>(sol.kernel.size()); ++t) {
    endos.col(t) = vecOf(sol.kernel[static_cast<std::size_t>(t)]);
  }
  const Index db = ctx.invariants.base->dim;
  Mat<K> multipliers = zeros<K>(da * da, db);
  for (Index s = 0; s < db; ++s) {
    multipliers.col(s) = vecOf(a->leftMult(ctx.invariants.embed(ctx.invariants.base->basisVec(s))));
  }
  return Subspace<K>::fromColumns(endos) == Subspace<K>::fromColumns(multipliers);
}

/// Whether tensoring the subring itself up to a module over the ring and
/// taking invariants gives the subring back through b -> b tensor 1.
template <class K>
bool extensionUnitBijective(const GrouplikeCoring<K>& d, const MoritaContext<K>& ctx) {
  const AlgebraPtr<K>& a = d.algebra();
  const AlgebraPtr<K>& b = ctx.invariants.base;
  const Index da = a->dim;
  const Index db = b->dim;
  const Index dimC = d.coring.carrier.dim;
  Bimodule<K> sub;
  sub.left = groundPtr<K>();
  sub.right = b;
  sub.dim = db;
  sub.leftAct = {identity<K>(db)};
  for (Index s = 0; s < db; ++s) sub.rightAct.push_back(b->rightMult(b->basisVec(s)));
  Bimodule<K> over;
  over.left = b;
  over.right = a;
  over.dim = da;
  for (Index s = 0; s < db; ++s) {
    over.leftAct.push_back(a->leftMult(ctx.invariants.embed(b->basisVec(s))));
  }
  for (Index i = 0; i < da; ++i) over.rightAct.push_back(a->rightMult(a->basisVec(i)));
  TensorProduct<K> na = tensorOver(sub, over);
  RingModule<K> base = baseModule(d);
  RingModule<K> m;
  m.mr = tensorOver(na.space, d.ring.carrier);
  m.module = na.space;
  Mat<K> alphaAmb = Mat<K>(base.action * base.mr.q.projection);
  Mat<K> deep = kronBlockLeft(Mat<K>(na.q.section), dimC, Mat<K>(m.mr.q.section));
  m.action = Mat<K>(na.q.projection * kronBlockRight(db, alphaAmb, deep));
  if (auto why = checkRingModule(d.ring, m)) throw Error("tensored module is defective: " + *why);
  Mat<K> invariants = invariantVectors(d, m);
  if (invariants.cols() != db) return false;
  Subspace<K> span = Subspace<K>::fromColumns(invariants);
  Mat<K> eta = zeros<K>(na.space.dim, db);
  for (Index s = 0; s < db; ++s) {
    eta.col(s) = na.pure(b->basisVec(s), Vec<K>(a->unit));
    if (!span.contains(Vec<K>(eta.col(s)))) return false;
  }
  return rank(eta) == db;
}

}  // namespace coringlab
