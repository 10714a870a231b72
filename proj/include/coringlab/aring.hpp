#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// Possibly non-unital ring living on a bimodule over the base algebra: a
/// bilinear associative product on the tensor square. Unitality is never
/// assumed; every construction below goes through quotients rather than unit
/// shortcuts.
template <class K>
struct ARing {
  Bimodule<K> carrier;
  TensorProduct<K> square;
  Mat<K> product;  // carrier.dim x square.space.dim

  const AlgebraPtr<K>& algebra() const { return carrier.left; }

  Vec<K> times(const Vec<K>& x, const Vec<K>& y) const {
    return Vec<K>(product * square.pure(x, y));
  }
};

template <class K>
ARing<K> makeARing(Bimodule<K> carrier, Mat<K> product) {
  if (carrier.left != carrier.right) throw Error("ring carrier needs one algebra on both sides");
  ARing<K> r;
  r.square = tensorOver(carrier, carrier);
  r.carrier = std::move(carrier);
  r.product = std::move(product);
  return r;
}

template <class K>
std::optional<std::string> checkARing(const ARing<K>& r) {
  if (auto why = checkBimodule(r.carrier)) return "carrier: " + *why;
  const Index dimC = r.carrier.dim;
  const Index sq = r.square.space.dim;
  if (r.product.rows() != dimC || r.product.cols() != sq) return "product has wrong shape";
  if (auto why = moduleMapViolation(r.square.space, r.carrier, r.product, Side::Both)) {
    return "product: " + *why;
  }
  TensorProduct<K> triple = tensorOver(r.square.space, r.carrier);
  Mat<K> mp = Mat<K>(r.product * r.square.q.projection);  // on the ambient square
  // (xy)z: multiply the first two factors, then the rest.
  Mat<K> pairFirst = kronBlockLeft(r.product, dimC, Mat<K>(triple.q.section));
  Mat<K> lhs = Mat<K>(mp * pairFirst);
  // x(yz): reassociate the lift down to the triple ambient space.
  Mat<K> deep = kronBlockLeft(Mat<K>(r.square.q.section), dimC, Mat<K>(triple.q.section));
  Mat<K> pairSecond = kronBlockRight(dimC, mp, deep);
  Mat<K> rhs = Mat<K>(mp * pairSecond);
  if (!matEq(lhs, rhs)) return "product is not associative";
  return std::nullopt;
}

/// Two-sided unit element for the product, if one exists.
template <class K>
std::optional<Vec<K>> findARingUnit(const ARing<K>& r) {
  const Index dimC = r.carrier.dim;
  Mat<K> mp = Mat<K>(r.product * r.square.q.projection);
  Mat<K> system = zeros<K>(2 * dimC * dimC, dimC);
  Mat<K> rhs = zeros<K>(2 * dimC * dimC, 1);
  for (Index j = 0; j < dimC; ++j) {
    Mat<K> leftSlot = zeros<K>(dimC * dimC, dimC);   // u tensor e_j
    Mat<K> rightSlot = zeros<K>(dimC * dimC, dimC);  // e_j tensor u
    for (Index i = 0; i < dimC; ++i) {
      leftSlot(i * dimC + j, i) = K(1);
      rightSlot(j * dimC + i, i) = K(1);
    }
    system.block(j * dimC, 0, dimC, dimC) = Mat<K>(mp * leftSlot);
    system.block(dimC * dimC + j * dimC, 0, dimC, dimC) = Mat<K>(mp * rightSlot);
    rhs.block(j * dimC, 0, dimC, 1) = r.carrier.basisVec(j);
    rhs.block(dimC * dimC + j * dimC, 0, dimC, 1) = r.carrier.basisVec(j);
  }
  AffineSolution<K> sol = solveAffine(system, Vec<K>(rhs.col(0)));
  if (!sol.particular) return std::nullopt;
  return Vec<K>(*sol.particular);
}

/// The ring structure a bilinear coproduct-compatible form induces on the
/// carrier of a coring: x y = sum x_(1) gamma(x_(2) tensor y). Demands that
/// the mirrored contraction produces the same product and that the coproduct
/// is a bimodule map over the new ring on both sides; when the form is
/// normalized the coproduct also splits the product.
template <class K>
ARing<K> ringFromCointegral(const Coring<K>& c, const Mat<K>& gamma) {
  Bimodule<K> reg = regularBimodule(c.algebra());
  if (auto why = moduleMapViolation(c.square.space, reg, gamma, Side::Both)) {
    throw Error("form is not bilinear: " + *why);
  }
  if (!isZero<K>(detail::colinearityDefect(c, gamma))) {
    throw Error("the two contraction formulas disagree");
  }
  const Index dimC = c.carrier.dim;
  ARing<K> r;
  r.carrier = c.carrier;
  r.square = c.square;
  r.product = gammaToPi(c, gamma);
  if (auto why = checkARing(r)) throw Error("induced product is defective: " + *why);
  // The coproduct must be balanced over the induced ring: applying it after
  // the product equals acting with one factor on the coproduct of the other.
  Mat<K> lifted = c.liftedCoproduct();
  Mat<K> mp = Mat<K>(r.product * c.square.q.projection);
  Mat<K> viaProduct = Mat<K>(c.coproduct * r.product);
  Mat<K> secondLeg = kronBlockRight(dimC, lifted, Mat<K>(c.square.q.section));
  Mat<K> actLeft = Mat<K>(c.square.q.projection * kronBlockLeft(mp, dimC, secondLeg));
  Mat<K> firstLeg = kronBlockLeft(lifted, dimC, Mat<K>(c.square.q.section));
  Mat<K> actRight = Mat<K>(c.square.q.projection * kronBlockRight(dimC, mp, firstLeg));
  if (!matEq(viaProduct, actLeft) || !matEq(viaProduct, actRight)) {
    throw Error("coproduct is not balanced over the induced ring");
  }
  if (c.counit && matEq(Mat<K>(gamma * c.coproduct), *c.counit)) {
    Mat<K> split = Mat<K>(r.product * c.coproduct);
    if (!matEq(split, identity<K>(dimC))) throw Error("coproduct fails to split the product");
  }
  return r;
}

/// Separability section: a bimodule map splitting the product that is also
/// balanced over the ring itself.
template <class K>
std::optional<Mat<K>> findSeparabilitySection(const ARing<K>& r) {
  const Index dimC = r.carrier.dim;
  const Index sq = r.square.space.dim;
  Mat<K> mp = Mat<K>(r.product * r.square.q.projection);
  Mat<K> section = r.square.q.section;
  Mat<K> projection = r.square.q.projection;
  std::vector<MapConstraint<K>> cons;
  // Bimodule map over the base algebra.
  for (Index i = 0; i < r.algebra()->dim; ++i) {
    Mat<K> cl = r.carrier.leftAct[i], sl = r.square.space.leftAct[i];
    cons.push_back({[cl, sl](const Mat<K>& x) {
                      Mat<K> a = Mat<K>(x * cl);
                      Mat<K> b = Mat<K>(sl * x);
                      return Mat<K>(a - b);
                    },
                    zeros<K>(sq, dimC)});
    Mat<K> cr = r.carrier.rightAct[i], sr = r.square.space.rightAct[i];
    cons.push_back({[cr, sr](const Mat<K>& x) {
                      Mat<K> a = Mat<K>(x * cr);
                      Mat<K> b = Mat<K>(sr * x);
                      return Mat<K>(a - b);
                    },
                    zeros<K>(sq, dimC)});
  }
  // Splits the product.
  Mat<K> prod = r.product;
  cons.push_back({[prod](const Mat<K>& x) { return Mat<K>(prod * x); }, identity<K>(dimC)});
  // Balanced over the ring: delta(xy) = x delta(y) = delta(x) y with the
  // outer actions of the ring on its tensor square.
  cons.push_back({[&, dimC](const Mat<K>& x) {
                    Mat<K> viaProduct = Mat<K>(x * mp * section);
                    Mat<K> secondLeg = kronBlockRight(dimC, Mat<K>(section * x), section);
                    Mat<K> actLeft = Mat<K>(projection * kronBlockLeft(mp, dimC, secondLeg));
                    return Mat<K>(viaProduct - actLeft);
                  },
                  zeros<K>(sq, sq)});
  cons.push_back({[&, dimC](const Mat<K>& x) {
                    Mat<K> viaProduct = Mat<K>(x * mp * section);
                    Mat<K> firstLeg = kronBlockLeft(Mat<K>(section * x), dimC, section);
                    Mat<K> actRight = Mat<K>(projection * kronBlockRight(dimC, mp, firstLeg));
                    return Mat<K>(viaProduct - actRight);
                  },
                  zeros<K>(sq, sq)});
  MapSolution<K> sol = solveLinearMap<K>(sq, dimC, cons);
  return sol.particular;
}

/// A coproduct without counit obtained from a separability section.
template <class K>
Coring<K> coringFromSection(const ARing<K>& r, const Mat<K>& delta) {
  Coring<K> c;
  c.carrier = r.carrier;
  c.square = r.square;
  c.coproduct = delta;
  c.counit = std::nullopt;
  if (auto why = checkCoring(c)) throw Error("section does not give a coring: " + *why);
  return c;
}

/// Right module over a possibly non-unital ring.
template <class K>
struct RingModule {
  Bimodule<K> module;       // right module over the base algebra
  TensorProduct<K> mr;      // module tensor_A ring carrier
  Mat<K> action;            // module.dim x mr.space.dim
};

template <class K>
RingModule<K> makeRingModule(const ARing<K>& r, Bimodule<K> module, Mat<K> action) {
  RingModule<K> m;
  m.mr = tensorOver(module, r.carrier);
  m.module = std::move(module);
  m.action = std::move(action);
  return m;
}

template <class K>
std::optional<std::string> checkRingModule(const ARing<K>& r, const RingModule<K>& m) {
  if (auto why = checkBimodule(m.module)) return "module: " + *why;
  const Index dm = m.module.dim;
  const Index dimC = r.carrier.dim;
  if (m.action.rows() != dm || m.action.cols() != m.mr.space.dim) return "action has wrong shape";
  if (auto why = moduleMapViolation(m.mr.space, m.module, m.action, Side::Right)) {
    return "action: " + *why;
  }
  TensorProduct<K> mrr = tensorOver(m.mr.space, r.carrier);
  Mat<K> actAmbient = Mat<K>(m.action * m.mr.q.projection);
  Mat<K> mp = Mat<K>(r.product * r.square.q.projection);
  Mat<K> lift = mrr.q.section;
  // (m x) y against m (x y).
  Mat<K> first = kronBlockLeft(m.action, dimC, lift);  // lands in M tensor C ambient
  Mat<K> viaFirst = Mat<K>(actAmbient * first);
  Mat<K> deep = kronBlockLeft(Mat<K>(m.mr.q.section), dimC, lift);
  Mat<K> second = kronBlockRight(dm, mp, deep);
  Mat<K> viaSecond = Mat<K>(actAmbient * second);
  if (!matEq(viaFirst, viaSecond)) return "action is not associative over the ring";
  return std::nullopt;
}

template <class K>
struct FirmnessReport {
  bool actionSurjective = false;
  bool kernelMatchesRelations = false;
  Index inducedDim = 0;  // dimension of module tensor_ring ring

  bool firm() const { return actionSurjective && kernelMatchesRelations; }
};

/// Exactness of m tensor r tensor r -> m tensor r -> m: the induced map from
/// the balanced tensor product must be bijective onto the module.
template <class K>
FirmnessReport<K> firmness(const ARing<K>& r, const RingModule<K>& m) {
  const Index dm = m.module.dim;
  const Index dimC = r.carrier.dim;
  TensorProduct<K> mrr = tensorOver(m.mr.space, r.carrier);
  Mat<K> actAmbient = Mat<K>(m.action * m.mr.q.projection);
  Mat<K> mp = Mat<K>(r.product * r.square.q.projection);
  Mat<K> lift = mrr.q.section;
  Mat<K> inner = kronBlockLeft(m.action, dimC, lift);
  Mat<K> term1 = Mat<K>(m.mr.q.projection * inner);
  Mat<K> deep = kronBlockLeft(Mat<K>(m.mr.q.section), dimC, lift);
  Mat<K> term2 = Mat<K>(m.mr.q.projection * kronBlockRight(dm, mp, deep));
  Mat<K> lambda = Mat<K>(term1 - term2);
  FirmnessReport<K> report;
  report.actionSurjective = rank(m.action) == dm;
  Subspace<K> image = Subspace<K>::fromColumns(lambda);
  Subspace<K> kernel = Subspace<K>::fromColumns(kernelOf(m.action));
  report.kernelMatchesRelations = image == kernel;
  report.inducedDim = m.mr.space.dim - image.rank();
  return report;
}

/// The firm module structure a comodule acquires over the induced ring:
/// m x = sum m_(0) gamma(m_(1) tensor x).
template <class K>
RingModule<K> moduleFromComodule(const Coring<K>& c, const ARing<K>& r, const Comodule<K>& m,
                                 const Mat<K>& gamma) {
  const Index dm = m.module.dim;
  const Index dimC = c.carrier.dim;
  const Index da = c.algebra()->dim;
  Mat<K> liftedCo = Mat<K>(m.mc.q.section * m.coaction);  // (dm*dimC) x dm
  Mat<K> gp = Mat<K>(gamma * c.square.q.projection);      // da x dimC^2
  RingModule<K> out;
  out.mr = tensorOver(m.module, r.carrier);
  out.module = m.module;
  Mat<K> chain = kronBlockLeft(liftedCo, dimC, Mat<K>(out.mr.q.section));  // dm*dimC^2 x mr
  Mat<K> contracted = kronBlockRight(dm, gp, chain);                       // dm*da x mr
  out.action = Mat<K>(collapseRight(m.module) * contracted);
  return out;
}

/// Multiplication induced by an expectation on the carrier of the canonical
/// coring: (a tensor b)(c tensor d) = a E(b c) tensor d.
template <class K>
ARing<K> ringFromExpectation(const SweedlerCoring<K>& s, const Mat<K>& expectation) {
  const AlgebraPtr<K>& a = s.extension.total;
  const Index da = a->dim;
  const Index dimC = s.coring.carrier.dim;
  Mat<K> quad = zeros<K>(dimC, da * da * da * da);
  for (Index j = 0; j < da; ++j) {
    for (Index k = 0; k < da; ++k) {
      Vec<K> mid = Vec<K>(s.extension.iota *
                          Vec<K>(expectation * Vec<K>(a->mult.col(j * da + k))));
      Mat<K> timesMid = a->rightMult(mid);
      for (Index i = 0; i < da; ++i) {
        Vec<K> head = Vec<K>(timesMid * a->basisVec(i));
        for (Index l = 0; l < da; ++l) {
          quad.col(((i * da + j) * da + k) * da + l) = s.tensor.pure(head, a->basisVec(l));
        }
      }
    }
  }
  Mat<K> carrierLift = kron(s.tensor.q.section, s.tensor.q.section);
  Mat<K> product = Mat<K>(Mat<K>(quad * carrierLift) * s.coring.square.q.section);
  ARing<K> r;
  r.carrier = s.coring.carrier;
  r.square = s.coring.square;
  r.product = std::move(product);
  if (auto why = checkARing(r)) throw Error("expectation product is defective: " + *why);
  return r;
}

}  // namespace coringlab
