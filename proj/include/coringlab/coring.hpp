#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// Coalgebra-like structure over a base algebra A: an (A,A)-bimodule carrier
/// with a coproduct into the tensor square over A and, usually, a counit.
/// The coproduct matrix lands in the quotient coordinates held by `square`.
/// A missing counit is legal; only the laws that mention it are skipped.
template <class K>
struct Coring {
  Bimodule<K> carrier;
  TensorProduct<K> square;
  Mat<K> coproduct;
  std::optional<Mat<K>> counit;

  const AlgebraPtr<K>& algebra() const { return carrier.left; }

  /// Coproduct followed by the section into the ambient C tensor C space.
  Mat<K> liftedCoproduct() const { return Mat<K>(square.q.section * coproduct); }
};

template <class K>
Coring<K> makeCoring(Bimodule<K> carrier, Mat<K> coproduct, std::optional<Mat<K>> counit) {
  if (carrier.left != carrier.right) throw Error("coring carrier needs one algebra on both sides");
  Coring<K> c;
  c.square = tensorOver(carrier, carrier);
  c.carrier = std::move(carrier);
  c.coproduct = std::move(coproduct);
  c.counit = std::move(counit);
  return c;
}

/// First structural violation, or nullopt. Checks the carrier, that the
/// coproduct is a bimodule map, coassociativity computed inside
/// (C tensor C) tensor C, and both counit laws when a counit is present.
template <class K>
std::optional<std::string> checkCoring(const Coring<K>& c) {
  if (auto why = checkBimodule(c.carrier)) return "carrier: " + *why;
  if (c.carrier.left != c.carrier.right) return "carrier must use one algebra on both sides";
  const Index dimC = c.carrier.dim;
  const Index sq = c.square.space.dim;
  if (c.coproduct.rows() != sq || c.coproduct.cols() != dimC) return "coproduct has wrong shape";
  if (auto why = moduleMapViolation(c.carrier, c.square.space, c.coproduct, Side::Both)) {
    return "coproduct: " + *why;
  }
  // Both composites land in (C tensor C) tensor C; the ambient index pairing
  // makes the two association orders literally the same coordinates.
  TensorProduct<K> triple = tensorOver(c.square.space, c.carrier);
  Mat<K> lifted = c.liftedCoproduct();
  Mat<K> leftward = Mat<K>(triple.q.projection * kronBlockLeft(c.coproduct, dimC, lifted));
  Mat<K> inner = kronBlockRight(dimC, lifted, lifted);
  Mat<K> reassoc = kronBlockLeft(c.square.q.projection, dimC, inner);
  Mat<K> rightward = Mat<K>(triple.q.projection * reassoc);
  if (!matEq(leftward, rightward)) return "coproduct is not coassociative";
  if (c.counit) {
    const Mat<K>& eps = *c.counit;
    const AlgebraPtr<K>& a = c.algebra();
    if (eps.rows() != a->dim || eps.cols() != dimC) return "counit has wrong shape";
    Bimodule<K> reg = regularBimodule(a);
    if (auto why = moduleMapViolation(c.carrier, reg, eps, Side::Both)) return "counit: " + *why;
    Mat<K> leftLaw = Mat<K>(collapseLeft(c.carrier) * kronBlockLeft(eps, dimC, lifted));
    if (!matEq(leftLaw, identity<K>(dimC))) return "left counit law fails";
    Mat<K> rightLaw = Mat<K>(collapseRight(c.carrier) * kronBlockRight(dimC, eps, lifted));
    if (!matEq(rightLaw, identity<K>(dimC))) return "right counit law fails";
  }
  return std::nullopt;
}

/// The canonical coring of an extension: carrier A tensor_B A, coproduct
/// inserting 1 at the tensor sign, counit given by multiplication.
template <class K>
struct SweedlerCoring {
  RingExtension<K> extension;
  TensorProduct<K> tensor;  // A tensor_B A with its quotient data
  Coring<K> coring;
};

template <class K>
SweedlerCoring<K> sweedlerCoring(const RingExtension<K>& ext) {
  SweedlerCoring<K> s;
  s.extension = ext;
  s.tensor = tensorOver(totalBaseBimodule(ext), baseTotalBimodule(ext));
  const AlgebraPtr<K>& a = ext.total;
  const Index da = a->dim;
  const Index dimC = s.tensor.space.dim;
  Bimodule<K> carrier = s.tensor.space;
  TensorProduct<K> square = tensorOver(carrier, carrier);
  // On representatives x tensor y the coproduct is (x tensor 1) paired with
  // (1 tensor y); this respects the base relations because base elements
  // slide across both tensor signs.
  Mat<K> onAmbient = zeros<K>(square.space.dim, da * da);
  std::vector<Vec<K>> leftLeg(da), rightLeg(da);
  for (Index i = 0; i < da; ++i) {
    leftLeg[i] = s.tensor.pure(a->basisVec(i), a->unit);
    rightLeg[i] = s.tensor.pure(a->unit, a->basisVec(i));
  }
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      onAmbient.col(i * da + j) = square.pure(leftLeg[i], rightLeg[j]);
  Mat<K> coproduct = Mat<K>(onAmbient * s.tensor.q.section);
  Mat<K> counit = Mat<K>(a->mult * s.tensor.q.section);
  Coring<K> c;
  c.carrier = std::move(carrier);
  c.square = std::move(square);
  c.coproduct = std::move(coproduct);
  c.counit = std::move(counit);
  s.coring = std::move(c);
  return s;
}

/// The base algebra viewed as a coring over itself: coproduct a -> a tensor 1,
/// counit the identity.
template <class K>
Coring<K> trivialCoring(const AlgebraPtr<K>& a) {
  Bimodule<K> carrier = regularBimodule(a);
  TensorProduct<K> square = tensorOver(carrier, carrier);
  Mat<K> coproduct = zeros<K>(square.space.dim, a->dim);
  for (Index i = 0; i < a->dim; ++i) coproduct.col(i) = square.pure(a->basisVec(i), a->unit);
  Coring<K> c;
  c.carrier = std::move(carrier);
  c.square = std::move(square);
  c.coproduct = std::move(coproduct);
  c.counit = identity<K>(a->dim);
  return c;
}

/// An algebra turned upside down into a coring over the ground field: the
/// coproduct is the transposed multiplication, the counit evaluation at the
/// unit.
template <class K>
Coring<K> transposeCoring(const Algebra<K>& alg) {
  AlgebraPtr<K> ground = groundPtr<K>();
  Bimodule<K> carrier;
  carrier.left = ground;
  carrier.right = ground;
  carrier.dim = alg.dim;
  carrier.leftAct = {identity<K>(alg.dim)};
  carrier.rightAct = {identity<K>(alg.dim)};
  TensorProduct<K> square = tensorOver(carrier, carrier);
  Coring<K> c;
  c.coproduct = Mat<K>(square.q.projection * Mat<K>(alg.mult.transpose()));
  c.counit = Mat<K>(alg.unit.transpose());
  c.carrier = std::move(carrier);
  c.square = std::move(square);
  return c;
}

namespace detail {

/// Difference of the two ways of pairing a candidate bilinear form against
/// one leg of the coproduct; zero exactly when the form commutes with the
/// comodule structures of the tensor square.
template <class K>
Mat<K> colinearityDefect(const Coring<K>& c, const Mat<K>& gamma) {
  const Index dimC = c.carrier.dim;
  const Index da = c.algebra()->dim;
  const Index amb = dimC * dimC;
  Mat<K> lifted = c.liftedCoproduct();                                   // amb x dimC
  Mat<K> m1 = kronBlockRight(dimC, lifted, c.square.q.section);          // dimC*amb x sq
  Mat<K> m2 = kronBlockLeft(lifted, dimC, c.square.q.section);           // amb*dimC x sq
  Mat<K> gp = Mat<K>(gamma * c.square.q.projection);                     // da x amb
  Mat<K> cl = collapseLeft(c.carrier);
  Mat<K> cr = collapseRight(c.carrier);
  // clk = cl . (gp kron I), crk = cr . (I kron gp), assembled by loops to
  // keep the big Kronecker factors unmaterialized.
  Mat<K> clk = zeros<K>(dimC, amb * dimC);
  for (Index r = 0; r < dimC; ++r)
    for (Index p = 0; p < amb; ++p)
      for (Index v = 0; v < dimC; ++v) {
        K acc = K(0);
        for (Index u = 0; u < da; ++u) acc += cl(r, u * dimC + v) * gp(u, p);
        clk(r, p * dimC + v) = acc;
      }
  Mat<K> crk = zeros<K>(dimC, dimC * amb);
  for (Index r = 0; r < dimC; ++r)
    for (Index j = 0; j < dimC; ++j)
      for (Index p = 0; p < amb; ++p) {
        K acc = K(0);
        for (Index u = 0; u < da; ++u) acc += cr(r, j * da + u) * gp(u, p);
        crk(r, j * amb + p) = acc;
      }
  Mat<K> lhs = Mat<K>(clk * m1);
  Mat<K> rhs = Mat<K>(crk * m2);
  return Mat<K>(lhs - rhs);
}

}  // namespace detail

/// Verifies that gamma is a normalized bilinear form compatible with the
/// coproduct: a bimodule map on the tensor square, balanced against the
/// coproduct legs, and splitting the counit through the coproduct.
template <class K>
std::optional<std::string> cointegralViolation(const Coring<K>& c, const Mat<K>& gamma) {
  if (!c.counit) return "normalization needs a counit";
  Bimodule<K> reg = regularBimodule(c.algebra());
  if (auto why = moduleMapViolation(c.square.space, reg, gamma, Side::Both)) {
    return "bilinearity: " + *why;
  }
  if (!isZero<K>(detail::colinearityDefect(c, gamma))) return "coproduct compatibility fails";
  Mat<K> normalized = Mat<K>(gamma * c.coproduct);
  if (!matEq(normalized, *c.counit)) return "normalization against the counit fails";
  return std::nullopt;
}

template <class K>
struct CointegralResult {
  std::optional<Mat<K>> gamma;
  std::vector<Mat<K>> kernel;  // homogeneous solutions of the same system
};

/// Solves for a cointegral by first computing the bimodule maps from the
/// tensor square to the base algebra and then imposing coproduct
/// compatibility and normalization on that coordinate space.
template <class K>
CointegralResult<K> solveCointegral(const Coring<K>& c) {
  if (!c.counit) throw Error("cointegral search needs a counit");
  const Index dimC = c.carrier.dim;
  const Index sq = c.square.space.dim;
  const Index da = c.algebra()->dim;
  Bimodule<K> reg = regularBimodule(c.algebra());
  std::vector<Mat<K>> homs = homSpace(c.square.space, reg, Side::Both);
  CointegralResult<K> out;
  const Index h = static_cast<Index>(homs.size());
  if (h == 0) {
    if (isZero<K>(*c.counit)) out.gamma = zeros<K>(da, sq);
    return out;
  }
  const Index defectRows = dimC * sq;
  const Index normRows = da * dimC;
  Mat<K> system = zeros<K>(defectRows + normRows, h);
  for (Index t = 0; t < h; ++t) {
    Mat<K> defect = detail::colinearityDefect(c, homs[t]);
    Mat<K> normalized = Mat<K>(homs[t] * c.coproduct);
    system.block(0, t, defectRows, 1) = vecOf(defect);
    system.block(defectRows, t, normRows, 1) = vecOf(normalized);
  }
  Vec<K> rhs = Vec<K>::Constant(defectRows + normRows, K(0));
  rhs.tail(normRows) = vecOf(*c.counit);
  AffineSolution<K> sol = solveAffine(system, rhs);
  for (Index j = 0; j < sol.kernel.cols(); ++j) {
    Mat<K> g = zeros<K>(da, sq);
    for (Index t = 0; t < h; ++t) g += sol.kernel(t, j) * homs[t];
    out.kernel.push_back(g);
  }
  if (!sol.particular) return out;
  Mat<K> gamma = zeros<K>(da, sq);
  for (Index t = 0; t < h; ++t) gamma += (*sol.particular)(t) * homs[t];
  if (auto why = cointegralViolation(c, gamma)) throw Error("solver returned a bad form: " + *why);
  out.gamma = std::move(gamma);
  return out;
}

/// The cointegral induced by an expectation on the canonical coring:
/// gamma((a tensor b) tensor (c tensor d)) = a E(bc) d.
template <class K>
Mat<K> cointegralFromExpectation(const SweedlerCoring<K>& s, const Mat<K>& expectation) {
  const AlgebraPtr<K>& a = s.extension.total;
  const Index da = a->dim;
  // Value on quadruples of algebra basis elements.
  Mat<K> quad = zeros<K>(da, da * da * da * da);
  for (Index j = 0; j < da; ++j) {
    for (Index k = 0; k < da; ++k) {
      Vec<K> mid = Vec<K>(s.extension.iota *
                          Vec<K>(expectation * Vec<K>(a->mult.col(j * da + k))));
      Mat<K> leftOfMid = a->rightMult(mid);  // x -> x * mid, applied to e_i below
      for (Index i = 0; i < da; ++i) {
        Vec<K> head = Vec<K>(leftOfMid * a->basisVec(i));
        Mat<K> tailMul = a->leftMult(head);
        for (Index l = 0; l < da; ++l) {
          quad.col(((i * da + j) * da + k) * da + l) = Vec<K>(tailMul * a->basisVec(l));
        }
      }
    }
  }
  // Factor through the two quotients: first each carrier leg, then the square.
  Mat<K> carrierLift = kron(s.tensor.q.section, s.tensor.q.section);  // da^4 x dimC^2
  Mat<K> onSquareAmbient = Mat<K>(quad * carrierLift);
  Mat<K> gamma = Mat<K>(onSquareAmbient * s.coring.square.q.section);
  if (auto why = cointegralViolation(s.coring, gamma)) {
    throw Error("expectation did not induce a cointegral: " + *why);
  }
  return gamma;
}

/// pi(x tensor y) = sum x_(1) gamma(x_(2) tensor y), the one-sided
/// contraction of the coproduct against a bilinear form.
template <class K>
Mat<K> gammaToPi(const Coring<K>& c, const Mat<K>& gamma) {
  const Index dimC = c.carrier.dim;
  Mat<K> lifted = c.liftedCoproduct();
  Mat<K> m2 = kronBlockLeft(lifted, dimC, c.square.q.section);  // amb*dimC x sq
  Mat<K> gp = Mat<K>(gamma * c.square.q.projection);
  Mat<K> inner = kronBlockRight(dimC, gp, m2);  // (dimC*da) x sq
  return Mat<K>(collapseRight(c.carrier) * inner);
}

/// Recovers the bilinear form from its contraction: counit after pi.
template <class K>
Mat<K> piToGamma(const Coring<K>& c, const Mat<K>& pi) {
  if (!c.counit) throw Error("needs a counit");
  return Mat<K>(*c.counit * pi);
}

/// An invariant element with counit one, if any exists: e with a.e = e.a for
/// every a and eps(e) = 1.
template <class K>
std::optional<Vec<K>> findCosplitting(const Coring<K>& c) {
  if (!c.counit) throw Error("cosplitting search needs a counit");
  const Index dimC = c.carrier.dim;
  const Index da = c.algebra()->dim;
  Mat<K> system = zeros<K>(da * dimC + da, dimC);
  for (Index i = 0; i < da; ++i) {
    Mat<K> diff = Mat<K>(c.carrier.leftAct[i] - c.carrier.rightAct[i]);
    system.block(i * dimC, 0, dimC, dimC) = diff;
  }
  system.block(da * dimC, 0, da, dimC) = *c.counit;
  Vec<K> rhs = Vec<K>::Constant(da * dimC + da, K(0));
  rhs.tail(da) = c.algebra()->unit;
  AffineSolution<K> sol = solveAffine(system, rhs);
  if (!sol.particular) return std::nullopt;
  return Vec<K>(*sol.particular);
}

/// Checks that g is grouplike: the coproduct doubles it and the counit sends
/// it to one.
template <class K>
std::optional<std::string> grouplikeViolation(const Coring<K>& c, const Vec<K>& g) {
  if (!c.counit) return "grouplike needs a counit";
  if (g.size() != c.carrier.dim) return "element has wrong dimension";
  Vec<K> doubled = c.square.pure(g, g);
  Vec<K> viaCoproduct = Vec<K>(c.coproduct * g);
  if (!matEq(Mat<K>(viaCoproduct), Mat<K>(doubled))) return "coproduct does not double the element";
  Vec<K> one = Vec<K>(*c.counit * g);
  if (!matEq(Mat<K>(one), Mat<K>(c.algebra()->unit))) return "counit does not send the element to one";
  return std::nullopt;
}

template <class K>
struct CoringSum {
  Coring<K> coring;
  Mat<K> intoFirst;   // carrier embedding of the first summand
  Mat<K> intoSecond;  // carrier embedding of the second summand
};

/// Componentwise direct sum of two corings over the same algebra.
template <class K>
CoringSum<K> directSumCoring(const Coring<K>& x, const Coring<K>& y) {
  if (x.carrier.left != y.carrier.left || x.carrier.right != y.carrier.right) {
    throw Error("summands live over different algebras");
  }
  const AlgebraPtr<K>& a = x.carrier.left;
  const Index d1 = x.carrier.dim;
  const Index d2 = y.carrier.dim;
  const Index total = d1 + d2;
  Bimodule<K> carrier;
  carrier.left = a;
  carrier.right = x.carrier.right;
  carrier.dim = total;
  for (Index i = 0; i < a->dim; ++i) {
    Mat<K> l = zeros<K>(total, total);
    l.block(0, 0, d1, d1) = x.carrier.leftAct[i];
    l.block(d1, d1, d2, d2) = y.carrier.leftAct[i];
    carrier.leftAct.push_back(l);
    Mat<K> r = zeros<K>(total, total);
    r.block(0, 0, d1, d1) = x.carrier.rightAct[i];
    r.block(d1, d1, d2, d2) = y.carrier.rightAct[i];
    carrier.rightAct.push_back(r);
  }
  Mat<K> i1 = zeros<K>(total, d1);
  i1.block(0, 0, d1, d1) = identity<K>(d1);
  Mat<K> i2 = zeros<K>(total, d2);
  i2.block(d1, 0, d2, d2) = identity<K>(d2);
  TensorProduct<K> square = tensorOver(carrier, carrier);
  Mat<K> coproduct = zeros<K>(square.space.dim, total);
  Mat<K> pairs1 = Mat<K>(kron(i1, i1) * x.liftedCoproduct());
  Mat<K> pairs2 = Mat<K>(kron(i2, i2) * y.liftedCoproduct());
  for (Index j = 0; j < d1; ++j) coproduct.col(j) = Vec<K>(square.q.projection * pairs1.col(j));
  for (Index j = 0; j < d2; ++j) {
    coproduct.col(d1 + j) = Vec<K>(square.q.projection * pairs2.col(j));
  }
  std::optional<Mat<K>> counit;
  if (x.counit && y.counit) {
    Mat<K> e = zeros<K>(a->dim, total);
    e.block(0, 0, a->dim, d1) = *x.counit;
    e.block(0, d1, a->dim, d2) = *y.counit;
    counit = std::move(e);
  }
  CoringSum<K> out;
  out.coring.carrier = std::move(carrier);
  out.coring.square = std::move(square);
  out.coring.coproduct = std::move(coproduct);
  out.coring.counit = std::move(counit);
  out.intoFirst = std::move(i1);
  out.intoSecond = std::move(i2);
  return out;
}

/// Blockwise form on a direct sum: the given forms on the diagonal blocks,
/// zero across them.
template <class K>
Mat<K> directSumForm(const CoringSum<K>& s, const Coring<K>& x, const Coring<K>& y,
                     const Mat<K>& gx, const Mat<K>& gy) {
  const Index d1 = x.carrier.dim;
  const Index d2 = y.carrier.dim;
  const Index total = d1 + d2;
  const Index da = x.algebra()->dim;
  Mat<K> gxAmb = Mat<K>(gx * x.square.q.projection);
  Mat<K> gyAmb = Mat<K>(gy * y.square.q.projection);
  Mat<K> ambient = zeros<K>(da, total * total);
  for (Index u = 0; u < total; ++u) {
    for (Index v = 0; v < total; ++v) {
      if (u < d1 && v < d1) {
        ambient.col(u * total + v) = gxAmb.col(u * d1 + v);
      } else if (u >= d1 && v >= d1) {
        ambient.col(u * total + v) = gyAmb.col((u - d1) * d2 + (v - d1));
      }
    }
  }
  return Mat<K>(ambient * s.coring.square.q.section);
}

/// Right comodule over a coring: a right module with a coaction into
/// M tensor_A C.
template <class K>
struct Comodule {
  Bimodule<K> module;      // left factor is the ground field
  TensorProduct<K> mc;     // module tensor_A carrier
  Mat<K> coaction;         // mc.space.dim x module.dim
};

template <class K>
Comodule<K> makeComodule(const Coring<K>& c, Bimodule<K> module, Mat<K> coaction) {
  Comodule<K> m;
  m.mc = tensorOver(module, c.carrier);
  m.module = std::move(module);
  m.coaction = std::move(coaction);
  return m;
}

template <class K>
std::optional<std::string> checkComodule(const Coring<K>& c, const Comodule<K>& m) {
  if (m.module.right != c.algebra()) return "module is not over the coring's algebra";
  if (auto why = checkBimodule(m.module)) return "module: " + *why;
  const Index dm = m.module.dim;
  const Index dimC = c.carrier.dim;
  if (m.coaction.rows() != m.mc.space.dim || m.coaction.cols() != dm) return "coaction has wrong shape";
  if (auto why = moduleMapViolation(m.module, m.mc.space, m.coaction, Side::Right)) {
    return "coaction: " + *why;
  }
  Mat<K> liftedCo = Mat<K>(m.mc.q.section * m.coaction);  // (dm*dimC) x dm
  Mat<K> liftedDelta = c.liftedCoproduct();
  TensorProduct<K> triple = tensorOver(m.mc.space, c.carrier);
  Mat<K> viaCoaction = Mat<K>(triple.q.projection * kronBlockLeft(m.coaction, dimC, liftedCo));
  Mat<K> inner = kronBlockRight(dm, liftedDelta, liftedCo);
  Mat<K> viaCoproduct =
      Mat<K>(triple.q.projection * kronBlockLeft(m.mc.q.projection, dimC, inner));
  if (!matEq(viaCoaction, viaCoproduct)) return "coaction fails coassociativity";
  if (!c.counit) return std::nullopt;
  Mat<K> law = Mat<K>(collapseRight(m.module) * kronBlockRight(dm, *c.counit, liftedCo));
  if (!matEq(law, identity<K>(dm))) return "counit law fails on the coaction";
  return std::nullopt;
}

}  // namespace coringlab
