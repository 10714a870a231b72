#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// Unital algebra embedding base -> total, optionally equipped with a
/// base-bilinear projection splitting it.
template <class K>
struct RingExtension {
  AlgebraPtr<K> base;
  AlgebraPtr<K> total;
  Mat<K> iota;                        // total.dim x base.dim
  std::optional<Mat<K>> expectation;  // base.dim x total.dim

  Vec<K> embed(const Vec<K>& b) const { return Vec<K>(iota * b); }
};

template <class K>
std::optional<std::string> checkExtension(const RingExtension<K>& ext) {
  const Index db = ext.base->dim, dt = ext.total->dim;
  if (ext.iota.rows() != dt || ext.iota.cols() != db) return "embedding has wrong shape";
  if (!matEq(Mat<K>(ext.embed(ext.base->unit)), Mat<K>(ext.total->unit))) {
    return "embedding does not preserve the unit";
  }
  for (Index i = 0; i < db; ++i) {
    for (Index j = 0; j < db; ++j) {
      Vec<K> viaBase = ext.embed(Vec<K>(ext.base->mult.col(i * db + j)));
      Vec<K> viaTotal = ext.total->product(ext.embed(ext.base->basisVec(i)),
                                           ext.embed(ext.base->basisVec(j)));
      if (!matEq(Mat<K>(viaBase), Mat<K>(viaTotal))) {
        return "embedding is not multiplicative on basis pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      }
    }
  }
  if (rank(ext.iota) != db) return "embedding is not injective";
  if (ext.expectation) {
    const Mat<K>& e = *ext.expectation;
    if (e.rows() != db || e.cols() != dt) return "expectation has wrong shape";
    if (!matEq(Mat<K>(e * ext.iota), identity<K>(db))) return "expectation does not split the embedding";
    for (Index i = 0; i < db; ++i) {
      Vec<K> bi = ext.embed(ext.base->basisVec(i));
      Mat<K> lhsL = Mat<K>(e * ext.total->leftMult(bi));
      Mat<K> rhsL = Mat<K>(ext.base->leftMult(ext.base->basisVec(i)) * e);
      if (!matEq(lhsL, rhsL)) return "expectation fails left base-linearity at basis " + std::to_string(i);
      Mat<K> lhsR = Mat<K>(e * ext.total->rightMult(bi));
      Mat<K> rhsR = Mat<K>(ext.base->rightMult(ext.base->basisVec(i)) * e);
      if (!matEq(lhsR, rhsR)) return "expectation fails right base-linearity at basis " + std::to_string(i);
    }
  }
  return std::nullopt;
}

/// The total algebra as a bimodule over the base on both sides.
template <class K>
Bimodule<K> baseBaseBimodule(const RingExtension<K>& ext) {
  Bimodule<K> m;
  m.left = ext.base;
  m.right = ext.base;
  m.dim = ext.total->dim;
  for (Index i = 0; i < ext.base->dim; ++i) {
    Vec<K> bi = ext.embed(ext.base->basisVec(i));
    m.leftAct.push_back(ext.total->leftMult(bi));
    m.rightAct.push_back(ext.total->rightMult(bi));
  }
  return m;
}

/// The total algebra with its regular left action and the base acting on the
/// right through the embedding.
template <class K>
Bimodule<K> totalBaseBimodule(const RingExtension<K>& ext) {
  Bimodule<K> m;
  m.left = ext.total;
  m.right = ext.base;
  m.dim = ext.total->dim;
  for (Index i = 0; i < ext.total->dim; ++i) {
    m.leftAct.push_back(ext.total->leftMult(ext.total->basisVec(i)));
  }
  for (Index i = 0; i < ext.base->dim; ++i) {
    m.rightAct.push_back(ext.total->rightMult(ext.embed(ext.base->basisVec(i))));
  }
  return m;
}

template <class K>
Bimodule<K> baseTotalBimodule(const RingExtension<K>& ext) {
  Bimodule<K> m;
  m.left = ext.base;
  m.right = ext.total;
  m.dim = ext.total->dim;
  for (Index i = 0; i < ext.base->dim; ++i) {
    m.leftAct.push_back(ext.total->leftMult(ext.embed(ext.base->basisVec(i))));
  }
  for (Index i = 0; i < ext.total->dim; ++i) {
    m.rightAct.push_back(ext.total->rightMult(ext.total->basisVec(i)));
  }
  return m;
}

/// Searches for a base-bilinear projection splitting the embedding. Returns
/// one if the affine system is feasible.
template <class K>
std::optional<Mat<K>> findExpectation(const RingExtension<K>& ext) {
  const Index db = ext.base->dim, dt = ext.total->dim;
  std::vector<MapConstraint<K>> cons;
  Mat<K> iota = ext.iota;
  cons.push_back({[iota](const Mat<K>& x) { return Mat<K>(x * iota); }, identity<K>(db)});
  for (Index i = 0; i < db; ++i) {
    Vec<K> bi = ext.embed(ext.base->basisVec(i));
    Mat<K> lt = ext.total->leftMult(bi);
    Mat<K> lb = ext.base->leftMult(ext.base->basisVec(i));
    cons.push_back({[lt, lb](const Mat<K>& x) {
                      Mat<K> a = Mat<K>(x * lt);
                      Mat<K> b = Mat<K>(lb * x);
                      return Mat<K>(a - b);
                    },
                    zeros<K>(db, dt)});
    Mat<K> rt = ext.total->rightMult(bi);
    Mat<K> rb = ext.base->rightMult(ext.base->basisVec(i));
    cons.push_back({[rt, rb](const Mat<K>& x) {
                      Mat<K> a = Mat<K>(x * rt);
                      Mat<K> b = Mat<K>(rb * x);
                      return Mat<K>(a - b);
                    },
                    zeros<K>(db, dt)});
  }
  MapSolution<K> sol = solveLinearMap<K>(db, dt, cons);
  return sol.particular;
}

/// Closes a generating set inside `total` under products, yielding the
/// extension spanned by the unit and the generators. Generator columns live in
/// total coordinates.
template <class K>
RingExtension<K> generatedSubalgebra(const AlgebraPtr<K>& total, const Mat<K>& generators) {
  const Index dt = total->dim;
  Mat<K> seed = zeros<K>(dt, generators.cols() + 1);
  seed.col(0) = total->unit;
  for (Index j = 0; j < generators.cols(); ++j) seed.col(j + 1) = generators.col(j);
  Subspace<K> span = Subspace<K>::fromColumns(seed);
  for (;;) {
    Mat<K> basis = Mat<K>(span.basisRows().transpose());
    const Index d = basis.cols();
    Mat<K> products = zeros<K>(dt, d * d);
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j)
        products.col(i * d + j) = total->product(Vec<K>(basis.col(i)), Vec<K>(basis.col(j)));
    Mat<K> joined = zeros<K>(dt, d + d * d);
    joined.block(0, 0, dt, d) = basis;
    joined.block(0, d, dt, d * d) = products;
    Subspace<K> bigger = Subspace<K>::fromColumns(joined);
    if (bigger.rank() == span.rank()) break;
    span = bigger;
  }
  Mat<K> basis = Mat<K>(span.basisRows().transpose());
  const Index db = basis.cols();
  auto coords = [&](const Vec<K>& v) {
    auto c = span.coordinatesOf(v);
    if (!c) throw Error("closure lost a product");
    return *c;
  };
  Vec<K> unitCoords = coords(total->unit);
  Algebra<K> sub = makeAlgebra<K>(db, unitCoords, [&](Index i, Index j) {
    return coords(total->product(Vec<K>(basis.col(i)), Vec<K>(basis.col(j))));
  });
  if (auto why = checkAlgebra(sub)) throw Error("closure produced a bad algebra: " + *why);
  RingExtension<K> ext;
  ext.base = std::make_shared<const Algebra<K>>(std::move(sub));
  ext.total = total;
  ext.iota = basis;
  return ext;
}

}  // namespace coringlab
