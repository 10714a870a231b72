#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// Finite-dimensional unital associative algebra over K, given by structure
/// constants. Column i*dim+j of `mult` holds the coordinates of e_i * e_j,
/// matching the tensor pairing used by kron().
template <class K>
struct Algebra {
  Index dim = 0;
  Vec<K> unit;
  Mat<K> mult;  // dim x dim^2

  Vec<K> product(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> t = Vec<K>(kron(Mat<K>(x), Mat<K>(y)));
    return Vec<K>(mult * t);
  }

  // b |-> a*b
  Mat<K> leftMult(const Vec<K>& a) const {
    Mat<K> k = kron(Mat<K>(a), identity<K>(dim));
    return Mat<K>(mult * k);
  }

  // b |-> b*a
  Mat<K> rightMult(const Vec<K>& a) const {
    Mat<K> k = kron(identity<K>(dim), Mat<K>(a));
    return Mat<K>(mult * k);
  }

  Vec<K> basisVec(Index i) const {
    Vec<K> e = Vec<K>::Constant(dim, K(0));
    e(i) = K(1);
    return e;
  }
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

/// Builds an algebra from a basis-product callback; productFn(i, j) returns
/// the coordinates of e_i * e_j.
template <class K, class ProductFn>
Algebra<K> makeAlgebra(Index dim, const Vec<K>& unit, ProductFn&& productFn) {
  Algebra<K> alg;
  alg.dim = dim;
  alg.unit = unit;
  alg.mult = zeros<K>(dim, dim * dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      Vec<K> p = productFn(i, j);
      if (p.size() != dim) throw Error("product callback returned wrong dimension");
      alg.mult.col(i * dim + j) = p;
    }
  }
  return alg;
}

/// Returns a description of the first axiom violation, or nullopt if the
/// structure constants define a unital associative algebra.
template <class K>
std::optional<std::string> checkAlgebra(const Algebra<K>& alg) {
  const Index n = alg.dim;
  if (alg.unit.size() != n || alg.mult.rows() != n || alg.mult.cols() != n * n) {
    return "shape mismatch between dim, unit, and structure constants";
  }
  if (!matEq(alg.leftMult(alg.unit), identity<K>(n))) return "unit fails as left identity";
  if (!matEq(alg.rightMult(alg.unit), identity<K>(n))) return "unit fails as right identity";
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Vec<K> ij = Vec<K>(alg.mult.col(i * n + j));
      for (Index k = 0; k < n; ++k) {
        Vec<K> lhs = alg.product(ij, alg.basisVec(k));
        Vec<K> rhs = alg.product(alg.basisVec(i), Vec<K>(alg.mult.col(j * n + k)));
        if (!matEq(Mat<K>(lhs), Mat<K>(rhs))) {
          return "associativity fails on basis triple (" + std::to_string(i) + ", " +
                 std::to_string(j) + ", " + std::to_string(k) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

template <class K>
Algebra<K> groundAlgebra() {
  Vec<K> one = Vec<K>::Constant(1, K(1));
  return makeAlgebra<K>(1, one, [](Index, Index) { return Vec<K>::Constant(1, K(1)); });
}

/// Fresh shared handle on a one-dimensional ground algebra. Modules that must
/// agree on their acting algebra have to share one handle.
template <class K>
AlgebraPtr<K> groundPtr() {
  return std::make_shared<const Algebra<K>>(groundAlgebra<K>());
}

/// Full matrix algebra of n x n matrices; basis E_{rc} at index r*n + c.
template <class K>
Algebra<K> matrixAlgebra(Index n) {
  const Index d = n * n;
  Vec<K> unit = Vec<K>::Constant(d, K(0));
  for (Index r = 0; r < n; ++r) unit(r * n + r) = K(1);
  return makeAlgebra<K>(d, unit, [n, d](Index i, Index j) {
    Vec<K> p = Vec<K>::Constant(d, K(0));
    const Index r = i / n, c = i % n, r2 = j / n, c2 = j % n;
    if (c == r2) p(r * n + c2) = K(1);
    return p;
  });
}

/// Upper-triangular n x n matrices; basis E_{rc} for r <= c, ordered row-major.
template <class K>
Algebra<K> upperTriangularAlgebra(Index n) {
  std::vector<std::pair<Index, Index>> cells;
  for (Index r = 0; r < n; ++r)
    for (Index c = r; c < n; ++c) cells.emplace_back(r, c);
  const Index d = static_cast<Index>(cells.size());
  auto indexOf = [&](Index r, Index c) -> Index {
    for (Index t = 0; t < d; ++t)
      if (cells[t].first == r && cells[t].second == c) return t;
    return -1;
  };
  Vec<K> unit = Vec<K>::Constant(d, K(0));
  for (Index r = 0; r < n; ++r) unit(indexOf(r, r)) = K(1);
  return makeAlgebra<K>(d, unit, [cells, indexOf, d](Index i, Index j) {
    Vec<K> p = Vec<K>::Constant(d, K(0));
    auto [r, c] = cells[i];
    auto [r2, c2] = cells[j];
    if (c == r2) p(indexOf(r, c2)) = K(1);
    return p;
  });
}

/// k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
template <class K>
Algebra<K> truncatedPolynomialAlgebra(Index n) {
  Vec<K> unit = Vec<K>::Constant(n, K(0));
  unit(0) = K(1);
  return makeAlgebra<K>(n, unit, [n](Index i, Index j) {
    Vec<K> p = Vec<K>::Constant(n, K(0));
    if (i + j < n) p(i + j) = K(1);
    return p;
  });
}

/// Group algebra of the order-two group; basis 1, s with s^2 = 1.
template <class K>
Algebra<K> groupAlgebraC2() {
  Vec<K> unit = Vec<K>::Constant(2, K(0));
  unit(0) = K(1);
  return makeAlgebra<K>(2, unit, [](Index i, Index j) {
    Vec<K> p = Vec<K>::Constant(2, K(0));
    p((i + j) % 2) = K(1);
    return p;
  });
}

/// k[i]/(i^2 + 1); basis 1, i.
template <class K>
Algebra<K> gaussAlgebra() {
  Vec<K> unit = Vec<K>::Constant(2, K(0));
  unit(0) = K(1);
  return makeAlgebra<K>(2, unit, [](Index i, Index j) {
    Vec<K> p = Vec<K>::Constant(2, K(0));
    if (i == 1 && j == 1) {
      p(0) = K(-1);
    } else {
      p((i + j) % 2) = K(1);
    }
    return p;
  });
}

/// Direct product A x B with componentwise operations; A's basis comes first.
template <class K>
Algebra<K> directProductAlgebra(const Algebra<K>& a, const Algebra<K>& b) {
  const Index d = a.dim + b.dim;
  Vec<K> unit = Vec<K>::Constant(d, K(0));
  unit.head(a.dim) = a.unit;
  unit.tail(b.dim) = b.unit;
  return makeAlgebra<K>(d, unit, [&a, &b, d](Index i, Index j) {
    Vec<K> p = Vec<K>::Constant(d, K(0));
    if (i < a.dim && j < a.dim) {
      p.head(a.dim) = a.mult.col(i * a.dim + j);
    } else if (i >= a.dim && j >= a.dim) {
      p.tail(b.dim) = b.mult.col((i - a.dim) * b.dim + (j - a.dim));
    }
    return p;
  });
}

}  // namespace coringlab
