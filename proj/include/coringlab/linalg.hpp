#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "coringlab/rng.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

using Index = Eigen::Index;

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;

template <class K>
Mat<K> zeros(Index r, Index c) {
  Mat<K> m(r, c);
  m.setConstant(K(0));
  return m;
}

template <class K>
Mat<K> identity(Index n) {
  Mat<K> m = zeros<K>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = K(1);
  return m;
}

template <class K>
bool isZero(const Mat<K>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!(m(i, j) == K(0))) return false;
  return true;
}

template <class K>
bool matEq(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

/// Tensor pairing convention used everywhere: the component (i, j) of x (x) y
/// sits at index i * dim(y) + j, matching the blocks of kron(a, b).
template <class K>
Mat<K> kron(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> out = zeros<K>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == K(0)) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return out;
}

/// kron(x, I_block) * m without materializing the Kronecker factor.
template <class K>
Mat<K> kronBlockLeft(const Mat<K>& x, Index block, const Mat<K>& m) {
  if (x.cols() * block != m.rows()) throw Error("kronBlockLeft: shape mismatch");
  Mat<K> out = zeros<K>(x.rows() * block, m.cols());
  for (Index c = 0; c < m.cols(); ++c)
    for (Index u = 0; u < x.cols(); ++u)
      for (Index k = 0; k < block; ++k) {
        const K& mv = m(u * block + k, c);
        if (mv == K(0)) continue;
        for (Index v = 0; v < x.rows(); ++v) {
          if (x(v, u) == K(0)) continue;
          out(v * block + k, c) += x(v, u) * mv;
        }
      }
  return out;
}

/// kron(I_block, x) * m without materializing the Kronecker factor.
template <class K>
Mat<K> kronBlockRight(Index block, const Mat<K>& x, const Mat<K>& m) {
  if (block * x.cols() != m.rows()) throw Error("kronBlockRight: shape mismatch");
  Mat<K> out = zeros<K>(block * x.rows(), m.cols());
  for (Index c = 0; c < m.cols(); ++c)
    for (Index b = 0; b < block; ++b)
      for (Index u = 0; u < x.cols(); ++u) {
        const K& mv = m(b * x.cols() + u, c);
        if (mv == K(0)) continue;
        for (Index v = 0; v < x.rows(); ++v) {
          if (x(v, u) == K(0)) continue;
          out(b * x.rows() + v, c) += x(v, u) * mv;
        }
      }
  return out;
}

/// Column-major stacking of a matrix into a vector; the unknown-matrix
/// convention for all map solvers.
template <class K>
Vec<K> vecOf(const Mat<K>& m) {
  Vec<K> v(m.size());
  Index t = 0;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(t++) = m(i, j);
  return v;
}

template <class K>
Mat<K> matOf(const Vec<K>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw Error("matOf: size mismatch");
  Mat<K> m(rows, cols);
  Index t = 0;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = v(t++);
  return m;
}

template <class K>
struct RrefResult {
  Mat<K> mat;
  std::vector<Index> pivots;
};

/// Gauss-Jordan reduced row echelon form. Pivot choice is deterministic: scan
/// columns left to right, take the first row with a nonzero entry. No
/// magnitude-based pivoting; scalars are exact.
template <class K>
RrefResult<K> rref(Mat<K> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (!(m(r, col) == K(0))) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const K inv = K(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const K f = m(r, col);
      if (f == K(0)) continue;
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
Index rank(const Mat<K>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Kernel basis, one column per free column of the RREF. Each basis vector has
/// a 1 in its free coordinate, so the output is canonical.
template <class K>
Mat<K> kernelOf(const Mat<K>& m) {
  RrefResult<K> r = rref(m);
  const Index n = m.cols();
  std::vector<bool> isPivot(n, false);
  for (Index p : r.pivots) isPivot[p] = true;
  std::vector<Index> freeCols;
  for (Index j = 0; j < n; ++j)
    if (!isPivot[j]) freeCols.push_back(j);
  Mat<K> ker = zeros<K>(n, static_cast<Index>(freeCols.size()));
  for (Index t = 0; t < static_cast<Index>(freeCols.size()); ++t) {
    const Index f = freeCols[t];
    ker(f, t) = K(1);
    for (Index i = 0; i < static_cast<Index>(r.pivots.size()); ++i)
      ker(r.pivots[i], t) = -r.mat(i, f);
  }
  return ker;
}

template <class K>
struct AffineSolution {
  std::optional<Vec<K>> particular;  // absent means infeasible, which is data
  Mat<K> kernel;                     // columns span the homogeneous solutions
};

/// Solves a x = b exactly. The particular solution sets every free variable to
/// zero, so it is deterministic; feasibility is decided by the pivot pattern
/// of the augmented matrix and the result is re-verified by substitution.
template <class K>
AffineSolution<K> solveAffine(const Mat<K>& a, const Vec<K>& b) {
  if (a.rows() != b.size()) throw Error("solveAffine: shape mismatch");
  Mat<K> aug(a.rows(), a.cols() + 1);
  aug.block(0, 0, a.rows(), a.cols()) = a;
  aug.col(a.cols()) = b;
  RrefResult<K> r = rref(std::move(aug));
  AffineSolution<K> out{std::nullopt, kernelOf(a)};
  for (Index p : r.pivots)
    if (p == a.cols()) return out;  // inconsistent row: 0 = 1
  Vec<K> x = zeros<K>(a.cols(), 1);
  for (Index i = 0; i < static_cast<Index>(r.pivots.size()); ++i) x(r.pivots[i]) = r.mat(i, a.cols());
  Mat<K> residual = a * x - b;
  if (!isZero<K>(residual)) throw Error("solveAffine: substitution check failed");
  out.particular = std::move(x);
  return out;
}

/// A linear subspace of K^n held as a row-RREF basis, so equality of
/// subspaces is equality of representations.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), basis_(zeros<K>(0, ambient)) {}

  /// Rows of m span the subspace; duplicates and dependencies are dropped.
  static Subspace fromRows(const Mat<K>& m) {
    Subspace s(m.cols());
    RrefResult<K> r = rref(m);
    const Index rk = static_cast<Index>(r.pivots.size());
    s.basis_ = r.mat.topRows(rk);
    return s;
  }

  static Subspace fromColumns(const Mat<K>& m) { return fromRows(Mat<K>(m.transpose())); }

  Index ambientDim() const { return ambient_; }
  Index rank() const { return basis_.rows(); }
  const Mat<K>& basisRows() const { return basis_; }

  /// Residual of v after eliminating along the basis; zero iff v is a member.
  Vec<K> reduce(Vec<K> v) const {
    if (v.size() != ambient_) throw Error("Subspace::reduce: ambient mismatch");
    for (Index i = 0; i < basis_.rows(); ++i) {
      Index p = pivotOfRow(i);
      const K c = v(p);
      if (c == K(0)) continue;
      for (Index j = 0; j < ambient_; ++j) v(j) -= c * basis_(i, j);
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return isZero<K>(Mat<K>(reduce(v))); }

  /// Coordinates of v in the RREF basis, if v lies in the subspace.
  std::optional<Vec<K>> coordinatesOf(const Vec<K>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<K> c(basis_.rows());
    for (Index i = 0; i < basis_.rows(); ++i) c(i) = v(pivotOfRow(i));
    return c;
  }

  Subspace sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw Error("Subspace::sum: ambient mismatch");
    Mat<K> stacked(basis_.rows() + other.basis_.rows(), ambient_);
    stacked.topRows(basis_.rows()) = basis_;
    stacked.bottomRows(other.basis_.rows()) = other.basis_;
    return fromRows(stacked);
  }

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && matEq(basis_, other.basis_);
  }

 private:
  Index pivotOfRow(Index i) const {
    for (Index j = 0; j < ambient_; ++j)
      if (!(basis_(i, j) == K(0))) return j;
    throw Error("Subspace: zero basis row");
  }

  Index ambient_ = 0;
  Mat<K> basis_;
};

/// K^n modulo a subspace of relations, with an explicit projection and a
/// section picking the representative supported on non-pivot coordinates.
/// projection * section = identity, and projection kills exactly the
/// relations.
template <class K>
struct QuotientSpace {
  Index ambient = 0;
  Subspace<K> relations;
  Mat<K> projection;  // dim() x ambient
  Mat<K> section;     // ambient x dim()

  Index dim() const { return projection.rows(); }
};

template <class K>
QuotientSpace<K> quotient(Index ambient, const Subspace<K>& relations) {
  if (relations.ambientDim() != ambient) throw Error("quotient: ambient mismatch");
  const Mat<K>& rows = relations.basisRows();
  std::vector<Index> pivots;
  pivots.reserve(rows.rows());
  for (Index i = 0; i < rows.rows(); ++i) {
    for (Index j = 0; j < ambient; ++j)
      if (!(rows(i, j) == K(0))) {
        pivots.push_back(j);
        break;
      }
  }
  std::vector<bool> isPivot(ambient, false);
  for (Index p : pivots) isPivot[p] = true;
  std::vector<Index> freeCols;
  for (Index j = 0; j < ambient; ++j)
    if (!isPivot[j]) freeCols.push_back(j);
  const Index q = static_cast<Index>(freeCols.size());
  QuotientSpace<K> out;
  out.ambient = ambient;
  out.relations = relations;
  out.projection = zeros<K>(q, ambient);
  out.section = zeros<K>(ambient, q);
  for (Index k = 0; k < q; ++k) {
    out.projection(k, freeCols[k]) = K(1);
    out.section(freeCols[k], k) = K(1);
    for (Index i = 0; i < static_cast<Index>(pivots.size()); ++i)
      out.projection(k, pivots[i]) = -rows(i, freeCols[k]);
  }
  return out;
}

/// Coordinates of v in the span of the columns of basis. The columns are
/// assumed independent, so the coordinates are unique when they exist; a
/// vector outside the span throws.
template <class K>
Vec<K> columnCoordinates(const Mat<K>& basis, const Vec<K>& v) {
  AffineSolution<K> sol = solveAffine(basis, v);
  if (!sol.particular) throw Error("element lies outside the expected span");
  return Vec<K>(*sol.particular);
}

/// Deterministic sample from an affine solution set: the particular solution
/// plus a seeded small-coefficient combination of the kernel basis.
template <class K>
Vec<K> randomElement(const AffineSolution<K>& sol, std::uint64_t seed) {
  if (!sol.particular) throw Error("randomElement: empty solution set");
  std::mt19937_64 rng = makeEngine(seed);
  Vec<K> x = *sol.particular;
  for (Index j = 0; j < sol.kernel.cols(); ++j) {
    const K c = FieldTraits<K>::randomDraw(rng);
    if (c == K(0)) continue;
    x += c * sol.kernel.col(j);
  }
  return x;
}

/// One linear condition on an unknown matrix U: evaluate(U) must equal rhs,
/// where evaluate is linear in the entries of U.
template <class K>
struct MapConstraint {
  std::function<Mat<K>(const Mat<K>&)> evaluate;
  Mat<K> rhs;
};

template <class K>
struct MapSolution {
  std::optional<Mat<K>> particular;
  std::vector<Mat<K>> kernel;
};

/// Solves for an unknown rows x cols matrix subject to linear matrix
/// constraints. The system is assembled numerically by evaluating each
/// constraint on the unit matrices E_ij, which keeps call sites free of
/// vectorization bookkeeping.
template <class K>
MapSolution<K> solveLinearMap(Index rows, Index cols, const std::vector<MapConstraint<K>>& constraints) {
  Index eqTotal = 0;
  for (const auto& c : constraints) eqTotal += c.rhs.size();
  const Index unknowns = rows * cols;
  Mat<K> system = zeros<K>(eqTotal, unknowns);
  Vec<K> rhs(eqTotal);
  {
    Index at = 0;
    for (const auto& c : constraints) {
      rhs.segment(at, c.rhs.size()) = vecOf(c.rhs);
      at += c.rhs.size();
    }
  }
  Mat<K> unit = zeros<K>(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      unit(i, j) = K(1);
      Index at = 0;
      const Index col = j * rows + i;
      for (const auto& c : constraints) {
        Mat<K> val = c.evaluate(unit);
        if (val.rows() != c.rhs.rows() || val.cols() != c.rhs.cols())
          throw Error("solveLinearMap: constraint shape mismatch");
        system.block(at, col, val.size(), 1) = vecOf(val);
        at += val.size();
      }
      unit(i, j) = K(0);
    }
  AffineSolution<K> sol = solveAffine(system, rhs);
  MapSolution<K> out;
  for (Index j = 0; j < sol.kernel.cols(); ++j) out.kernel.push_back(matOf<K>(sol.kernel.col(j), rows, cols));
  if (sol.particular) out.particular = matOf<K>(*sol.particular, rows, cols);
  return out;
}

/// Sample from a solved map space, mirroring randomElement.
template <class K>
Mat<K> randomMap(const MapSolution<K>& sol, std::uint64_t seed) {
  if (!sol.particular) throw Error("randomMap: empty solution set");
  std::mt19937_64 rng = makeEngine(seed);
  Mat<K> x = *sol.particular;
  for (const Mat<K>& k : sol.kernel) {
    const K c = FieldTraits<K>::randomDraw(rng);
    if (c == K(0)) continue;
    x += c * k;
  }
  return x;
}

}  // namespace coringlab
