#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// Two-sided module over a pair of algebras. leftAct[i] is the matrix of the
/// i-th basis element of *left acting on the left; rightAct[j] likewise for
/// *right. Both action families must commute with each other.
template <class K>
struct Bimodule {
  AlgebraPtr<K> left;
  AlgebraPtr<K> right;
  Index dim = 0;
  std::vector<Mat<K>> leftAct;
  std::vector<Mat<K>> rightAct;

  Mat<K> leftAction(const Vec<K>& a) const {
    Mat<K> m = zeros<K>(dim, dim);
    for (Index i = 0; i < left->dim; ++i) m += a(i) * leftAct[i];
    return m;
  }

  Mat<K> rightAction(const Vec<K>& a) const {
    Mat<K> m = zeros<K>(dim, dim);
    for (Index i = 0; i < right->dim; ++i) m += a(i) * rightAct[i];
    return m;
  }

  Vec<K> basisVec(Index i) const {
    Vec<K> e = Vec<K>::Constant(dim, K(0));
    e(i) = K(1);
    return e;
  }
};

/// First axiom violation, or nullopt. Verifies unit action, that the left
/// action is multiplicative, that the right action reverses products, and
/// that the two actions commute.
template <class K>
std::optional<std::string> checkBimodule(const Bimodule<K>& m) {
  const Index dl = m.left->dim, dr = m.right->dim;
  if (static_cast<Index>(m.leftAct.size()) != dl || static_cast<Index>(m.rightAct.size()) != dr) {
    return "action list sizes disagree with algebra dimensions";
  }
  for (const Mat<K>& a : m.leftAct)
    if (a.rows() != m.dim || a.cols() != m.dim) return "left action matrix has wrong shape";
  for (const Mat<K>& a : m.rightAct)
    if (a.rows() != m.dim || a.cols() != m.dim) return "right action matrix has wrong shape";
  if (!matEq(m.leftAction(m.left->unit), identity<K>(m.dim))) return "left unit does not act as identity";
  if (!matEq(m.rightAction(m.right->unit), identity<K>(m.dim))) return "right unit does not act as identity";
  for (Index i = 0; i < dl; ++i) {
    for (Index j = 0; j < dl; ++j) {
      Mat<K> composite = Mat<K>(m.leftAct[i] * m.leftAct[j]);
      if (!matEq(m.leftAction(Vec<K>(m.left->mult.col(i * dl + j))), composite)) {
        return "left action is not multiplicative on basis pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      }
    }
  }
  for (Index i = 0; i < dr; ++i) {
    for (Index j = 0; j < dr; ++j) {
      // m.(ab) = (m.a).b, so the matrix of ab is act[b] * act[a]
      Mat<K> composite = Mat<K>(m.rightAct[j] * m.rightAct[i]);
      if (!matEq(m.rightAction(Vec<K>(m.right->mult.col(i * dr + j))), composite)) {
        return "right action does not reverse basis pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      }
    }
  }
  for (Index i = 0; i < dl; ++i) {
    for (Index j = 0; j < dr; ++j) {
      Mat<K> lr = Mat<K>(m.leftAct[i] * m.rightAct[j]);
      Mat<K> rl = Mat<K>(m.rightAct[j] * m.leftAct[i]);
      if (!matEq(lr, rl)) {
        return "left and right actions fail to commute on basis pair (" + std::to_string(i) +
               ", " + std::to_string(j) + ")";
      }
    }
  }
  return std::nullopt;
}

/// The algebra acting on itself by multiplication on both sides.
template <class K>
Bimodule<K> regularBimodule(const AlgebraPtr<K>& a) {
  Bimodule<K> m;
  m.left = a;
  m.right = a;
  m.dim = a->dim;
  for (Index i = 0; i < a->dim; ++i) {
    Vec<K> e = a->basisVec(i);
    m.leftAct.push_back(a->leftMult(e));
    m.rightAct.push_back(a->rightMult(e));
  }
  return m;
}

enum class Side { Left, Right, Both };

/// Checks that `f` commutes with the module structures named by `side`.
/// The acting algebras of src and dst must be the same objects on those sides.
template <class K>
std::optional<std::string> moduleMapViolation(const Bimodule<K>& src, const Bimodule<K>& dst,
                                              const Mat<K>& f, Side side) {
  if (f.rows() != dst.dim || f.cols() != src.dim) return "map has wrong shape";
  if (side != Side::Right) {
    if (src.left != dst.left) return "left acting algebras differ";
    for (Index i = 0; i < src.left->dim; ++i) {
      Mat<K> a = Mat<K>(f * src.leftAct[i]);
      Mat<K> b = Mat<K>(dst.leftAct[i] * f);
      if (!matEq(a, b)) return "map fails left linearity at basis " + std::to_string(i);
    }
  }
  if (side != Side::Left) {
    if (src.right != dst.right) return "right acting algebras differ";
    for (Index i = 0; i < src.right->dim; ++i) {
      Mat<K> a = Mat<K>(f * src.rightAct[i]);
      Mat<K> b = Mat<K>(dst.rightAct[i] * f);
      if (!matEq(a, b)) return "map fails right linearity at basis " + std::to_string(i);
    }
  }
  return std::nullopt;
}

template <class K>
Mat<K> requireModuleMap(const Bimodule<K>& src, const Bimodule<K>& dst, const Mat<K>& f,
                        Side side) {
  if (auto why = moduleMapViolation(src, dst, f, side)) throw Error(*why);
  return f;
}

/// Basis of the space of module maps src -> dst commuting with the named
/// side(s), as dst.dim x src.dim matrices.
template <class K>
std::vector<Mat<K>> homSpace(const Bimodule<K>& src, const Bimodule<K>& dst, Side side) {
  std::vector<MapConstraint<K>> cons;
  if (side != Side::Right) {
    if (src.left != dst.left) throw Error("left acting algebras differ");
    for (Index i = 0; i < src.left->dim; ++i) {
      Mat<K> sa = src.leftAct[i], da = dst.leftAct[i];
      cons.push_back({[sa, da](const Mat<K>& x) {
                        Mat<K> lhs = Mat<K>(x * sa);
                        Mat<K> rhs = Mat<K>(da * x);
                        return Mat<K>(lhs - rhs);
                      },
                      zeros<K>(dst.dim, src.dim)});
    }
  }
  if (side != Side::Left) {
    if (src.right != dst.right) throw Error("right acting algebras differ");
    for (Index i = 0; i < src.right->dim; ++i) {
      Mat<K> sa = src.rightAct[i], da = dst.rightAct[i];
      cons.push_back({[sa, da](const Mat<K>& x) {
                        Mat<K> lhs = Mat<K>(x * sa);
                        Mat<K> rhs = Mat<K>(da * x);
                        return Mat<K>(lhs - rhs);
                      },
                      zeros<K>(dst.dim, src.dim)});
    }
  }
  MapSolution<K> sol = solveLinearMap<K>(dst.dim, src.dim, cons);
  return sol.kernel;
}

/// Columns span {m : a.m = m.a for all a}. Requires both acting algebras to
/// coincide as objects.
template <class K>
Mat<K> centralizer(const Bimodule<K>& m) {
  if (m.left != m.right) throw Error("centralizer needs matching acting algebras");
  const Index n = m.left->dim;
  Mat<K> stacked = zeros<K>(n * m.dim, m.dim);
  for (Index i = 0; i < n; ++i) {
    Mat<K> diff = Mat<K>(m.leftAct[i] - m.rightAct[i]);
    stacked.block(i * m.dim, 0, m.dim, m.dim) = diff;
  }
  return kernelOf(stacked);
}

/// m tensor n over the shared middle algebra, with the pairing
/// (i, j) -> i * n.dim + j on the ambient space. Carries the quotient data so
/// callers can lift elements and push maps through.
template <class K>
struct TensorProduct {
  Bimodule<K> space;
  QuotientSpace<K> q;
  Index leftFactorDim = 0;
  Index rightFactorDim = 0;

  Vec<K> pure(const Vec<K>& m, const Vec<K>& n) const {
    Vec<K> t = Vec<K>(kron(Mat<K>(m), Mat<K>(n)));
    return Vec<K>(q.projection * t);
  }
};

template <class K>
TensorProduct<K> tensorOver(const Bimodule<K>& m, const Bimodule<K>& n) {
  if (m.right != n.left) throw Error("tensor factors do not share the middle algebra");
  const AlgebraPtr<K>& mid = m.right;
  const Index ambient = m.dim * n.dim;
  Mat<K> gens = zeros<K>(ambient, mid->dim * ambient);
  for (Index b = 0; b < mid->dim; ++b) {
    // (x.b) tensor y - x tensor (b.y), one generator per ambient basis vector
    Mat<K> diff =
        Mat<K>(kron(m.rightAct[b], identity<K>(n.dim)) - kron(identity<K>(m.dim), n.leftAct[b]));
    gens.block(0, b * ambient, ambient, ambient) = diff;
  }
  Subspace<K> rel = Subspace<K>::fromColumns(gens);
  TensorProduct<K> t;
  t.q = quotient<K>(ambient, rel);
  t.leftFactorDim = m.dim;
  t.rightFactorDim = n.dim;
  t.space.left = m.left;
  t.space.right = n.right;
  t.space.dim = t.q.dim();
  for (Index i = 0; i < m.left->dim; ++i) {
    Mat<K> lifted = kronBlockLeft(m.leftAct[i], n.dim, t.q.section);
    t.space.leftAct.push_back(Mat<K>(t.q.projection * lifted));
  }
  for (Index j = 0; j < n.right->dim; ++j) {
    Mat<K> lifted = kronBlockRight(m.dim, n.rightAct[j], t.q.section);
    t.space.rightAct.push_back(Mat<K>(t.q.projection * lifted));
  }
  return t;
}

/// Action collapse A tensor M -> M: column i*dim(M)+j holds e_i . m_j.
template <class K>
Mat<K> collapseLeft(const Bimodule<K>& m) {
  const Index da = m.left->dim;
  Mat<K> out = zeros<K>(m.dim, da * m.dim);
  for (Index i = 0; i < da; ++i) out.block(0, i * m.dim, m.dim, m.dim) = m.leftAct[i];
  return out;
}

/// Action collapse M tensor A -> M: column j*dim(A)+i holds m_j . e_i.
template <class K>
Mat<K> collapseRight(const Bimodule<K>& m) {
  const Index da = m.right->dim;
  Mat<K> out = zeros<K>(m.dim, m.dim * da);
  for (Index j = 0; j < m.dim; ++j)
    for (Index i = 0; i < da; ++i) out.col(j * da + i) = m.rightAct[i].col(j);
  return out;
}

/// Dual-basis certificate: the generators are the module basis vectors and
/// functionals[k] is a module map M -> A with sum_k m_k . f_k(m) = m (right
/// side) or sum_k f_k(m) . m_k = m (left side).
template <class K>
struct FgpCertificate {
  std::vector<Mat<K>> functionals;
};

/// Decides finite generation + projectivity of the one-sided module named by
/// `side` through a dual-basis search over the hom space.
template <class K>
std::optional<FgpCertificate<K>> isFgp(const Bimodule<K>& m, Side side) {
  if (side == Side::Both) throw Error("fgp test takes one side");
  const AlgebraPtr<K>& alg = side == Side::Right ? m.right : m.left;
  Bimodule<K> reg = regularBimodule(alg);
  std::vector<Mat<K>> homs = homSpace(m, reg, side);
  if (m.dim == 0) return FgpCertificate<K>{};
  if (homs.empty()) return std::nullopt;
  const Index h = static_cast<Index>(homs.size());
  // hatK[k]: A -> M sends a to m_k . a (right) or a . m_k (left).
  std::vector<Mat<K>> hat;
  for (Index k = 0; k < m.dim; ++k) {
    Mat<K> hk = zeros<K>(m.dim, alg->dim);
    for (Index i = 0; i < alg->dim; ++i) {
      const Mat<K>& act = side == Side::Right ? m.rightAct[i] : m.leftAct[i];
      hk.col(i) = act.col(k);
    }
    hat.push_back(hk);
  }
  Mat<K> system = zeros<K>(m.dim * m.dim, m.dim * h);
  for (Index k = 0; k < m.dim; ++k) {
    for (Index t = 0; t < h; ++t) {
      Mat<K> prod = Mat<K>(hat[k] * homs[t]);
      system.col(k * h + t) = vecOf(prod);
    }
  }
  AffineSolution<K> sol = solveAffine(system, vecOf(identity<K>(m.dim)));
  if (!sol.particular.has_value()) return std::nullopt;
  FgpCertificate<K> cert;
  Mat<K> check = zeros<K>(m.dim, m.dim);
  for (Index k = 0; k < m.dim; ++k) {
    Mat<K> fk = zeros<K>(alg->dim, m.dim);
    for (Index t = 0; t < h; ++t) fk += (*sol.particular)(k * h + t) * homs[t];
    check += Mat<K>(hat[k] * fk);
    cert.functionals.push_back(fk);
  }
  if (!matEq(check, identity<K>(m.dim))) throw Error("dual basis reconstruction failed");
  return cert;
}

template <class K>
struct ReflexivityInfo {
  bool reflexive = false;
  Index dualDim = 0;
  Index doubleDualDim = 0;
};

/// Tests whether evaluation into the double one-sided dual is bijective.
/// The dual of a right module is materialized as a left module over the same
/// algebra (and mirrored for left modules), with module structure expressed
/// in coordinates over the hom-space basis.
template <class K>
ReflexivityInfo<K> isReflexive(const Bimodule<K>& m, Side side) {
  if (side == Side::Both) throw Error("reflexivity test takes one side");
  const AlgebraPtr<K>& alg = side == Side::Right ? m.right : m.left;
  Bimodule<K> reg = regularBimodule(alg);
  std::vector<Mat<K>> dual = homSpace(m, reg, side);
  ReflexivityInfo<K> info;
  info.dualDim = static_cast<Index>(dual.size());
  const Index h = info.dualDim;
  if (h == 0) {
    info.doubleDualDim = 0;
    info.reflexive = m.dim == 0;
    return info;
  }
  Mat<K> dualVecs = zeros<K>(alg->dim * m.dim, h);
  for (Index t = 0; t < h; ++t) dualVecs.col(t) = vecOf(dual[t]);
  // The dual carries the opposite-sided action: (a.f)(x) = a.f(x) for right
  // modules, (f.a)(x) = f(x).a for left modules. Coordinates stay in the
  // hom-space basis so that the evaluation matrices below line up with them.
  AlgebraPtr<K> ground = groundPtr<K>();
  Bimodule<K> dmod;
  dmod.dim = h;
  std::vector<Mat<K>> coordAct;
  for (Index i = 0; i < alg->dim; ++i) {
    Mat<K> act = zeros<K>(h, h);
    for (Index t = 0; t < h; ++t) {
      Mat<K> moved = side == Side::Right ? Mat<K>(alg->leftMult(alg->basisVec(i)) * dual[t])
                                         : Mat<K>(alg->rightMult(alg->basisVec(i)) * dual[t]);
      act.col(t) = columnCoordinates(dualVecs, Vec<K>(vecOf(moved)));
    }
    coordAct.push_back(act);
  }
  if (side == Side::Right) {
    dmod.left = alg;
    dmod.right = ground;
    dmod.leftAct = coordAct;
    dmod.rightAct.push_back(identity<K>(h));
  } else {
    dmod.left = ground;
    dmod.right = alg;
    dmod.leftAct.push_back(identity<K>(h));
    dmod.rightAct = coordAct;
  }
  Side oppSide = side == Side::Right ? Side::Left : Side::Right;
  std::vector<Mat<K>> doubleDual = homSpace(dmod, reg, oppSide);
  info.doubleDualDim = static_cast<Index>(doubleDual.size());
  // ev(m) maps the dual basis element f_t to f_t(m).
  Mat<K> evVecs = zeros<K>(alg->dim * h, m.dim);
  for (Index j = 0; j < m.dim; ++j) {
    Mat<K> ej = zeros<K>(alg->dim, h);
    for (Index t = 0; t < h; ++t) ej.col(t) = dual[t].col(j);
    evVecs.col(j) = vecOf(ej);
  }
  if (info.doubleDualDim != m.dim) {
    info.reflexive = false;
    return info;
  }
  Mat<K> ddVecs = zeros<K>(alg->dim * h, info.doubleDualDim);
  for (Index t = 0; t < info.doubleDualDim; ++t) ddVecs.col(t) = vecOf(doubleDual[t]);
  Subspace<K> ddSpan = Subspace<K>::fromColumns(ddVecs);
  Subspace<K> evSpan = Subspace<K>::fromColumns(evVecs);
  info.reflexive = rank(evVecs) == m.dim && evSpan == ddSpan;
  return info;
}

}  // namespace coringlab
