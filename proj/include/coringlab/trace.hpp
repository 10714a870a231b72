#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

namespace detail {

template <class K>
void appendTerm(std::string& out, const K& coeff, const std::string& symbol) {
  std::string c = FieldTraits<K>::str(coeff);
  bool negative = !c.empty() && c[0] == '-';
  if (negative) c = c.substr(1);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (c != "1") {
    out += c;
    out += ' ';
  }
  out += symbol;
}

}  // namespace detail

/// A linear combination over a named basis: "c0 + 3/2 c2", or "0".
template <class K>
std::string comboString(std::string_view prefix, const Vec<K>& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) == K(0)) continue;
    detail::appendTerm(out, v(i), std::string(prefix) + std::to_string(i));
  }
  return out.empty() ? "0" : out;
}

/// A sum of pure tensors read off mixed-radix coordinates, last factor
/// fastest: "c0 (x) c1 + 2 c1 (x) c0", or "0". dims lists the factor
/// dimensions and prefixes their basis names.
template <class K>
std::string tensorString(const std::vector<std::string>& prefixes, const std::vector<Index>& dims,
                         const Vec<K>& ambient) {
  if (prefixes.size() != dims.size()) throw Error("tensorString: prefix count mismatch");
  Index total = 1;
  for (Index d : dims) total *= d;
  if (ambient.size() != total) throw Error("tensorString: coordinate count mismatch");
  std::string out;
  std::vector<Index> idx(dims.size(), 0);
  for (Index i = 0; i < ambient.size(); ++i) {
    if (ambient(i) != K(0)) {
      Index rest = i;
      for (std::size_t f = dims.size(); f-- > 0;) {
        idx[f] = rest % dims[f];
        rest /= dims[f];
      }
      std::string symbol;
      for (std::size_t f = 0; f < dims.size(); ++f) {
        if (f) symbol += " (x) ";
        symbol += prefixes[f] + std::to_string(idx[f]);
      }
      detail::appendTerm(out, ambient(i), symbol);
    }
  }
  return out.empty() ? "0" : out;
}

/// The coproduct of every basis element written as a sum of pure tensors,
/// one line each. Classes are lifted through the canonical section, so the
/// output is a fixed representative.
template <class K>
std::vector<std::string> coproductLines(const Coring<K>& c) {
  const Index dimC = c.carrier.dim;
  Mat<K> lifted = c.liftedCoproduct();
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(dimC));
  for (Index i = 0; i < dimC; ++i) {
    out.push_back("Delta c" + std::to_string(i) + " = " +
                  tensorString<K>({"c", "c"}, {dimC, dimC}, Vec<K>(lifted.col(i))));
  }
  return out;
}

/// Both reassociations of the doubled coproduct on every basis element where
/// they differ, written over plain threefold tensors. Empty exactly when the
/// coproduct is coassociative.
template <class K>
std::vector<std::string> coassociativityTrace(const Coring<K>& c) {
  const Index dimC = c.carrier.dim;
  TensorProduct<K> triple = tensorOver(c.square.space, c.carrier);
  Mat<K> lifted = c.liftedCoproduct();
  Mat<K> leftward = Mat<K>(triple.q.projection * kronBlockLeft(c.coproduct, dimC, lifted));
  Mat<K> inner = kronBlockRight(dimC, lifted, lifted);
  Mat<K> rightward =
      Mat<K>(triple.q.projection * kronBlockLeft(c.square.q.projection, dimC, inner));
  // Lifts a triple class all the way to coordinates over plain threefold
  // tensors: first the outer section, then the left-factor section per slot.
  Mat<K> expand = kronBlockLeft(c.square.q.section, dimC, Mat<K>(triple.q.section));
  std::vector<std::string> out;
  const std::vector<std::string> pre = {"c", "c", "c"};
  const std::vector<Index> dims = {dimC, dimC, dimC};
  for (Index i = 0; i < dimC; ++i) {
    if (matEq(Mat<K>(leftward.col(i)), Mat<K>(rightward.col(i)))) continue;
    std::string name = "c" + std::to_string(i);
    out.push_back("coassociativity fails on " + name);
    out.push_back("  (Delta (x) id) Delta " + name + " = " +
                  tensorString<K>(pre, dims, Vec<K>(expand * leftward.col(i))));
    out.push_back("  (id (x) Delta) Delta " + name + " = " +
                  tensorString<K>(pre, dims, Vec<K>(expand * rightward.col(i))));
  }
  return out;
}

/// Both counit laws on every basis element where one fails. Empty when the
/// laws hold or no counit is present.
template <class K>
std::vector<std::string> counitTrace(const Coring<K>& c) {
  std::vector<std::string> out;
  if (!c.counit) return out;
  const Index dimC = c.carrier.dim;
  if (c.counit->rows() != c.algebra()->dim || c.counit->cols() != dimC) return out;
  Mat<K> lifted = c.liftedCoproduct();
  Mat<K> leftLaw = Mat<K>(collapseLeft(c.carrier) * kronBlockLeft(*c.counit, dimC, lifted));
  Mat<K> rightLaw = Mat<K>(collapseRight(c.carrier) * kronBlockRight(dimC, *c.counit, lifted));
  Mat<K> id = identity<K>(dimC);
  for (Index i = 0; i < dimC; ++i) {
    std::string name = "c" + std::to_string(i);
    if (!matEq(Mat<K>(leftLaw.col(i)), Mat<K>(id.col(i)))) {
      out.push_back("(eps (x) id) Delta " + name + " = " +
                    comboString<K>("c", Vec<K>(leftLaw.col(i))) + ", want " + name);
    }
    if (!matEq(Mat<K>(rightLaw.col(i)), Mat<K>(id.col(i)))) {
      out.push_back("(id (x) eps) Delta " + name + " = " +
                    comboString<K>("c", Vec<K>(rightLaw.col(i))) + ", want " + name);
    }
  }
  return out;
}

/// Linearity of the coproduct over both actions, on every failing basis
/// pair. Empty when the coproduct is a two-sided module map.
template <class K>
std::vector<std::string> coproductLinearityTrace(const Coring<K>& c) {
  const Index dimC = c.carrier.dim;
  const Index da = c.algebra()->dim;
  auto cls = [&](const Vec<K>& q) {
    return tensorString<K>({"c", "c"}, {dimC, dimC}, Vec<K>(c.square.q.section * q));
  };
  std::vector<std::string> out;
  for (Index j = 0; j < da; ++j) {
    Mat<K> viaLeft = Mat<K>(c.coproduct * c.carrier.leftAct[j]);
    Mat<K> leftVia = Mat<K>(c.square.space.leftAct[j] * c.coproduct);
    Mat<K> viaRight = Mat<K>(c.coproduct * c.carrier.rightAct[j]);
    Mat<K> rightVia = Mat<K>(c.square.space.rightAct[j] * c.coproduct);
    for (Index i = 0; i < dimC; ++i) {
      std::string aj = "a" + std::to_string(j);
      std::string ci = "c" + std::to_string(i);
      if (!matEq(Mat<K>(viaLeft.col(i)), Mat<K>(leftVia.col(i)))) {
        out.push_back("Delta(" + aj + " " + ci + ") = " + cls(Vec<K>(viaLeft.col(i))) + " but " +
                      aj + " Delta(" + ci + ") = " + cls(Vec<K>(leftVia.col(i))));
      }
      if (!matEq(Mat<K>(viaRight.col(i)), Mat<K>(rightVia.col(i)))) {
        out.push_back("Delta(" + ci + " " + aj + ") = " + cls(Vec<K>(viaRight.col(i))) + " but " +
                      "Delta(" + ci + ") " + aj + " = " + cls(Vec<K>(rightVia.col(i))));
      }
    }
  }
  return out;
}

/// The two grouplike laws on g, shown only when violated: the coproduct must
/// double g and the counit must send it to one.
template <class K>
std::vector<std::string> grouplikeTrace(const Coring<K>& c, const Vec<K>& g) {
  std::vector<std::string> out;
  if (!c.counit || g.size() != c.carrier.dim) return out;
  const Index dimC = c.carrier.dim;
  auto cls = [&](const Vec<K>& q) {
    return tensorString<K>({"c", "c"}, {dimC, dimC}, Vec<K>(c.square.q.section * q));
  };
  Vec<K> viaCoproduct = Vec<K>(c.coproduct * g);
  Vec<K> doubled = c.square.pure(g, g);
  if (!matEq(Mat<K>(viaCoproduct), Mat<K>(doubled))) {
    out.push_back("Delta g = " + cls(viaCoproduct) + " but g (x) g = " + cls(doubled));
  }
  Vec<K> one = Vec<K>(*c.counit * g);
  if (!matEq(Mat<K>(one), Mat<K>(c.algebra()->unit))) {
    out.push_back("eps g = " + comboString<K>("a", one) + " but 1 = " +
                  comboString<K>("a", c.algebra()->unit));
  }
  return out;
}

/// Unit and associativity defects on basis elements and triples, at most
/// `cap` associativity lines so large algebras stay readable.
template <class K>
std::vector<std::string> algebraTrace(const Algebra<K>& a, Index cap = 8) {
  std::vector<std::string> out;
  const Index n = a.dim;
  for (Index i = 0; i < n; ++i) {
    Vec<K> e = a.basisVec(i);
    Vec<K> le = a.product(a.unit, e);
    Vec<K> re = a.product(e, a.unit);
    std::string name = "a" + std::to_string(i);
    if (!matEq(Mat<K>(le), Mat<K>(e))) {
      out.push_back("1 " + name + " = " + comboString<K>("a", le) + ", want " + name);
    }
    if (!matEq(Mat<K>(re), Mat<K>(e))) {
      out.push_back(name + " 1 = " + comboString<K>("a", re) + ", want " + name);
    }
  }
  Index shown = 0;
  Index skipped = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        Vec<K> ij = Vec<K>(a.mult.col(i * n + j));
        Vec<K> jk = Vec<K>(a.mult.col(j * n + k));
        Vec<K> lhs = a.product(ij, a.basisVec(k));
        Vec<K> rhs = a.product(a.basisVec(i), jk);
        if (matEq(Mat<K>(lhs), Mat<K>(rhs))) continue;
        if (shown == cap) {
          ++skipped;
          continue;
        }
        ++shown;
        std::string triple = "a" + std::to_string(i) + " a" + std::to_string(j) + " a" +
                             std::to_string(k);
        out.push_back("(" + triple + ") associates to " + comboString<K>("a", lhs) +
                      " on the left but " + comboString<K>("a", rhs) + " on the right");
      }
    }
  }
  if (skipped > 0) {
    out.push_back("(" + std::to_string(skipped) + " more associativity defects suppressed)");
  }
  return out;
}

/// Every failing coring identity in one list: linearity, coassociativity,
/// counit laws. Empty exactly when checkCoring is satisfied apart from
/// carrier and shape defects, which carry no identity to print.
template <class K>
std::vector<std::string> coringTrace(const Coring<K>& c) {
  std::vector<std::string> out;
  if (checkBimodule(c.carrier) || c.carrier.left != c.carrier.right) return out;
  const Index dimC = c.carrier.dim;
  if (c.coproduct.rows() != c.square.space.dim || c.coproduct.cols() != dimC) return out;
  for (auto& line : coproductLinearityTrace(c)) out.push_back(std::move(line));
  for (auto& line : coassociativityTrace(c)) out.push_back(std::move(line));
  if (c.counit && (c.counit->rows() != c.algebra()->dim || c.counit->cols() != dimC)) return out;
  for (auto& line : counitTrace(c)) out.push_back(std::move(line));
  return out;
}

}  // namespace coringlab
