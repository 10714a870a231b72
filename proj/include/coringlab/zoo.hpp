#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/duality.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/presentation.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/scalar.hpp"

namespace coringlab {

/// Which certificates exist for a fixture. The extension entries stay empty
/// on fixtures that are not built from a ring extension.
struct PropertyVector {
  std::optional<bool> split;
  std::optional<bool> separable;
  bool cosplit = false;
  bool cointegral = false;
  bool fgpLeft = false;
  bool fgpRight = false;
  bool biseparable = false;
  FrobeniusStatus frobenius = FrobeniusStatus::Inapplicable;

  friend bool operator==(const PropertyVector&, const PropertyVector&) = default;
};

/// One-line rendering with a fixed field order, used verbatim in logs, so the
/// wording is part of the output contract.
inline std::string describeProperties(const PropertyVector& p) {
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  auto opt = [&mark](const std::optional<bool>& b) { return b ? mark(*b) : "n/a"; };
  const char* frob = p.frobenius == FrobeniusStatus::Frobenius      ? "yes"
                     : p.frobenius == FrobeniusStatus::NotFrobenius ? "no"
                                                                    : "inapplicable";
  std::string out;
  out += "split=";
  out += opt(p.split);
  out += " separable=";
  out += opt(p.separable);
  out += " cosplit=";
  out += mark(p.cosplit);
  out += " cointegral=";
  out += mark(p.cointegral);
  out += " fgp-left=";
  out += mark(p.fgpLeft);
  out += " fgp-right=";
  out += mark(p.fgpRight);
  out += " biseparable=";
  out += mark(p.biseparable);
  out += " frobenius=";
  out += frob;
  return out;
}

/// Named example with everything the command surface needs: the coring, the
/// extension it came from when it came from one, a canonical grouplike when
/// one is known, and the certificate profile the solvers are expected to
/// reproduce.
template <class K>
struct ZooFixture {
  std::string name;
  std::string summary;
  std::optional<RingExtension<K>> extension;
  Coring<K> coring;
  std::optional<Vec<K>> grouplike;
  PropertyVector expected;
};

/// Runs every decision procedure against the pair and reports what held.
template <class K>
PropertyVector measureProperties(const std::optional<RingExtension<K>>& ext, const Coring<K>& c) {
  PropertyVector p;
  if (ext) {
    p.split = findExpectation(*ext).has_value();
    p.separable = findSeparabilityElement(*ext).has_value();
  }
  BiseparabilityReport<K> bis = biseparability(c);
  p.cosplit = bis.cosplitting.has_value();
  p.cointegral = bis.cointegral.has_value();
  p.fgpLeft = bis.fgpLeft.has_value();
  p.fgpRight = bis.fgpRight.has_value();
  p.biseparable = bis.biseparable();
  p.frobenius = coringFrobenius(c).status;
  return p;
}

template <class K>
PropertyVector measureProperties(const ZooFixture<K>& f) {
  return measureProperties(f.extension, f.coring);
}

template <class K>
const ZooFixture<K>* findFixture(const std::vector<ZooFixture<K>>& zoo, std::string_view name) {
  for (const ZooFixture<K>& f : zoo) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

namespace detail {

/// Canonical-coring fixture of an extension; the grouplike is 1 tensor 1.
template <class K>
ZooFixture<K> extensionFixture(std::string name, std::string summary, RingExtension<K> ext,
                               PropertyVector expected) {
  SweedlerCoring<K> s = sweedlerCoring(ext);
  ZooFixture<K> f;
  f.name = std::move(name);
  f.summary = std::move(summary);
  f.grouplike = s.tensor.pure(ext.total->unit, ext.total->unit);
  f.coring = std::move(s.coring);
  f.extension = std::move(ext);
  f.expected = expected;
  return f;
}

template <class K>
RingExtension<K> unitalEmbedding(AlgebraPtr<K> base, AlgebraPtr<K> total, Mat<K> iota,
                                 std::optional<Mat<K>> expectation) {
  RingExtension<K> ext;
  ext.base = std::move(base);
  ext.total = std::move(total);
  ext.iota = std::move(iota);
  ext.expectation = std::move(expectation);
  if (auto why = checkExtension(ext)) throw Error("zoo extension: " + *why);
  return ext;
}

}  // namespace detail

/// The stock fixtures. Expected entries are facts about the objects, written
/// down independently of the solvers; the tests insist the two agree.
template <class K>
std::vector<ZooFixture<K>> standardZoo() {
  std::vector<ZooFixture<K>> zoo;
  PropertyVector allGood;
  allGood.split = true;
  allGood.separable = true;
  allGood.cosplit = true;
  allGood.cointegral = true;
  allGood.fgpLeft = true;
  allGood.fgpRight = true;
  allGood.biseparable = true;
  allGood.frobenius = FrobeniusStatus::Frobenius;

  {
    AlgebraPtr<K> ground = groundPtr<K>();
    RingExtension<K> ext = detail::unitalEmbedding<K>(ground, ground, identity<K>(1),
                                                      identity<K>(1));
    zoo.push_back(detail::extensionFixture<K>(
        "TRIV", "the ground field sitting inside itself, with its canonical coring",
        std::move(ext), allGood));
  }

  {
    AlgebraPtr<K> diag = std::make_shared<const Algebra<K>>(
        directProductAlgebra(groundAlgebra<K>(), groundAlgebra<K>()));
    AlgebraPtr<K> m2 = std::make_shared<const Algebra<K>>(matrixAlgebra<K>(2));
    Mat<K> iota = zeros<K>(4, 2);
    iota(0, 0) = K(1);  // first diagonal slot to the (0,0) cell
    iota(3, 1) = K(1);  // second diagonal slot to the (1,1) cell
    Mat<K> expectation = zeros<K>(2, 4);
    expectation(0, 0) = K(1);
    expectation(1, 3) = K(1);
    RingExtension<K> ext =
        detail::unitalEmbedding<K>(diag, m2, std::move(iota), std::move(expectation));
    zoo.push_back(detail::extensionFixture<K>(
        "DIAG2",
        "diagonal matrices inside 2 x 2 matrices with the diagonal expectation, canonical coring",
        std::move(ext), allGood));
  }

  {
    AlgebraPtr<K> ground = groundPtr<K>();
    AlgebraPtr<K> gauss = std::make_shared<const Algebra<K>>(gaussAlgebra<K>());
    Mat<K> iota = zeros<K>(2, 1);
    iota(0, 0) = K(1);
    Mat<K> expectation = zeros<K>(1, 2);
    expectation(0, 0) = K(1);
    RingExtension<K> ext =
        detail::unitalEmbedding<K>(ground, gauss, std::move(iota), std::move(expectation));
    zoo.push_back(detail::extensionFixture<K>(
        "GAUSS", "the ground extended by a square root of minus one, canonical coring",
        std::move(ext), allGood));
  }

  {
    AlgebraPtr<K> ground = groundPtr<K>();
    AlgebraPtr<K> c2 = std::make_shared<const Algebra<K>>(groupAlgebraC2<K>());
    Mat<K> iota = zeros<K>(2, 1);
    iota(0, 0) = K(1);
    Mat<K> expectation = zeros<K>(1, 2);  // identity-coefficient functional
    expectation(0, 0) = K(1);
    RingExtension<K> ext =
        detail::unitalEmbedding<K>(ground, c2, std::move(iota), std::move(expectation));
    zoo.push_back(detail::extensionFixture<K>(
        "C2GROUP",
        "group algebra of the two-element group with the identity-coefficient expectation, "
        "canonical coring",
        std::move(ext), allGood));
  }

  {
    // First factor: dual numbers into triangular matrices, x to the corner
    // cell. Separable but never split. Second factor: the ground inside the
    // dual numbers. Split but never separable. The product inherits neither
    // certificate, so the canonical coring has no cosplitting and no
    // cointegral.
    AlgebraPtr<K> base = std::make_shared<const Algebra<K>>(
        directProductAlgebra(truncatedPolynomialAlgebra<K>(2), groundAlgebra<K>()));
    AlgebraPtr<K> total = std::make_shared<const Algebra<K>>(
        directProductAlgebra(upperTriangularAlgebra<K>(2), truncatedPolynomialAlgebra<K>(2)));
    Mat<K> iota = zeros<K>(5, 3);
    iota(0, 0) = K(1);  // 1 of the first factor to the full diagonal
    iota(2, 0) = K(1);
    iota(1, 1) = K(1);  // x of the first factor to the corner cell
    iota(3, 2) = K(1);  // 1 of the second factor to the dual-number unit
    RingExtension<K> ext =
        detail::unitalEmbedding<K>(base, total, std::move(iota), std::nullopt);
    PropertyVector vec;
    vec.split = false;
    vec.separable = false;
    vec.frobenius = FrobeniusStatus::Inapplicable;
    zoo.push_back(detail::extensionFixture<K>(
        "NONSPLIT",
        "product of a separable-but-non-split corner embedding and a split-but-non-separable "
        "nilpotent extension, canonical coring",
        std::move(ext), vec));
  }

  {
    AlgebraPtr<K> gauss = std::make_shared<const Algebra<K>>(gaussAlgebra<K>());
    CoringSum<K> sum = directSumCoring(trivialCoring(gauss), trivialCoring(gauss));
    ZooFixture<K> f;
    f.name = "DIRSUM";
    f.summary = "two copies of the trivial coring glued as a direct sum";
    f.coring = std::move(sum.coring);
    f.grouplike = Vec<K>(sum.intoFirst * gauss->unit);
    PropertyVector vec;
    vec.cosplit = true;
    vec.cointegral = true;
    vec.fgpLeft = true;
    vec.fgpRight = true;
    vec.biseparable = true;
    vec.frobenius = FrobeniusStatus::Frobenius;
    f.expected = vec;
    zoo.push_back(std::move(f));
  }

  {
    AlgebraPtr<K> ground = groundPtr<K>();
    RingExtension<K> ext = detail::unitalEmbedding<K>(
        ground, std::make_shared<const Algebra<K>>(truncatedPolynomialAlgebra<K>(2)),
        [] {
          Mat<K> m = zeros<K>(2, 1);
          m(0, 0) = K(1);
          return m;
        }(),
        [] {
          Mat<K> m = zeros<K>(1, 2);
          m(0, 0) = K(1);
          return m;
        }());
    PropertyVector vec;
    vec.split = true;
    vec.separable = false;
    vec.cosplit = false;
    vec.cointegral = true;
    vec.fgpLeft = true;
    vec.fgpRight = true;
    vec.biseparable = false;
    vec.frobenius = FrobeniusStatus::Frobenius;
    zoo.push_back(detail::extensionFixture<K>(
        "NILPOT", "dual numbers over the ground with the constant-term expectation, "
        "canonical coring",
        std::move(ext), vec));
  }

  {
    ZooFixture<K> f;
    f.name = "TRIANG";
    f.summary = "dual coalgebra of the 2 x 2 triangular matrices, over the ground";
    f.coring = transposeCoring(upperTriangularAlgebra<K>(2));
    Vec<K> g = Vec<K>::Constant(3, K(0));
    g(0) = K(1);  // the character reading off the top-left entry
    f.grouplike = g;
    PropertyVector vec;
    vec.cosplit = true;
    vec.cointegral = false;
    vec.fgpLeft = true;
    vec.fgpRight = true;
    vec.biseparable = false;
    vec.frobenius = FrobeniusStatus::NotFrobenius;
    f.expected = vec;
    zoo.push_back(std::move(f));
  }

  return zoo;
}

/// The fixture as a document under fixed names: base algebra B, total or
/// carrier algebra A, carrier bimodule CC, extension BA, coring C, and the
/// grouplike g when one is recorded.
template <class K>
Presentation presentFixture(const ZooFixture<K>& f) {
  Presentation pres = emptyPresentation<K>();
  if (f.extension) {
    appendAlgebra(pres, "B", *f.extension->base);
    appendAlgebra(pres, "A", *f.extension->total);
    appendExtension(pres, "BA", "B", "A", *f.extension);
  } else {
    appendAlgebra(pres, "A", *f.coring.carrier.left);
  }
  appendBimodule(pres, "CC", "A", "A", f.coring.carrier);
  appendCoring(pres, "C", "CC", f.coring);
  if (f.grouplike) appendElement(pres, "g", *f.grouplike);
  return pres;
}

}  // namespace coringlab
