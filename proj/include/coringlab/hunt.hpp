#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coringlab/algebra.hpp"
#include "coringlab/bimodule.hpp"
#include "coringlab/coring.hpp"
#include "coringlab/duality.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/linalg.hpp"
#include "coringlab/presentation.hpp"
#include "coringlab/scalar.hpp"
#include "coringlab/zoo.hpp"

namespace coringlab {

struct HuntConfig {
  std::uint64_t seed = 0;
  Index budget = 0;
  Index maxDimA = 4;
  Index maxDimC = 8;
};

/// One trial of the search: where its coring came from, whether it survived
/// the biseparability filter, and its Frobenius status when it did.
struct HuntTrial {
  Index index = 0;
  std::string kind;    // "zoo" | "conjugate" | "twist"
  std::string source;  // fixture the trial grew from
  bool built = false;
  std::optional<bool> biseparable;
  std::optional<FrobeniusStatus> frobenius;
  bool counterexample = false;
  std::string audit;  // verdict of the exact re-check, counterexamples only
};

struct HuntLog {
  HuntConfig config;
  std::string field;
  std::vector<HuntTrial> trials;  // ordered by trial index
  Index generated = 0;
  Index built = 0;
  Index biseparableCount = 0;
  Index frobeniusCount = 0;
  Index counterexamples = 0;
  std::vector<std::string> dumps;  // presentation text per counterexample
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

template <class K>
Vec<K> randomVec(std::mt19937_64& rng, Index n) {
  Vec<K> v = Vec<K>::Constant(n, K(0));
  for (Index i = 0; i < n; ++i) v(i) = FieldTraits<K>::randomDraw(rng);
  return v;
}

template <class K>
std::optional<Mat<K>> inverseOf(const Mat<K>& g) {
  if (g.rows() != g.cols() || rank(g) != g.rows()) return std::nullopt;
  Mat<K> inv = zeros<K>(g.rows(), g.cols());
  Mat<K> id = identity<K>(g.rows());
  for (Index j = 0; j < g.cols(); ++j) {
    AffineSolution<K> sol = solveAffine(g, Vec<K>(id.col(j)));
    if (!sol.particular) return std::nullopt;
    inv.col(j) = *sol.particular;
  }
  return inv;
}

/// A random unit of the algebra with its inverse, or nothing after `tries`
/// singular draws.
template <class K>
std::optional<std::pair<Vec<K>, Vec<K>>> randomUnit(std::mt19937_64& rng, const Algebra<K>& a,
                                                    int tries) {
  for (int t = 0; t < tries; ++t) {
    Vec<K> u = randomVec<K>(rng, a.dim);
    Mat<K> lm = a.leftMult(u);
    if (rank(lm) != a.dim) continue;
    AffineSolution<K> sol = solveAffine(lm, a.unit);
    if (!sol.particular) continue;
    return std::make_pair(std::move(u), std::move(*sol.particular));
  }
  return std::nullopt;
}

/// The extension with its embedding conjugated by a random unit of the total
/// algebra. Produces an isomorphic extension with a different presentation.
template <class K>
std::optional<RingExtension<K>> conjugateExtension(std::mt19937_64& rng,
                                                   const RingExtension<K>& ext) {
  auto unit = randomUnit(rng, *ext.total, 8);
  if (!unit) return std::nullopt;
  Mat<K> conj = Mat<K>(ext.total->leftMult(unit->first) * ext.total->rightMult(unit->second));
  Mat<K> back = Mat<K>(ext.total->leftMult(unit->second) * ext.total->rightMult(unit->first));
  RingExtension<K> out;
  out.base = ext.base;
  out.total = ext.total;
  out.iota = Mat<K>(conj * ext.iota);
  if (ext.expectation) out.expectation = Mat<K>(*ext.expectation * back);
  if (checkExtension(out)) return std::nullopt;
  return out;
}

/// The coring transported along a random invertible bimodule endomorphism g
/// of its carrier: the coproduct becomes (g tensor g) Delta g^-1 and the
/// counit eps g^-1. The carrier and its tensor square are unchanged.
template <class K>
std::optional<Coring<K>> twistCoring(std::mt19937_64& rng, const Coring<K>& c) {
  std::vector<Mat<K>> endos = homSpace(c.carrier, c.carrier, Side::Both);
  if (endos.empty()) return std::nullopt;
  for (int t = 0; t < 8; ++t) {
    Mat<K> g = zeros<K>(c.carrier.dim, c.carrier.dim);
    for (const Mat<K>& e : endos) g += FieldTraits<K>::randomDraw(rng) * e;
    std::optional<Mat<K>> ginv = inverseOf(g);
    if (!ginv) continue;
    Mat<K> gg = Mat<K>(c.square.q.projection * kron(g, g) * c.square.q.section);
    Coring<K> out = c;
    out.coproduct = Mat<K>(gg * c.coproduct * *ginv);
    if (c.counit) out.counit = Mat<K>(*c.counit * *ginv);
    if (checkCoring(out)) continue;
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

/// The entries of a prime-field document lifted back to small fractions, or
/// nothing when any entry has no reconstruction. The field header becomes q.
inline std::optional<Presentation> reconstructOverRationals(const Presentation& pres) {
  if (!pres.field.primeField || pres.field.modulus == 0) return std::nullopt;
  const std::uint64_t p = pres.field.modulus;
  bool ok = true;
  auto lift = [&](Rational& r) {
    if (!ok) return;
    if (r.denominator() != 1 || r.numerator() < 0 || r.numerator() >= Int(p)) {
      ok = false;
      return;
    }
    std::optional<Rational> rec = rationalReconstruct(r.numerator().convert_to<std::uint64_t>(), p);
    if (!rec) {
      ok = false;
      return;
    }
    r = *rec;
  };
  auto liftAll = [&](std::vector<Rational>& nums) {
    for (Rational& r : nums) lift(r);
  };
  auto liftRows = [&](std::vector<std::vector<Rational>>& rows) {
    for (auto& row : rows) liftAll(row);
  };
  Presentation out = pres;
  out.field = FieldSpec{false, 0};
  for (PresAlgebra& a : out.algebras) {
    liftAll(a.unit);
    liftRows(a.product);
  }
  for (PresMatrix& m : out.matrices) liftRows(m.entries);
  for (PresBimodule& b : out.bimodules) {
    for (auto& act : b.leftActs) liftRows(act.second);
    for (auto& act : b.rightActs) liftRows(act.second);
  }
  for (PresExtension& e : out.extensions) {
    liftRows(e.iota);
    if (e.expectation) liftRows(*e.expectation);
  }
  for (PresCoring& c : out.corings) {
    liftRows(c.coproduct);
    if (c.counit) liftRows(*c.counit);
  }
  for (PresElement& e : out.elements) liftAll(e.values);
  if (!ok) return std::nullopt;
  return out;
}

/// The coring as a document under the names the audit expects.
template <class K>
Presentation presentCoring(const Coring<K>& c) {
  Presentation pres = emptyPresentation<K>();
  appendAlgebra(pres, "A", *c.algebra());
  appendBimodule(pres, "CC", "A", "A", c.carrier);
  appendCoring(pres, "C", "CC", c);
  return pres;
}

/// Exact re-check of a prime-field hit: lift every entry to rationals,
/// rebuild, and reclassify. Only a hit that survives over the rationals is
/// confirmed; anything else is an artifact of the finite field.
inline std::string auditCounterexample(const Presentation& fpPresentation) {
  std::optional<Presentation> lifted = reconstructOverRationals(fpPresentation);
  if (!lifted) return "field-specific artifact, unresolved";
  InstantiationResult<Rational> inst = instantiate<Rational>(*lifted);
  if (!inst.model) return "field-specific artifact, unresolved";
  auto it = inst.model->corings.find("C");
  if (it == inst.model->corings.end()) return "field-specific artifact, unresolved";
  BiseparabilityReport<Rational> bis = biseparability(it->second);
  if (!bis.biseparable()) return "field-specific artifact, unresolved";
  CoringFrobeniusReport<Rational> frob = coringFrobenius(it->second);
  if (frob.status != FrobeniusStatus::NotFrobenius) return "field-specific artifact, unresolved";
  return "confirmed over q";
}

/// Random search for a biseparable coring that is not Frobenius. Trials
/// cycle through three deterministic generators seeded per index, so a rerun
/// with the same config reproduces the log bit for bit. Runs over the active
/// prime field; hits are re-audited over the rationals before being believed.
inline HuntLog huntConjecture(const HuntConfig& config) {
  HuntLog log;
  log.config = config;
  log.field = FieldTraits<Fp>::name();

  std::vector<ZooFixture<Fp>> zoo = standardZoo<Fp>();
  std::vector<const ZooFixture<Fp>*> pool;
  std::vector<const ZooFixture<Fp>*> extensions;
  for (const ZooFixture<Fp>& f : zoo) {
    if (f.coring.algebra()->dim > config.maxDimA || f.coring.carrier.dim > config.maxDimC) {
      continue;
    }
    pool.push_back(&f);
    if (f.extension) extensions.push_back(&f);
  }

  // Zoo corings are classified once; repeats of the same fixture reuse it.
  std::vector<std::optional<std::pair<bool, FrobeniusStatus>>> zooVerdicts(pool.size());

  auto classify = [&](HuntTrial& trial, const Coring<Fp>& c, std::uint64_t frobSeed) {
    trial.built = true;
    BiseparabilityReport<Fp> bis = biseparability(c);
    trial.biseparable = bis.biseparable();
    if (!*trial.biseparable) return;
    CoringFrobeniusReport<Fp> frob = coringFrobenius(c, true, frobSeed);
    trial.frobenius = frob.status;
    if (frob.status == FrobeniusStatus::NotFrobenius) {
      trial.counterexample = true;
      Presentation dump = presentCoring(c);
      trial.audit = auditCounterexample(dump);
      log.dumps.push_back(printPresentation(dump));
    }
  };

  for (Index t = 0; t < config.budget; ++t) {
    HuntTrial trial;
    trial.index = t;
    const std::uint64_t trialSeed = detail::splitmix64(config.seed ^ static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(trialSeed);
    const Index which = t % 3;
    const Index step = t / 3;
    if (which == 0) {
      trial.kind = "zoo";
      if (pool.empty()) {
        trial.source = "none";
      } else {
        const std::size_t slot = static_cast<std::size_t>(step) % pool.size();
        const ZooFixture<Fp>& f = *pool[slot];
        trial.source = f.name;
        if (!zooVerdicts[slot]) {
          BiseparabilityReport<Fp> bis = biseparability(f.coring);
          FrobeniusStatus st = FrobeniusStatus::Inapplicable;
          if (bis.biseparable()) st = coringFrobenius(f.coring, true, 0).status;
          zooVerdicts[slot] = std::make_pair(bis.biseparable(), st);
        }
        trial.built = true;
        trial.biseparable = zooVerdicts[slot]->first;
        if (*trial.biseparable) {
          trial.frobenius = zooVerdicts[slot]->second;
          if (trial.frobenius == FrobeniusStatus::NotFrobenius) {
            trial.counterexample = true;
            Presentation dump = presentCoring(f.coring);
            trial.audit = auditCounterexample(dump);
            log.dumps.push_back(printPresentation(dump));
          }
        }
      }
    } else if (which == 1) {
      trial.kind = "conjugate";
      if (extensions.empty()) {
        trial.source = "none";
      } else {
        const ZooFixture<Fp>& f = *extensions[static_cast<std::size_t>(step) % extensions.size()];
        trial.source = f.name;
        std::optional<RingExtension<Fp>> ext = detail::conjugateExtension(rng, *f.extension);
        if (ext) classify(trial, sweedlerCoring(*ext).coring, trialSeed);
      }
    } else {
      trial.kind = "twist";
      if (pool.empty()) {
        trial.source = "none";
      } else {
        const ZooFixture<Fp>& f = *pool[static_cast<std::size_t>(step) % pool.size()];
        trial.source = f.name;
        std::optional<Coring<Fp>> twisted = detail::twistCoring(rng, f.coring);
        if (twisted) classify(trial, *twisted, trialSeed);
      }
    }
    ++log.generated;
    if (trial.built) ++log.built;
    if (trial.biseparable && *trial.biseparable) ++log.biseparableCount;
    if (trial.frobenius == FrobeniusStatus::Frobenius) ++log.frobeniusCount;
    if (trial.counterexample) ++log.counterexamples;
    log.trials.push_back(std::move(trial));
  }
  return log;
}

inline std::string describeTrial(const HuntTrial& t) {
  std::string out = "trial " + std::to_string(t.index) + " " + t.kind + " " + t.source + ": ";
  if (!t.built) return out + "not built";
  if (!*t.biseparable) return out + "not biseparable";
  if (t.counterexample) return out + "counterexample (" + t.audit + ")";
  if (t.frobenius == FrobeniusStatus::Frobenius) return out + "biseparable frobenius";
  return out + "biseparable frobenius-inapplicable";
}

/// One line per trial plus a header and a stage-count footer. Pure function
/// of the log, so fixed seed and config give identical text.
inline std::string renderHuntLog(const HuntLog& log) {
  std::string out = "hunt seed=" + std::to_string(log.config.seed) +
                    " budget=" + std::to_string(log.config.budget) +
                    " max-dim-a=" + std::to_string(log.config.maxDimA) +
                    " max-dim-c=" + std::to_string(log.config.maxDimC) + " field=" + log.field +
                    "\n";
  for (const HuntTrial& t : log.trials) out += describeTrial(t) + "\n";
  out += "stages: generated=" + std::to_string(log.generated) +
         " built=" + std::to_string(log.built) +
         " biseparable=" + std::to_string(log.biseparableCount) +
         " frobenius=" + std::to_string(log.frobeniusCount) +
         " counterexamples=" + std::to_string(log.counterexamples) + "\n";
  return out;
}

}  // namespace coringlab
