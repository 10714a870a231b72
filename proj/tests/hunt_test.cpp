#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "coringlab/hunt.hpp"
#include "coringlab/presentation.hpp"
#include "coringlab/scalar.hpp"
#include "coringlab/zoo.hpp"

using namespace coringlab;

namespace {

std::map<std::string, PropertyVector> goldenByName() {
  std::map<std::string, PropertyVector> out;
  for (const ZooFixture<Fp>& f : standardZoo<Fp>()) out[f.name] = f.expected;
  return out;
}

}  // namespace

TEST_CASE("zero budget yields an empty log") {
  HuntLog log = huntConjecture(HuntConfig{7, 0, 4, 8});
  CHECK(log.trials.empty());
  CHECK(log.dumps.empty());
  CHECK(renderHuntLog(log) ==
        "hunt seed=7 budget=0 max-dim-a=4 max-dim-c=8 field=fp 10007\n"
        "stages: generated=0 built=0 biseparable=0 frobenius=0 counterexamples=0\n");
}

TEST_CASE("same seed and config reproduce the log bit for bit") {
  HuntConfig config{7, 21, 4, 8};
  HuntLog first = huntConjecture(config);
  HuntLog second = huntConjecture(config);
  CHECK(renderHuntLog(first) == renderHuntLog(second));
  CHECK(first.trials.size() == 21);
  CHECK(first.generated == 21);
}

TEST_CASE("trials agree with what is known about their sources") {
  std::map<std::string, PropertyVector> golden = goldenByName();
  HuntLog log = huntConjecture(HuntConfig{7, 21, 4, 8});

  // Caps (4, 8) admit every fixture except the one with a 5-dimensional
  // total algebra, and all three generators draw from the same pool.
  int zooSeen = 0;
  int derivedBuilt = 0;
  for (const HuntTrial& t : log.trials) {
    REQUIRE(golden.count(t.source) == 1);
    const PropertyVector& want = golden.at(t.source);
    if (t.kind == "zoo") {
      ++zooSeen;
      REQUIRE(t.built);
      CHECK(*t.biseparable == want.biseparable);
      if (want.biseparable) CHECK(*t.frobenius == want.frobenius);
    } else {
      CHECK((t.kind == "conjugate" || t.kind == "twist"));
      if (!t.built) continue;
      ++derivedBuilt;
      // Conjugation and twisting only move the coring to an isomorphic one.
      CHECK(*t.biseparable == want.biseparable);
      if (want.biseparable) CHECK(*t.frobenius == want.frobenius);
    }
  }
  CHECK(zooSeen == 7);
  CHECK(derivedBuilt >= 12);
  CHECK(log.counterexamples == 0);
  CHECK(log.dumps.empty());
  CHECK(log.built == Index(zooSeen + derivedBuilt));
  CHECK(log.biseparableCount >= 10);
  CHECK(renderHuntLog(log).find("counterexamples=0\n") != std::string::npos);
}

TEST_CASE("caps shrink the candidate pool") {
  HuntLog log = huntConjecture(HuntConfig{3, 6, 1, 1});
  // Only the one-dimensional trivial fixture fits under caps (1, 1).
  for (const HuntTrial& t : log.trials) {
    if (t.built) CHECK(t.source == "TRIV");
  }
  HuntLog none = huntConjecture(HuntConfig{3, 3, 0, 0});
  for (const HuntTrial& t : none.trials) {
    CHECK(t.source == "none");
    CHECK(!t.built);
  }
  CHECK(none.built == 0);
}

TEST_CASE("prime-field entries lift back to small fractions") {
  FpModulusGuard guard(10007);
  Presentation pres = emptyPresentation<Fp>();
  // 5004 is 1/2 mod 10007 and 10006 is -1.
  pres.elements.push_back(PresElement{"x", {Rational(5004), Rational(10006), Rational(3)}, 2});

  std::optional<Presentation> lifted = reconstructOverRationals(pres);
  REQUIRE(lifted.has_value());
  CHECK(!lifted->field.primeField);
  CHECK(lifted->elements[0].values[0] == Rational::fromParts(1, 2));
  CHECK(lifted->elements[0].values[1] == Rational(-1));
  CHECK(lifted->elements[0].values[2] == Rational(3));

  Presentation rationalDoc = emptyPresentation<Rational>();
  CHECK(!reconstructOverRationals(rationalDoc).has_value());

  Presentation outOfRange = emptyPresentation<Fp>();
  outOfRange.elements.push_back(PresElement{"x", {Rational(10007)}, 2});
  CHECK(!reconstructOverRationals(outOfRange).has_value());
}

TEST_CASE("audit declines hits that do not survive over the rationals") {
  std::map<std::string, PropertyVector> golden = goldenByName();
  for (const ZooFixture<Fp>& f : standardZoo<Fp>()) {
    if (f.name != "TRIV") continue;
    // The trivial coring is Frobenius, so as a claimed counterexample it
    // must come back unconfirmed.
    Presentation dump = presentCoring(f.coring);
    CHECK(auditCounterexample(dump) == "field-specific artifact, unresolved");
  }
  Presentation rationalDoc = emptyPresentation<Rational>();
  CHECK(auditCounterexample(rationalDoc) == "field-specific artifact, unresolved");
}

TEST_CASE("trial lines carry kind, source, and classification") {
  HuntLog log = huntConjecture(HuntConfig{7, 3, 4, 8});
  REQUIRE(log.trials.size() == 3);
  std::string text = renderHuntLog(log);
  CHECK(text.find("trial 0 zoo TRIV: biseparable frobenius\n") != std::string::npos);
  CHECK(text.find("trial 1 conjugate TRIV: ") != std::string::npos);
  CHECK(text.find("trial 2 twist TRIV: ") != std::string::npos);
}
