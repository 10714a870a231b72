#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "coringlab/coring.hpp"
#include "coringlab/extension.hpp"
#include "coringlab/scalar.hpp"
#include "coringlab/zoo.hpp"

using namespace coringlab;

TEST_CASE_TEMPLATE("every fixture is structurally sound", K, Rational, Fp) {
  for (const ZooFixture<K>& f : standardZoo<K>()) {
    CAPTURE(f.name);
    REQUIRE(checkCoring(f.coring) == std::nullopt);
    if (f.extension) REQUIRE(checkExtension(*f.extension) == std::nullopt);
    REQUIRE(f.grouplike.has_value());
    CHECK(grouplikeViolation(f.coring, *f.grouplike) == std::nullopt);
  }
}

TEST_CASE_TEMPLATE("solvers reproduce the recorded certificate profiles", K, Rational, Fp) {
  for (const ZooFixture<K>& f : standardZoo<K>()) {
    CAPTURE(f.name);
    PropertyVector got = measureProperties(f);
    CHECK_MESSAGE(got == f.expected,
                  "measured { " << describeProperties(got) << " } expected { "
                                << describeProperties(f.expected) << " }");
  }
}

TEST_CASE("names are unique and lookup works") {
  std::vector<ZooFixture<Rational>> zoo = standardZoo<Rational>();
  std::set<std::string> names;
  for (const ZooFixture<Rational>& f : zoo) names.insert(f.name);
  CHECK(names.size() == zoo.size());
  for (const char* name : {"TRIV", "DIAG2", "GAUSS", "C2GROUP", "NONSPLIT", "DIRSUM"}) {
    CAPTURE(name);
    CHECK(findFixture(zoo, name) != nullptr);
  }
  CHECK(findFixture(zoo, "NO-SUCH-FIXTURE") == nullptr);
}

TEST_CASE("profile rendering is stable") {
  PropertyVector p;
  p.split = true;
  p.separable = false;
  p.cosplit = false;
  p.cointegral = true;
  p.fgpLeft = true;
  p.fgpRight = true;
  p.biseparable = false;
  p.frobenius = FrobeniusStatus::Frobenius;
  CHECK(describeProperties(p) ==
        "split=yes separable=no cosplit=no cointegral=yes fgp-left=yes fgp-right=yes "
        "biseparable=no frobenius=yes");
  PropertyVector q;
  CHECK(describeProperties(q) ==
        "split=n/a separable=n/a cosplit=no cointegral=no fgp-left=no fgp-right=no "
        "biseparable=no frobenius=inapplicable");
}
