#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "coringlab/coring.hpp"
#include "coringlab/report.hpp"
#include "coringlab/scalar.hpp"
#include "coringlab/trace.hpp"
#include "coringlab/zoo.hpp"

using namespace coringlab;

namespace {

// A plain module over the ground field, both actions scalar.
Bimodule<Rational> groundModule(Index dim) {
  Bimodule<Rational> m;
  m.left = groundPtr<Rational>();
  m.right = m.left;
  m.dim = dim;
  m.leftAct = {identity<Rational>(dim)};
  m.rightAct = {identity<Rational>(dim)};
  return m;
}

Vec<Rational> rvec(std::vector<long long> entries) {
  Vec<Rational> v = Vec<Rational>::Constant(static_cast<Index>(entries.size()), Rational(0));
  for (Index i = 0; i < v.size(); ++i) v(i) = Rational(entries[static_cast<std::size_t>(i)]);
  return v;
}

}  // namespace

TEST_CASE("status names cover all four outcomes") {
  CHECK(statusName(Status::Pass) == "pass");
  CHECK(statusName(Status::Fail) == "fail");
  CHECK(statusName(Status::Infeasible) == "infeasible");
  CHECK(statusName(Status::Inapplicable) == "inapplicable");
}

TEST_CASE("rendering is exact and failure detection is recursive") {
  ReportNode root = reportLeaf("check", Status::Pass);
  ReportNode bad = reportLeaf("coring C", Status::Fail);
  bad.notes.push_back("left counit law fails");
  bad.trace.push_back("(eps (x) id) Delta c1 = 0, want c1");
  root.children.push_back(bad);
  root.children.push_back(reportLeaf("element g", Status::Inapplicable));

  CHECK(renderReport(root) ==
        "check: pass\n"
        "  coring C: fail\n"
        "    - left counit law fails\n"
        "    > (eps (x) id) Delta c1 = 0, want c1\n"
        "  element g: inapplicable\n");
  CHECK(hasFailure(root));
  CHECK_FALSE(hasFailure(root.children[1]));
  CHECK(renderReport(root) == renderReport(root));
}

TEST_CASE("linear combinations print with signs and suppressed ones") {
  Vec<Rational> v(3);
  v << Rational::fromParts(3, 2), Rational(0), Rational(-1);
  CHECK(comboString<Rational>("a", v) == "3/2 a0 - a2");
  CHECK(comboString<Rational>("a", rvec({0, 0})) == "0");
  CHECK(comboString<Rational>("a", rvec({1})) == "a0");
  CHECK(comboString<Rational>("a", rvec({-1, 5})) == "-a0 + 5 a1");
}

TEST_CASE("tensor sums decode mixed-radix coordinates") {
  CHECK(tensorString<Rational>({"c", "c"}, {2, 2}, rvec({1, 0, 0, 2})) ==
        "c0 (x) c0 + 2 c1 (x) c1");
  CHECK(tensorString<Rational>({"a", "c"}, {2, 2}, rvec({0, -1, 0, 0})) == "-a0 (x) c1");
  CHECK(tensorString<Rational>({"c", "c"}, {2, 2}, rvec({0, 0, 0, 0})) == "0");
  CHECK(tensorString<Rational>({"c", "c", "c"}, {2, 2, 2}, rvec({0, 1, 0, 0, 0, -3, 0, 0})) ==
        "c0 (x) c0 (x) c1 - 3 c1 (x) c0 (x) c1");
}

TEST_CASE("coproduct lines spell out a dual coalgebra") {
  Coring<Rational> c = transposeCoring(upperTriangularAlgebra<Rational>(2));
  std::vector<std::string> lines = coproductLines(c);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "Delta c0 = c0 (x) c0");
  CHECK(lines[1] == "Delta c1 = c0 (x) c1 + c1 (x) c2");
  CHECK(lines[2] == "Delta c2 = c2 (x) c2");
}

TEST_CASE("coassociativity trace shows both reassociations") {
  Mat<Rational> cop = zeros<Rational>(4, 2);
  cop(0, 0) = Rational(1);  // Delta c0 = c0 (x) c0
  cop(1, 1) = Rational(1);  // Delta c1 = c0 (x) c1 + c1 (x) c1
  cop(3, 1) = Rational(1);
  Coring<Rational> c = makeCoring(groundModule(2), cop, std::optional<Mat<Rational>>{});
  REQUIRE(checkCoring(c) == "coproduct is not coassociative");

  std::vector<std::string> lines = coassociativityTrace(c);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "coassociativity fails on c1");
  CHECK(lines[1] ==
        "  (Delta (x) id) Delta c1 = "
        "c0 (x) c0 (x) c1 + c0 (x) c1 (x) c1 + c1 (x) c1 (x) c1");
  CHECK(lines[2] ==
        "  (id (x) Delta) Delta c1 = "
        "c0 (x) c0 (x) c1 + c0 (x) c1 (x) c1 + c1 (x) c0 (x) c1 + c1 (x) c1 (x) c1");
}

TEST_CASE("counit trace pinpoints the failing basis elements") {
  Coring<Rational> good = transposeCoring(upperTriangularAlgebra<Rational>(2));
  CHECK(counitTrace(good).empty());

  Coring<Rational> bad = good;
  (*bad.counit)(0, 1) = Rational(1);  // eps now reads the off-diagonal entry too
  REQUIRE(checkCoring(bad) == "left counit law fails");
  std::vector<std::string> lines = counitTrace(bad);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "(eps (x) id) Delta c1 = c1 + c2, want c1");
  CHECK(lines[1] == "(id (x) eps) Delta c1 = c0 + c1, want c1");
}

TEST_CASE("linearity trace catches a coproduct that is not a module map") {
  AlgebraPtr<Rational> gauss = std::make_shared<const Algebra<Rational>>(gaussAlgebra<Rational>());
  Coring<Rational> c = trivialCoring(gauss);
  c.coproduct.col(1) = c.coproduct.col(0);  // Delta c1 duplicated from c0
  REQUIRE(checkCoring(c).has_value());

  std::vector<std::string> lines = coproductLinearityTrace(c);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0].find("Delta(a1 c0) = ") == 0);
  CHECK(lines[0].find(" but a1 Delta(c0) = ") != std::string::npos);
}

TEST_CASE("grouplike trace shows both laws") {
  Coring<Rational> c = transposeCoring(upperTriangularAlgebra<Rational>(2));
  CHECK(grouplikeTrace(c, rvec({1, 0, 0})).empty());

  std::vector<std::string> lines = grouplikeTrace(c, rvec({1, 0, 1}));
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] ==
        "Delta g = c0 (x) c0 + c2 (x) c2 but g (x) g = "
        "c0 (x) c0 + c0 (x) c2 + c2 (x) c0 + c2 (x) c2");
  CHECK(lines[1] == "eps g = 2 a0 but 1 = a0");
}

TEST_CASE("algebra trace reports unit defects and caps associativity output") {
  Algebra<Rational> dead = makeAlgebra<Rational>(1, rvec({1}), [](Index, Index) {
    return Vec<Rational>::Constant(1, Rational(0));
  });
  std::vector<std::string> lines = algebraTrace(dead);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "1 a0 = 0, want a0");
  CHECK(lines[1] == "a0 1 = 0, want a0");

  // unit e0; e1 e2 = e0 but e2 e1 = e1 breaks associativity in several spots
  Algebra<Rational> skew = makeAlgebra<Rational>(3, rvec({1, 0, 0}), [](Index i, Index j) {
    Vec<Rational> zero = Vec<Rational>::Constant(3, Rational(0));
    auto basis = [](Index k) {
      Vec<Rational> e = Vec<Rational>::Constant(3, Rational(0));
      e(k) = Rational(1);
      return e;
    };
    if (i == 0) return basis(j);
    if (j == 0) return basis(i);
    if (i == 1 && j == 2) return basis(0);
    if (i == 2 && j == 1) return basis(1);
    return zero;
  });
  REQUIRE(checkAlgebra(skew).has_value());
  std::vector<std::string> capped = algebraTrace(skew, 1);
  REQUIRE(capped.size() >= 2);
  CHECK(capped[0].find("associates to") != std::string::npos);
  CHECK(capped.back().find("more associativity defects suppressed)") != std::string::npos);
}

TEST_CASE("valid fixtures produce no trace lines") {
  for (const ZooFixture<Rational>& f : standardZoo<Rational>()) {
    CAPTURE(f.name);
    CHECK(coringTrace(f.coring).empty());
    if (f.grouplike) CHECK(grouplikeTrace(f.coring, *f.grouplike).empty());
  }
}

TEST_CASE("the aggregate trace merges the failing identity families") {
  Coring<Rational> bad = transposeCoring(upperTriangularAlgebra<Rational>(2));
  (*bad.counit)(0, 1) = Rational(1);
  std::vector<std::string> lines = coringTrace(bad);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].find("(eps (x) id)") == 0);
}
