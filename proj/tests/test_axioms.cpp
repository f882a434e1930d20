#include <doctest.h>

#include "metcomp/axioms.hpp"
#include "metcomp/errors.hpp"
#include "metcomp/spaces.hpp"
#include "support.hpp"

using namespace metcomp;
using namespace metcomp::test;

TEST_CASE("absolute value passes every axiom on 1000 seeded samples") {
  auto space = make_space(abs_desc());
  const auto report = verify_metric_axioms(*space, 1729, 1000);
  CHECK(report.all_pass());
  CHECK(report.find("triangle") != nullptr);
  CHECK(report.find("separation") == nullptr);  // infinite carrier: no converse check
  CHECK(report.find("ultrametric") == nullptr);
}

TEST_CASE("2-adic rationals also satisfy the strengthened ultrametric inequality") {
  auto space = make_space(padic_desc(2));
  const auto report = verify_metric_axioms(*space, 1729, 1000);
  CHECK(report.all_pass());
  REQUIRE(report.find("ultrametric") != nullptr);
  CHECK(report.find("ultrametric")->pass);
}

TEST_CASE("corrupted 3-point table fails the triangle inequality with witness (a, b, c)") {
  auto space = make_space_unchecked(finite_bad_desc());
  const auto report = verify_metric_axioms(*space, 1, 3);
  CHECK_FALSE(report.all_pass());
  const auto* triangle = report.find("triangle");
  REQUIRE(triangle != nullptr);
  CHECK_FALSE(triangle->pass);
  CHECK(triangle->witness.at("x") == "a");
  CHECK(triangle->witness.at("y") == "b");
  CHECK(triangle->witness.at("z") == "c");
  CHECK(triangle->witness.at("dist_xz") == "5");
  CHECK(triangle->witness.at("bound") == "2");
  // the other axioms hold for this table
  CHECK(report.find("symmetry")->pass);
  CHECK(report.find("identity")->pass);
}

TEST_CASE("finite carriers are checked exhaustively including separation") {
  auto space = make_space(finite_path_desc());
  const auto report = verify_metric_axioms(*space, 99, 3);
  CHECK(report.all_pass());
  REQUIRE(report.find("separation") != nullptr);
  CHECK(report.find("separation")->pass);
}

TEST_CASE("a zero off-diagonal entry fails separation on finite carriers") {
  nlohmann::json desc{{"kind", "finite"},
                      {"labels", {"a", "b"}},
                      {"dist", {"0", "0", "0", "0"}}};
  auto space = make_space_unchecked(desc);
  const auto report = verify_metric_axioms(*space, 1, 3);
  const auto* separation = report.find("separation");
  REQUIRE(separation != nullptr);
  CHECK_FALSE(separation->pass);
}

TEST_CASE("product of lines passes on seeded samples") {
  auto space = make_space(product_abs_desc());
  CHECK(verify_metric_axioms(*space, 1729, 500).all_pass());
}

TEST_CASE("report serialization carries status and witness") {
  auto bad = make_space_unchecked(finite_bad_desc());
  const auto json = verify_metric_axioms(*bad, 1, 3).to_json();
  CHECK(json.at("triangle").at("status") == "fail");
  CHECK(json.at("triangle").contains("witness"));
  CHECK(json.at("symmetry").at("status") == "pass");
  CHECK_FALSE(json.at("symmetry").contains("witness"));
}

TEST_CASE("n_samples below 3 is rejected") {
  auto space = make_space(abs_desc());
  CHECK_THROWS_AS(verify_metric_axioms(*space, 1, 2), InputError);
}
