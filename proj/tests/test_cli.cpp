#include <doctest.h>

#include "metcomp/rational.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace metcomp;
using namespace metcomp::test;
using nlohmann::json;

TEST_CASE("eval sqrt(2) at k=20 prints a certified rational") {
  const auto result = run_cli({"eval", "--input", descriptor_path("sqrt2.json"),
                               "--precision", "20", "--format", "json"});
  REQUIRE(result.exit_code == 0);
  const auto report = json::parse(result.out);
  CHECK(report.at("command") == "eval");
  CHECK(report.at("bound") == "1/1048576");
  const Rational q = Rational::parse(report.at("approx").get<std::string>());
  CHECK(within_of_sqrt(q, Rational(2), Rational::pow2(-20)));
  // printed rationals re-parse to the identical value
  CHECK(Rational::parse(q.str()) == q);
}

TEST_CASE("eval of a constant prints the value exactly at any precision") {
  const std::string inline_desc =
      R"({"base":{"kind":"rationals_abs"},"generator":{"kind":"constant","value":"1/2"}})";
  for (const char* k : {"0", "13", "64"}) {
    const auto result = run_cli({"eval", "--input", inline_desc, "--precision", k});
    REQUIRE(result.exit_code == 0);
    CHECK(result.out.find("approx = 1/2") != std::string::npos);
  }
}

TEST_CASE("eval of the 2-adic series carries its certificate") {
  const auto result = run_cli({"eval", "--input", descriptor_path("geometric2.json"),
                               "--precision", "16", "--format", "json"});
  REQUIRE(result.exit_code == 0);
  const auto report = json::parse(result.out);
  const Rational q = Rational::parse(report.at("approx").get<std::string>());
  // evaluation index 17: partial sum 2^18 - 1, certified within 2^-16 of -1
  CHECK(q == Rational::parse("262143"));
  CHECK(padic_dist_oracle(q, Rational(-1), 2) <= Rational::pow2(-16));
}

TEST_CASE("eval rejects malformed descriptors and out-of-range precision") {
  CHECK(run_cli({"eval", "--input", R"({"nonsense":true})"}).exit_code == 2);
  CHECK(run_cli({"eval", "--input", "definitely-not-a-file.json"}).exit_code == 2);
  CHECK(run_cli({"eval", "--input", R"({"base":{"kind":"rationals_abs"},)"
                                    R"("generator":{"kind":"sqrt","value":"-1"}})"})
            .exit_code == 2);

  const auto capped = run_cli({"eval", "--input", descriptor_path("sqrt2.json"),
                               "--precision", "100"});
  CHECK(capped.exit_code == 2);
  CHECK(capped.err.find("cap") != std::string::npos);
  CHECK(run_cli({"eval", "--input", descriptor_path("sqrt2.json"), "--precision", "100",
                 "--max-precision", "128"})
            .exit_code == 0);
}

TEST_CASE("verify passes on the rational line with defaults") {
  const auto result = run_cli({"verify", "--input", descriptor_path("space_abs.json"),
                               "--samples", "200"});
  REQUIRE(result.exit_code == 0);
  CHECK(result.out.find("overall: pass") != std::string::npos);
}

TEST_CASE("verify reports the corrupted finite table with a witness") {
  const auto result = run_cli({"verify", "--input", descriptor_path("finite_bad.json"),
                               "--format", "json"});
  CHECK(result.exit_code == 1);
  const auto report = json::parse(result.out);
  CHECK(report.at("status") == "fail");
  const auto& triangle = report.at("suites").at("metric_axioms").at("triangle");
  CHECK(triangle.at("status") == "fail");
  CHECK(triangle.at("witness").at("x") == "a");
  CHECK(triangle.at("witness").at("z") == "c");
}

TEST_CASE("verify rejects a composite p as input error") {
  const auto result =
      run_cli({"verify", "--input", R"({"kind":"rationals_padic","p":4})"});
  CHECK(result.exit_code == 2);
  CHECK(result.err.find("p must be prime") != std::string::npos);
}

TEST_CASE("verify output is byte-identical for identical config") {
  const std::vector<std::string> args = {"verify", "--input",
                                         descriptor_path("space_2adic.json"), "--samples", "100",
                                         "--seed", "7", "--format", "json"};
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(first.out == second.out);
}

TEST_CASE("extend demonstrates the commuting triangle for catalogue isometries") {
  const auto embed = run_cli({"extend", "--input", descriptor_path("extend_embed.json"),
                              "--precision", "12", "--format", "json"});
  REQUIRE(embed.exit_code == 0);
  CHECK(json::parse(embed.out).at("commutes").at("status") == "pass");

  const auto shift = run_cli({"extend", "--input", descriptor_path("extend_shift.json"),
                              "--precision", "12"});
  REQUIRE(shift.exit_code == 0);
  CHECK(shift.out.find("commutes: pass") != std::string::npos);
}

TEST_CASE("extend fails the precheck for the scaling map") {
  const auto result = run_cli({"extend", "--input", descriptor_path("extend_scale2.json")});
  CHECK(result.exit_code == 1);
  CHECK(result.out.find("isometry precheck") != std::string::npos);
  CHECK(result.out.find("fail") != std::string::npos);
}

TEST_CASE("extend on mismatched spaces is an input error") {
  const std::string input =
      R"({"space":{"kind":"rationals_padic","p":2},"isometry":{"kind":"shift","offset":"1"}})";
  CHECK(run_cli({"extend", "--input", input}).exit_code == 2);
}

TEST_CASE("category subcommand searches the chain poset") {
  const auto result = run_cli({"category", "--input", descriptor_path("ption_query.json"),
                               "--format", "json"});
  REQUIRE(result.exit_code == 0);
  const auto report = json::parse(result.out);
  CHECK(report.at("status") == "pass");
  REQUIRE(report.at("candidates").size() == 1);
  CHECK(report.at("candidates")[0].at("object") == "c");
  CHECK(report.at("candidates")[0].at("morphism") == "a->c");
}

TEST_CASE("category rejects the two-element group for rigidity") {
  const auto result = run_cli({"category", "--input", descriptor_path("z2_query.json")});
  CHECK(result.exit_code == 1);
  CHECK(result.out.find("rigidity: fail") != std::string::npos);
}

TEST_CASE("category reports the corrupted table and passes the trivial one") {
  const auto corrupted =
      run_cli({"category", "--input", descriptor_path("corrupt_monoid.json")});
  CHECK(corrupted.exit_code == 1);
  CHECK(corrupted.out.find("associativity") != std::string::npos);

  const auto trivial =
      run_cli({"category", "--input", descriptor_path("trivial_category.json")});
  CHECK(trivial.exit_code == 0);
}

TEST_CASE("category validates descriptors before running") {
  CHECK(run_cli({"category", "--input", R"({"objects":["a"]})"}).exit_code == 2);
  CHECK(run_cli({"category", "--input", R"({"category":{"objects":["a"]},"X":"a"})"})
            .exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}).exit_code == 2);
  CHECK(run_cli({"frobnicate"}).exit_code == 2);
  CHECK(run_cli({"eval"}).exit_code == 2);  // --input is required
  CHECK(run_cli({"eval", "--input", descriptor_path("sqrt2.json"), "--format", "yaml"})
            .exit_code == 2);
}

TEST_CASE("help is exit code 0") {
  CHECK(run_cli({"--help"}).exit_code == 0);
}
