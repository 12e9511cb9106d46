#include "logder/runner.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace logder;

namespace {

json strip_timing(json report) {
  for (auto& r : report.at("records")) r.erase("wall_ms");
  return report;
}

}  // namespace

TEST_CASE("config validation maps to exit code 2") {
  RunConfig cfg;
  cfg.command = Command::build;
  cfg.k = 9;  // above the default cap of 8
  CHECK(run(cfg).exit_code == 2);

  cfg.k = -1;
  CHECK(run(cfg).exit_code == 2);

  RunConfig verify;
  verify.command = Command::verify;
  verify.suites.clear();
  CHECK(run(verify).exit_code == 2);

  RunConfig over;
  over.command = Command::verify;
  over.k_max = 12;
  CHECK(run(over).exit_code == 2);
}

TEST_CASE("verify exits 0 and reports one record per check") {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.k_max = 1;
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  const json report = json::parse(res.output);
  CHECK(report.at("overall") == "pass");
  CHECK(report.at("records").size() > 10);
  for (const auto& r : report.at("records")) CHECK(r.at("verdict") == "pass");
}

TEST_CASE("suite selection narrows the records") {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.k_max = 0;
  cfg.suites = {Suite::saito};
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  const json report = json::parse(res.output);
  for (const auto& r : report.at("records")) CHECK(r.at("suite") == "saito");
  // Shi^0 certificate carries c = +-1
  const auto& first = report.at("records").at(0);
  const std::string detail = first.at("detail").get<std::string>();
  CHECK((detail.starts_with("c = 1") || detail.starts_with("c = -1")));
}

TEST_CASE("build output is deterministic and parseable") {
  RunConfig cfg;
  cfg.command = Command::build;
  cfg.k = 1;
  const RunResult once = run(cfg);
  const RunResult twice = run(cfg);
  REQUIRE(once.exit_code == 0);
  CHECK(once.output == twice.output);  // byte identical

  const json out = json::parse(once.output);
  const auto phi = derivation_from_json(out.at("bundle").at("srb_plus").at(0));
  CHECK(phi.degree() == 3);
  CHECK(out.at("bundle").at("cat_basis").at(1).at("label") == "theta2_k1");
}

TEST_CASE("build respects the family filter") {
  RunConfig cfg;
  cfg.command = Command::build;
  cfg.k = 0;
  cfg.family = FamilySelection::shi;
  const json out = json::parse(run(cfg).output);
  CHECK(out.at("bundle").contains("srb_plus"));
  CHECK(out.at("bundle").contains("euler"));
  CHECK_FALSE(out.at("bundle").contains("cat_basis"));
}

TEST_CASE("verify reports are stable modulo wall time") {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.k_max = 0;
  cfg.suites = {Suite::saito, Suite::srb};
  const json a = strip_timing(json::parse(run(cfg).output));
  const json b = strip_timing(json::parse(run(cfg).output));
  CHECK(a == b);
}

TEST_CASE("certify emits re-checkable certificates") {
  RunConfig cfg;
  cfg.command = Command::certify;
  cfg.k = 1;
  cfg.family = FamilySelection::shi;
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  const json out = json::parse(res.output);
  const json& cert = out.at("certificates").at(0);
  CHECK(cert.at("verdict") == "pass");
  CHECK(cert.at("degrees") == json::array({1, 3, 3}));

  // recheck: quotient * form == determinant for each of the 7 hyperplanes
  const Poly det = poly_from_json(cert.at("determinant"));
  REQUIRE(cert.at("hyperplane_quotients").size() == 7);
  for (const auto& hq : cert.at("hyperplane_quotients")) {
    const Poly form = poly_from_json(hq.at("form"));
    const Poly quotient = poly_from_json(hq.at("quotient"));
    CHECK(quotient * form == det);
  }
  // and det == c * Q(arr)
  const Rational c = rational_from_string(cert.at("c").get<std::string>());
  CHECK(det == Poly(c) * build_shi_cone(1).defining_polynomial());
}

TEST_CASE("certify on Cat^0 records |c| = 6") {
  RunConfig cfg;
  cfg.command = Command::certify;
  cfg.k = 0;
  cfg.family = FamilySelection::cat;
  const json out = json::parse(run(cfg).output);
  const Rational c = rational_from_string(out.at("certificates").at(0).at("c").get<std::string>());
  CHECK((c == 6 || c == -6));
  CHECK(out.at("certificates").at(0).at("degrees") == json::array({1, 1, 2}));
}

TEST_CASE("certify at k = 2 reports Catalan degrees (1,7,8)") {
  RunConfig cfg;
  cfg.command = Command::certify;
  cfg.k = 2;
  cfg.family = FamilySelection::cat;
  const json out = json::parse(run(cfg).output);
  CHECK(out.at("certificates").at(0).at("degrees") == json::array({1, 7, 8}));
}

TEST_CASE("text build prints the Catalan pair with degrees 4 and 5") {
  RunConfig cfg;
  cfg.command = Command::build;
  cfg.k = 1;
  cfg.family = FamilySelection::cat;
  cfg.format = OutputFormat::text;
  const RunResult res = run(cfg);
  REQUIRE(res.exit_code == 0);
  CHECK(res.output.find("theta1_k1") != std::string::npos);
  CHECK(res.output.find("theta2_k1") != std::string::npos);
  CHECK(res.output.find("α1") != std::string::npos);
  CHECK(res.output.find("phi1_k1") == std::string::npos);

  const auto theta = build_cat_basis(1);
  CHECK(theta[0].degree() == 4);
  CHECK(theta[1].degree() == 5);
}

TEST_CASE("text format renders a human-readable report") {
  RunConfig cfg;
  cfg.command = Command::verify;
  cfg.k_max = 0;
  cfg.suites = {Suite::saito};
  cfg.format = OutputFormat::text;
  const RunResult res = run(cfg);
  CHECK(res.output.find("[pass] saito/") != std::string::npos);
  CHECK(res.output.find("overall: pass") != std::string::npos);
}
