#include "doctest.h"
#include "linf/cli.hpp"

#include <filesystem>
#include <fstream>

using namespace linf;

namespace {

std::string write_instance(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("linf_cli_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

JobResult run(const std::string& sub, const std::string& name, const std::string& text, int max_arity = -1) {
  JobConfig c;
  c.subcommand = sub;
  c.inputs = {write_instance(name, text)};
  c.max_arity = max_arity;
  return run_job(c);
}

const char* kRogers3 =
    R"({"space": {"N": 3, "omega": "volume", "D": 2}, "corpus": {"lower_per_degree": 3}})";

const char* kSo3 = R"({"space": {"N": 3, "omega": "volume"}, "action": {"so": 3},
  "comoment": {"potential": {"degree": 2, "terms": [
    {"dx": [1, 2], "coeff": "1/3*x0"}, {"dx": [2, 0], "coeff": "1/3*x1"}, {"dx": [0, 1], "coeff": "1/3*x2"}]}}})";

}  // namespace

TEST_CASE("polynomial parsing") {
  Poly p = parse_poly("x0*x1 - 1/2*x2^2 + 3", 3);
  Poly q = Poly::var(0) * Poly::var(1) - Q(1, 2) * Poly::var(2) * Poly::var(2) + Poly(Q(3));
  CHECK(p == q);
  CHECK(parse_poly("-(x0 + x1)^2", 2) == -((Poly::var(0) + Poly::var(1)) * (Poly::var(0) + Poly::var(1))));
  CHECK(parse_poly("0", 1).is_zero());
  CHECK_THROWS_AS(parse_poly("x3", 3), InputError);
  CHECK_THROWS_AS(parse_poly("x0 +", 1), InputError);
  CHECK_THROWS_AS(parse_poly("1/0", 1), InputError);

  // str() output parses back
  for (const Poly& r : {q, Poly(Q(-7, 3)), Q(-1) * Poly::var(0) + Q(-1, 2) * Poly::var(1) * Poly::var(1)})
    CHECK(parse_poly(r.str(), 3) == r);
}

TEST_CASE("rationals and forms") {
  CHECK(parse_rational(Json(-4)) == Q(-4));
  CHECK(parse_rational(Json("6/4")) == Q(3, 2));
  CHECK_THROWS_AS(parse_rational(Json(0.5)), InputError);
  CHECK_THROWS_AS(parse_rational(Json("a")), InputError);

  auto f = parse_form(Json::parse(R"({"degree": 2, "terms": [{"dx": [1, 0], "coeff": "x2"}]})"), 3);
  CHECK(f == PolyForm::basic(3, {0, 1}, Q(-1) * Poly::var(2)));
  CHECK(parse_form(Json("symplectic"), 4) == MssSpace::symplectic(4).omega);
  CHECK_THROWS_AS(parse_form(Json("symplectic"), 3), InputError);
  CHECK_THROWS_AS(parse_form(Json::parse(R"({"degree": 2, "terms": [{"dx": [1, 1]}]})"), 3), InputError);
  CHECK_THROWS_AS(parse_form(Json::parse(R"({"degree": 1, "terms": [{"dx": [4]}]})"), 3), InputError);

  // round trip through form_json
  PolyForm g = PolyForm::basic(3, {0, 2}, parse_poly("x0^2 - 1/3*x1", 3));
  CHECK(parse_form(form_json(g), 3) == g);
}

TEST_CASE("space parsing validates") {
  auto M = parse_space(Json::parse(R"({"N": 4, "omega": "volume", "n": 3})"));
  CHECK(M.n == 3);
  CHECK_THROWS_AS(parse_space(Json::parse(R"({"N": 4, "omega": "volume", "n": 2})")), InputError);
  // not closed
  CHECK_THROWS(parse_space(Json::parse(R"({"N": 2, "omega": {"degree": 2, "terms": [{"dx": [0, 1], "coeff": "x0"}]}})")));
  CHECK(parse_space(Json::parse(R"({"N": 2, "omega": "volume", "D": 3})"), 1).D == 1);
}

TEST_CASE("actions from fields") {
  // so(2) on R^2 given by its rotation field only
  auto A = parse_action(Json::parse(R"({"fields": {"r": ["x1", "-x0"]}})"), 2);
  CHECK(A.algebra.dim() == 1);
  CHECK_THROWS_AS(parse_action(Json::parse(R"({"so": 3})"), 4), InputError);
  // x d/dy and y d/dx do not close
  CHECK_THROWS(parse_action(Json::parse(R"({"fields": {"a": ["0", "x0"], "b": ["x1", "0"]}})"), 2));
}

TEST_CASE("check-linfty") {
  auto ok = run("check-linfty", "rogers3", kRogers3);
  CHECK(ok.exit_code == 0);
  CHECK(ok.report["status"] == "pass");
  CHECK(ok.report["checked_arities"] == Json::parse("[1, 2, 3, 4]"));
  CHECK(ok.report["failures"].empty());

  auto bad = run("check-linfty", "rogers3bad",
                 R"({"space": {"N": 3, "omega": "volume"}, "scale": {"3": "2"}, "corpus": {"lower_per_degree": 3}})");
  CHECK(bad.exit_code == 1);
  REQUIRE(bad.report["failures"].size() == 1);
  CHECK(bad.report["failures"][0]["arity"] == 3);

  auto vin = run("check-linfty", "vin3",
                 R"({"space": {"N": 3, "omega": "volume"}, "structure": "vinogradov", "corpus": {"lower_per_degree": 2}})");
  CHECK(vin.exit_code == 0);

  auto abelian = run("check-linfty", "abelian", R"({"space": [["a", -1], ["b", 0]], "brackets": {}})");
  CHECK(abelian.exit_code == 0);

  // a graded Lie bracket on one even and one odd line: [a, a] = b, a odd of degree 1
  auto lie = run("check-linfty", "lie",
                 R"({"space": [["a", 1], ["b", 2]], "brackets": {"2": [{"in": ["a", "a"], "out": {"b": 1}}]}})");
  CHECK(lie.exit_code == 0);

  // [x,y] = x, [y,z] = y, [x,z] = z violates Jacobi
  auto broken = run("check-linfty", "broken",
                    R"({"space": [["x", 0], ["y", 0], ["z", 0]],
                        "brackets": {"2": [{"in": ["x", "y"], "out": {"x": 1}},
                                           {"in": ["y", "z"], "out": {"y": 1}},
                                           {"in": ["x", "z"], "out": {"z": 1}}]}})");
  CHECK(broken.exit_code == 1);
  CHECK(broken.report["failures"][0]["arity"] == 3);
}

TEST_CASE("input errors exit 2") {
  CHECK(run("check-linfty", "trunc", R"({"N": )").exit_code == 2);
  CHECK(run("check-linfty", "noomega", R"({"space": {"N": 3}})").exit_code == 2);
  CHECK(run("check-linfty", "kind", R"({"space": {"N": 3, "omega": "volume"}, "structure": "x"})").exit_code == 2);
  CHECK(run("check-linfty", "label", R"({"space": [["a", 0]], "brackets": {"2": [{"in": ["a", "z"], "out": {}}]}})")
            .exit_code == 2);
  CHECK(run("check-linfty", "outdeg",
            R"({"space": [["a", 0], ["b", 1]], "brackets": {"2": [{"in": ["a", "b"], "out": {"a": 1}}]}})")
            .exit_code == 2);
  CHECK(run("comoment", "missing", R"({"space": {"N": 3, "omega": "volume"}})").exit_code == 2);
  // degenerate omega
  CHECK(run("check-linfty", "degenerate",
            R"({"space": {"N": 3, "omega": {"degree": 2, "terms": [{"dx": [0, 1]}]}}})")
            .exit_code == 2);

  JobConfig c;
  c.subcommand = "nope";
  CHECK(run_job(c).exit_code == 2);
  c.subcommand = "check-linfty";
  CHECK(run_job(c).exit_code == 2);
  c.inputs = {"/nonexistent/x.json"};
  CHECK(run_job(c).exit_code == 2);
}

TEST_CASE("tables") {
  JobConfig c;
  c.subcommand = "tables";
  auto r = run_job(c);
  CHECK(r.exit_code == 0);
  CHECK(r.report["bernoulli"] ==
        Json::parse(R"(["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66"])"));
  CHECK(r.report["phi"] ==
        Json::parse(R"(["1", "-1", "1/3", "0", "-1/45", "0", "2/945", "0", "-1/4725", "0"])"));
  c.trunc = 0;
  r = run_job(c);
  CHECK(r.report["bernoulli"] == Json::parse(R"(["1"])"));
  CHECK(r.report["phi"] == Json::parse(R"(["1"])"));
  c.trunc = -1;
  CHECK(run_job(c).exit_code == 2);
}

TEST_CASE("reports are deterministic") {
  auto a = run("check-linfty", "det", kRogers3, 3);
  auto b = run("check-linfty", "det", kRogers3, 3);
  CHECK(a.report.dump() == b.report.dump());
  CHECK(a.report.dump().find("seconds") == std::string::npos);
}

TEST_CASE("sampling above the exhaustive limit") {
  JobConfig c;
  c.subcommand = "check-linfty";
  c.inputs = {write_instance("sampled", kRogers3)};
  c.exhaustive_limit = 200;
  c.samples = 5;
  auto r = run_job(c);
  CHECK(r.exit_code == 0);
  int sampled = 0;
  for (const auto& a : r.report["arities"]) {
    if (a["sampled"].get<bool>()) {
      ++sampled;
      CHECK(a["candidates"].get<long>() > 200);
      CHECK(a["checked"] == 5);
    } else {
      CHECK(a["checked"] == a["candidates"]);
    }
  }
  CHECK(sampled == 2);
  auto again = run_job(c);
  CHECK(again.report.dump() == r.report.dump());
  // the corrupted arity 3 is still caught from a sample
  c.inputs = {write_instance("sampled_bad",
                             R"({"space": {"N": 3, "omega": "volume"}, "scale": {"3": "2"}, "corpus": {"lower_per_degree": 3}})")};
  c.samples = 200;
  CHECK(run_job(c).exit_code == 1);
}

TEST_CASE("morphism, comoment and pentagon jobs") {
  auto phi = run("check-morphism", "phi3", kRogers3);
  CHECK(phi.exit_code == 0);
  CHECK(phi.report["checked_arities"] == Json::parse("[1, 2, 3]"));
  CHECK(phi.report["conjectural_arities"].empty());

  auto phi_bad = run("check-morphism", "phi3bad",
                     R"({"space": {"N": 3, "omega": "volume"}, "corpus": {"lower_per_degree": 3},
                         "phi_overrides": {"2": "1"}})");
  CHECK(phi_bad.exit_code == 1);

  auto cm = run("comoment", "so3", kSo3);
  CHECK(cm.exit_code == 0);
  CHECK(cm.report["verify"]["ok"] == true);
  CHECK(cm.report["checkers_agree"] == true);
  CHECK(cm.report["equivariance"]["equivariant"] == true);

  // explicit values: f_1 of so(2) on R^2 is (x^2 + y^2)/2
  auto so2 = run("comoment", "so2",
                 R"({"space": {"N": 2, "omega": "symplectic"}, "action": {"so": 2},
                     "comoment": {"values": {"A12": {"degree": 0, "terms": [{"dx": [], "coeff": "1/2*x0^2 + 1/2*x1^2"}]}}}})");
  CHECK(so2.exit_code == 0);
  auto so2bad = run("comoment", "so2bad",
                    R"({"space": {"N": 2, "omega": "symplectic"}, "action": {"so": 2},
                        "comoment": {"values": {"A12": {"degree": 0, "terms": [{"dx": [], "coeff": "x0^2"}]}}}})");
  CHECK(so2bad.exit_code == 1);
  CHECK(so2bad.report["verify"]["failure"]["tuple"] == Json::parse(R"(["A12"])"));

  auto pent = run("pentagon", "so3", kSo3);
  CHECK(pent.exit_code == 0);
  CHECK(pent.report["arities"].size() == 3);
}
