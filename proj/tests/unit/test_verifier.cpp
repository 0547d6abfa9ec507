#include <doctest.h>

#include "loopvertex/export.hpp"
#include "loopvertex/verifier.hpp"

using namespace loopvertex;
using json = nlohmann::ordered_json;

namespace {

NPartition np(std::vector<Partition> c) { return NPartition(std::move(c)); }

void check_pass(const CheckCase& c) {
  INFO(c.identity << " " << c.params.dump() << " " << c.note
                  << (c.witness ? " at " + c.witness->monomial + ": " + c.witness->lhs + " vs " + c.witness->rhs : ""));
  CHECK(c.pass);
}

}  // namespace

TEST_CASE("comb theorem examples") {
  check_pass(check_thm_comb({}, np({{}}), 1));  // classical strip identity
  check_pass(check_thm_comb({}, np({{}, {}}), 1));
  for (const auto& s : npartitions_of(1, 3)) check_pass(check_thm_comb({1}, s, 1));
  check_pass(check_thm_comb({2, 1}, np({{1}, {1}}), 2));
}

TEST_CASE("reduction identity at both signs and through the flip") {
  for (int a : {1, -1}) {
    check_pass(check_reduction({}, np({{}, {}}), 1, a));
    check_pass(check_reduction({1}, np({{}, {1}, {}}), 2, a));
  }
  check_pass(check_reduction_flip({1}, np({{1}, {}}), 1));
}

TEST_CASE("finite-m forms meet only as m grows") {
  // smallest nontrivial case: first disagreement at q-degree 3/2 for m = 2
  auto c = check_finite_m_forms({}, {}, 1, 2, 2, 6);
  CHECK_FALSE(c.pass);
  REQUIRE(c.witness);
  CHECK(c.witness->degree == "3/2");
  check_pass(check_finite_m_stabilization({}, {}, 1, 2, {2, 4, 6}, 6));
  check_pass(check_finite_m_stabilization({1}, {2}, 1, 1, {2, 3, 4}, 6));
  // and they do meet to degree 6 once m is large
  check_pass(check_finite_m_forms({}, {}, 1, 1, 7, 6));
}

TEST_CASE("symmetric correspondence and GW symmetry examples") {
  check_pass(check_sym_correspondence({1}, {1}, {1, 1}, 2, 4));
  check_pass(check_sym_correspondence({2}, {1}, {-1, 1}, 3, 3));
  check_pass(check_gw_symmetry({1}, {1}, {1, 1}, 2, 4));  // tautological
  check_pass(check_gw_symmetry({2}, {}, {1, -1}, 2, 4));
  check_pass(check_gw_symmetry({1}, {1, 1}, {1, 1}, 3, 4));
}

TEST_CASE("failing checks localize") {
  // with q negated the correspondence fails already at the u^{-1} pole
  auto c = check_sym_correspondence({}, {1}, {1, 1}, 1, 3, true);
  CHECK_FALSE(c.pass);
  REQUIRE(c.witness);
  CHECK(c.witness->monomial == "u^(-1)");
  CHECK(c.witness->lhs != c.witness->rhs);
  CHECK_FALSE(c.anchor.empty());
}

TEST_CASE("character battery pieces") {
  check_pass(check_sym_orthogonality(5));
  check_pass(check_wreath_orthogonality(3, 2));
  check_pass(check_conjugation_rule(2, 3));
  check_pass(check_twist_rule(3, 2));
  check_pass(check_strip_expansion(np({{1}, {}}), np({{}, {}}), 1));
  check_pass(check_strip_expansion(np({{}, {1}, {1}}), np({{}, {}, {1}}), 1));
  check_pass(check_fp_coefficients(6));
}

TEST_CASE("case and report serialization round trip") {
  CheckCase c("x", "y", json{{"n", 2}});
  c.witness = Witness{"q0", "1/2", "1", "0"};
  c.note = "n";
  json j = case_to_json(c);
  CHECK(case_to_json(case_from_json(j)) == j);

  json cfg;
  cfg["fp"] = {{"terms", 4}};
  cfg["characters"] = {{"max_sym_d", 3}, {"n", {2}}, {"max_wreath_d", 2}, {"max_strip_mu", 1}};
  Report r = run_suite("all", cfg);
  CHECK(r.pass());
  CHECK(r.suites == std::vector<std::string>{"characters", "fp"});
  CHECK(Report::from_json(r.to_json()).to_json() == r.to_json());
}

TEST_CASE("empty config gives an empty passing report") {
  Report r = run_suite("all", json::object());
  CHECK(r.cases.empty());
  CHECK(r.pass());
  CHECK(run_suite("thm-comb", json::object()).cases.empty());
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(run_suite("nope", json::object()), ConfigError);
  CHECK_THROWS_AS(run_suite("all", json{{"nope", json::object()}}), ConfigError);
  CHECK_THROWS_AS(run_suite("fp", json{{"fp", {{"term", 3}}}}), ConfigError);
  CHECK_THROWS_AS(run_suite("fp", json{{"fp", {{"terms", "3"}}}}), ConfigError);
  CHECK_THROWS_AS(run_suite("thm-comb", json{{"thm-comb", {{"n", {0}}}}}), ConfigError);
  CHECK_THROWS_AS(run_suite("all", json::array()), ConfigError);
}

TEST_CASE("reports are independent of scheduling") {
  json cfg;
  cfg["thm-comb"] = {{"n", {1, 2}}, {"d", {1}}, {"max_omega", 1}, {"max_sigma", 1}};
  cfg["dt-symmetry"] = {{"n", {2}}, {"max_rho", 1}, {"max_lambda", 1}};
  auto a = run_suite("all", cfg, 1).to_json().dump();
  auto b = run_suite("all", cfg, 4).to_json().dump();
  CHECK(a == b);
}

TEST_CASE("off-lattice framing is an error, on-lattice weights are fine") {
  check_pass(check_dt_symmetry({1}, {}, np({{1}}), {1, 1}, Framing{1, 2, -3}));
  CHECK_THROWS_WITH(dt_vertex_framed({2}, {1, 1}, np({{1}}), {-1, -1}, Framing{2, -3, 1}),
                    doctest::Contains("outside lattice"));
}

TEST_CASE("export parsing") {
  CHECK(parse_partition(json::parse("[3,1]")) == Partition{3, 1});
  CHECK_THROWS(parse_partition(json::parse("[1,3]")));
  CHECK_THROWS(parse_partition(json::parse("[0]")));
  CHECK(parse_lambda_bar(json::parse("[[1],[]]"), 2) == Partition{1, 1});
  CHECK(parse_lambda_bar(json::parse("[2]"), 2) == Partition{2});
  CHECK_THROWS(parse_lambda_bar(json::parse("[1]"), 2));  // nonempty 2-core
  CHECK(parse_alpha("1,-1").minus == -1);
  CHECK_THROWS(parse_alpha("1,0"));
  CHECK_THROWS(parse_alpha("1"));
  auto j = loopschur_json({2}, 2, LoopSchurMethod::jt, 3);
  auto k = loopschur_json({2}, 2, LoopSchurMethod::ssyt, 3);
  CHECK(j["series"] == k["series"]);
}
