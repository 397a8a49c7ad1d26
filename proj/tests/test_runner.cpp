#include <doctest.h>

#include "qg/errors.hpp"
#include "qg/runner.hpp"

using namespace qg;

namespace {

ErrorCode config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

RunReport synthetic(const std::vector<CheckStatus>& statuses) {
  RunReport r;
  r.config_name = "synthetic";
  for (std::size_t i = 0; i < statuses.size(); ++i) {
    CheckOutcome c;
    c.name = known_checks()[i % known_checks().size()];
    c.status = statuses[i];
    r.checks.push_back(c);
  }
  return r;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK(config_error(R"({"instance": {"kind": "GLq", "q": 2}, "colour": 1})") == ErrorCode::ConfigInvalid);
  CHECK(config_error(R"({"instance": {"kind": "GLq", "q": 2, "extra": 1}})") == ErrorCode::ConfigInvalid);
  CHECK(config_error(R"({"instance": {"kind": "GAB", "random": {"n": 3}}})") == ErrorCode::ConfigInvalid);
  CHECK(config_error(R"({"instance": {"kind": "GLq", "q": 2}, "checks": ["hopf", "nope"]})") ==
        ErrorCode::ConfigInvalid);
  CHECK(config_error(R"({"instance": {"kind": "GAB", "a": [[1, 2], [3]], "b": [[1]]}})") == ErrorCode::ConfigInvalid);
  CHECK(config_error("{not json") == ErrorCode::ConfigInvalid);

  const RunConfig cfg = parse_config(R"({"instance": {"kind": "GAB", "a": [["1/2", 0], [0, 2]], "b": [[2, 0], [0, "1/2"]]},
                                         "checks": ["probe", "invariants", "hopf"], "probe": {"N": 5}})");
  CHECK(cfg.instance.a(0, 0) == Scalar(1) / 2);
  CHECK(cfg.probe.weight_bound == 5);
  CHECK(cfg.probe.slack == 2);
  // Execution order is the fixed check order, not the listed order.
  CHECK(cfg.checks == std::vector<std::string>{"invariants", "hopf", "probe"});
}

TEST_CASE("seeded random instances are reproducible") {
  const RunConfig cfg =
      parse_config(R"({"instance": {"kind": "GAB", "random": {"n": 3, "range": 2}}, "seed": 1})");
  const auto [a, b] = instance_matrices(cfg);
  CHECK(a == ScalarMatrix{{1, 0, -2}, {-1, 2, 2}, {1, -2, 1}});
  CHECK(b == a.transpose().inverse());
  CHECK(instance_matrices(cfg).first == a);
}

TEST_CASE("exit-code contract on synthetic reports") {
  using S = CheckStatus;
  CHECK(exit_code(synthetic({})) == 0);
  CHECK(exit_code(synthetic({S::Pass, S::Pass})) == 0);
  CHECK(exit_code(synthetic({S::Pass, S::Skipped})) == 0);
  CHECK(exit_code(synthetic({S::Pass, S::Uncertified})) == 2);
  CHECK(exit_code(synthetic({S::Uncertified, S::Fail})) == 1);
  CHECK(exit_code(synthetic({S::Fail, S::Pass})) == 1);
  // Every combination of three statuses.
  const std::vector<S> all = {S::Pass, S::Fail, S::Uncertified, S::Skipped};
  for (S x : all)
    for (S y : all)
      for (S z : all) {
        const std::vector<S> v = {x, y, z};
        const bool fail = std::count(v.begin(), v.end(), S::Fail) > 0;
        const bool unc = std::count(v.begin(), v.end(), S::Uncertified) > 0;
        CHECK(exit_code(synthetic(v)) == (fail ? 1 : unc ? 2 : 0));
      }
}

TEST_CASE("empty check list gives an empty passing report") {
  const RunReport r = run_config(parse_config(R"({"instance": {"kind": "GLq", "q": 2}, "checks": []})"));
  CHECK(r.checks.empty());
  CHECK(exit_code(r) == 0);
}

TEST_CASE("q = 1 fails genericity and skips cohomology") {
  const RunReport r =
      run_config(parse_config(R"({"instance": {"kind": "GLq", "q": 1}, "checks": ["invariants", "cohomology"]})"));
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].status == CheckStatus::Fail);
  CHECK(r.checks[1].status == CheckStatus::Skipped);
  CHECK(exit_code(r) == 1);
}

TEST_CASE("a degree bound below the entries is uncertified") {
  const RunReport r = run_config(
      parse_config(R"({"instance": {"kind": "GLq", "q": 2}, "degree_bound": 2, "checks": ["resolution"]})"));
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == CheckStatus::Uncertified);
  CHECK(exit_code(r) == 2);
}

TEST_CASE("failing checks carry normal-form witnesses") {
  // A_q with q = 2 paired with the wrong B: not a valid instance, so the build fails with a witness.
  const RunReport r = run_config(parse_config(
      R"({"instance": {"kind": "GAB", "a": [[0, 1], [-2, 0]], "b": [[1, 1], [0, 1]]}, "checks": ["invariants"]})"));
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].status == CheckStatus::Fail);
  CHECK_FALSE(r.checks[0].witnesses.empty());
}

TEST_CASE("reports are deterministic and round-trip through JSON") {
  const RunConfig cfg = parse_config(R"({"instance": {"kind": "GLq", "q": 2}, "degree_bound": 8,
      "checks": ["invariants", "nakayama", "resolution", "cohomology"]})");
  const RunReport a = run_config(cfg);
  const RunReport b = run_config(cfg);
  CHECK(report_json(a, false) == report_json(b, false));
  CHECK(exit_code(a) == 0);
  CHECK(report_json(a, false).find("timing") == std::string::npos);
  CHECK(report_json(a, true).find("\"timing\"") != std::string::npos);
  const RunReport back = report_from_json(report_json(a, true));
  CHECK(report_json(back, false) == report_json(a, false));

  const std::string md = report_markdown(a);
  CHECK(md.find("| H_b: 1,1,0,1,1 |") != std::string::npos);
  CHECK(md.find("| mu(a) | `4*a` |") != std::string::npos);
  CHECK(md.find("| mu(d) | `1/4*d` |") != std::string::npos);
}
