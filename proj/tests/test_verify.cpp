#include <doctest.h>

#include "mzv/error.hpp"
#include "mzv/verify.hpp"

using namespace mzv;
using namespace mzv::verify;

TEST_CASE("suite registry") {
  CHECK(is_suite("stuffle-exact"));
  CHECK_FALSE(is_suite("nope"));
  CHECK_THROWS_AS(default_spec("nope"), Error);
  for (const auto& name : suite_names()) CHECK_FALSE(suite_anchor(name).empty());
}

TEST_CASE("merge keeps defaults for unset fields") {
  SuiteSpec o;
  o.max_weight = 3;
  const SuiteSpec s = merge_spec("stuffle-exact", o);
  CHECK(s.max_weight == 3);
  CHECK(s.cutoff == default_spec("stuffle-exact").cutoff);
}

TEST_CASE("small suite is deterministic and serializes") {
  SuiteSpec o;
  o.max_weight = 3;
  const SuiteSpec s = merge_spec("stuffle-exact", o);
  const CheckReport a = run_suite(s);
  const CheckReport b = run_suite(s);
  REQUIRE(a.checks.size() == b.checks.size());
  CHECK(a.passed());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].pass == b.checks[i].pass);
  }
  const std::string lines = to_jsonl(a);
  std::size_t count = 0;
  for (char c : lines) count += c == '\n';
  CHECK(count == a.checks.size() + 1);
  const Json last = Json::parse(lines.substr(lines.rfind('\n', lines.size() - 2) + 1));
  CHECK(last.at("summary").contains("wall_seconds"));
  CHECK(summary_table({a}).find("stuffle-exact") != std::string::npos);
}

TEST_CASE("numeric suite at reduced grid") {
  SuiteSpec o;
  o.max_weight = 2;
  const CheckReport r = run_suite(merge_spec("andipode", o));
  CHECK(r.passed());
  CHECK(failure_details(r).empty());
}
