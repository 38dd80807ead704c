#include <doctest.h>

#include "sumsetlab/generators.hpp"
#include "sumsetlab/suite.hpp"

using namespace sumsetlab;

TEST_SUITE("suite") {
  TEST_CASE("case streams are reproducible and distinct") {
    auto a = case_rng(1, 2, 3);
    auto b = case_rng(1, 2, 3);
    auto c = case_rng(1, 2, 4);
    auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    for (int i = 0; i < 1000; ++i) {
      auto v = uniform(a, -3, 5);
      CHECK(v >= -3);
      CHECK(v <= 5);
    }
  }

  TEST_CASE("report does not depend on the worker count") {
    SuiteOptions one;
    one.seed = 9;
    one.cases = 15;
    one.threads = 1;
    auto many = one;
    many.threads = 4;
    CHECK(to_json(run_suite(one)) == to_json(run_suite(many)));
  }

  TEST_CASE("filtered run") {
    SuiteOptions opts;
    opts.only = {11};
    auto r = run_suite(opts);
    REQUIRE(r.criteria.size() == 1);
    CHECK(r.criteria[0].id == 11);
    CHECK(r.pass());
    CHECK(format_line(r.criteria[0]).rfind("criterion 11: PASS", 0) == 0);
  }
}
