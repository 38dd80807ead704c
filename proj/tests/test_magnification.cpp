#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sumsetlab/errors.hpp"
#include "sumsetlab/generators.hpp"
#include "sumsetlab/magnification.hpp"

using namespace sumsetlab;
using testing::labels_of;
using testing::make_graph;
using testing::zset;

namespace {

oracle::PointSet tight_points(const LayeredGraph& g, const std::vector<VertexId>& vs) {
  oracle::PointSet out;
  for (auto v : vs) out.insert(g.label(v)->coords);
  return out;
}

}  // namespace

TEST_SUITE("magnification") {
  TEST_CASE("interval with a far point") {
    auto g = build_addition_graph(zset({0, 1, 2, 3, 100}), zset({0, 1}), 2);
    auto d1 = magnification_flow(g, 1);
    CHECK(d1.value == Ratio(5, 4));
    CHECK(labels_of(g, d1.maximal_tight_set) == std::vector<std::int64_t>{0, 1, 2, 3});
    CHECK(d1.witness_check);
    auto d2 = magnification_flow(g, 2);
    CHECK(d2.value == Ratio(3, 2));
    CHECK(labels_of(g, d2.maximal_tight_set) == std::vector<std::int64_t>{0, 1, 2, 3});
  }

  TEST_CASE("fan graph: tight set of two vertices") {
    // a=1 -> x; b=2 -> x, y; c=3 -> y, z, w
    auto g = make_graph({{1, 2, 3}, {4, 5, 6, 7}}, {{1, 4}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {3, 7}});
    auto brute = magnification_bruteforce(g, 1);
    CHECK(brute.result.value == Ratio(1));
    CHECK(brute.result.maximal_tight_set == std::vector<VertexId>{1, 2});
    CHECK(brute.minimizers.size() == 2);  // {a} and {a, b}
    auto flow = magnification_flow(g, 1);
    CHECK(flow.value == Ratio(1));
    CHECK(flow.maximal_tight_set == std::vector<VertexId>{1, 2});
    CHECK(to_json(flow) == nlohmann::json::parse(R"({"level":1,"ratio":[1,1],"tight_set":[1,2]})"));
  }

  TEST_CASE("whole group is its own image") {
    auto z4 = testing::cset({4}, {{0}, {1}, {2}, {3}});
    auto g = build_addition_graph(z4, testing::cset({4}, {{1}}), 2);
    auto r = magnification_flow(g, 2);
    CHECK(r.value == Ratio(1));
    CHECK(r.maximal_tight_set.size() == 4);
  }

  TEST_CASE("enumeration guard") {
    std::vector<std::vector<std::int64_t>> pts;
    for (int i = 0; i < 23; ++i) pts.push_back({i * 7});
    auto g = build_addition_graph(GSet(GroupSpace({0}), pts), zset({0, 1}), 1);
    try {
      (void)magnification_bruteforce(g, 1);
      FAIL("no guard");
    } catch (const GuardError& e) {
      CHECK(e.guard() == "subset-enumeration");
    }
    CHECK(magnification_flow(g, 1).value == Ratio(2));
  }

  TEST_CASE("flow agrees with the naive set oracle") {
    for (std::uint64_t k = 0; k < 150; ++k) {
      auto rng = case_rng(2024, 0, k);
      auto [a, b] = random_pair(rng, 9, 4);
      auto h = static_cast<unsigned>(uniform(rng, 1, 3));
      auto g = build_addition_graph(a, b, h);
      auto mod = oracle::moduli(a);
      for (unsigned i = 1; i <= h; ++i) {
        auto expect = oracle::magnification(oracle::points(a), oracle::points(b), {}, i, mod);
        auto got = magnification_flow(g, i);
        CHECK(got.value == Ratio(expect.num, expect.den));
        CHECK(tight_points(g, got.maximal_tight_set) == expect.tight);
      }
    }
  }

  TEST_CASE("flow agrees with the oracle on restricted graphs") {
    for (std::uint64_t k = 0; k < 100; ++k) {
      auto rng = case_rng(77, 0, k);
      auto [a, b] = random_pair(rng, 9, 4);
      auto c = random_set_like(rng, a, 6);
      auto g = build_restricted_graph(a, b, c, 2);
      auto mod = oracle::moduli(a);
      for (unsigned i = 1; i <= 2; ++i) {
        auto expect = oracle::magnification(oracle::points(a), oracle::points(b), oracle::points(c), i, mod);
        auto got = magnification_flow(g, i);
        CHECK(got.value == Ratio(expect.num, expect.den));
        CHECK(tight_points(g, got.maximal_tight_set) == expect.tight);
        CHECK(magnification_bruteforce(g, i).result.value == got.value);
      }
    }
  }

  TEST_CASE("ratio chain is power-monotone") {
    for (std::uint64_t k = 0; k < 100; ++k) {
      auto rng = case_rng(3, 0, k);
      auto [a, b] = random_pair(rng, 10, 4);
      auto chain = plunnecke_chain(build_addition_graph(a, b, 4));
      CHECK(chain.ratios.size() == 4);
      CHECK(chain.monotone);
      // D_i <= D_1^i in particular.
      for (unsigned i = 1; i <= 4; ++i) CHECK(chain.ratios[i - 1].to_big() <= chain.ratios[0].pow(i));
    }
  }

  TEST_CASE("layer inequality on tight channels") {
    auto g = build_addition_graph(zset({0, 1, 2, 3, 100}), zset({0, 1}), 3);
    auto x = magnification_flow(g, 1).maximal_tight_set;
    auto ch = channel_of(g, x);
    auto sp = stronger_plunnecke_check(ch, 1);
    CHECK(sp.hypothesis);
    CHECK(sp.power_inequality);
    CHECK(sp.floor_bound);  // |X+3B| = 7 <= floor((5/4)^3 * 4) = 7
    CHECK(ch.layer_size(3) == 7);
    // The whole graph is not tight at level 1, so nothing is asserted.
    CHECK_FALSE(stronger_plunnecke_check(g, 1).hypothesis);
  }
}
