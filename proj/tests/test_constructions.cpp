#include <doctest.h>

#include "sumsetlab/bounds.hpp"
#include "sumsetlab/constructions.hpp"
#include "sumsetlab/errors.hpp"

using namespace sumsetlab;

namespace {

std::size_t hb_size(const GSet& b, unsigned h) {
  return iterated_sumset(singleton(b.space(), b.space().identity()), b, h).size();
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("first example, h=2 a=4 l=1") {
    auto c = example1(2, 4, 1);
    CHECK(c.spec.b == 4);
    CHECK(c.spec.k.value() == 4);
    CHECK(c.spec.predicted_m == 18);
    CHECK(c.spec.lower_formula == 31);
    CHECK(c.spec.sum_ab_cap == 48);
    auto cards = cardinality_stream(c.a, c.b, 2);
    CHECK(cards == std::vector<std::size_t>{18, 30, 48});
    CHECK(hb_size(c.b, 2) == 16);
  }

  TEST_CASE("first example, h=2 a=2 l=1") {
    auto c = example1(2, 2, 1);
    CHECK(c.spec.k.value() == 3);
    CHECK(c.a.size() == 5);
  }

  TEST_CASE("first example invariants over parameters") {
    struct P {
      unsigned h;
      std::int64_t a, l;
    };
    for (auto p : {P{2, 4, 1}, P{2, 4, 2}, P{2, 6, 1}, P{3, 3, 1}, P{3, 6, 1}, P{2, 2, 3}, P{1, 5, 2}}) {
      auto c = example1(p.h, p.a, p.l);
      auto cards = cardinality_stream(c.a, c.b, p.h);
      INFO("h=" << p.h << " a=" << p.a << " l=" << p.l);
      CHECK(static_cast<std::int64_t>(cards[0]) == c.spec.predicted_m);
      CHECK(static_cast<std::int64_t>(cards[1]) <= c.spec.sum_ab_cap);
      CHECK(static_cast<std::int64_t>(cards[p.h]) >= c.spec.lower_formula);
      CHECK(static_cast<std::int64_t>(hb_size(c.b, p.h)) == c.spec.predicted_hb);
    }
  }

  TEST_CASE("first example needs h | a^(h-1)") {
    CHECK_THROWS_AS(example1(3, 2, 1), InputError);
    CHECK_THROWS_AS(example1(2, 3, 1), InputError);
    CHECK_THROWS_AS(example1(2, 0, 1), InputError);
  }

  TEST_CASE("second example, h=2 a=8 alpha=3/2") {
    auto c = example2(2, 8, Ratio(3, 2));
    CHECK(c.spec.b == 2);
    CHECK(c.spec.predicted_m == 66);
    CHECK(c.spec.sum_ab_cap == 96);
    auto cards = cardinality_stream(c.a, c.b, 2);
    CHECK(cards == std::vector<std::size_t>{66, 94, 192});
    CHECK(cards[2] == static_cast<std::size_t>(c.spec.lower_formula));
  }

  TEST_CASE("second example edge cases") {
    auto c1 = example2(2, 4, Ratio(1));
    CHECK(c1.spec.b == 0);
    CHECK(cardinality_stream(c1.a, c1.b, 2) == std::vector<std::size_t>{16, 16, 16});
    auto c2 = example2(2, 4, Ratio(3, 2));
    CHECK(c2.spec.b == 1);
    auto cards = cardinality_stream(c2.a, c2.b, 2);
    CHECK(cards[0] == 17);
    CHECK(cards[2] == 32);
  }

  TEST_CASE("second example invariants over parameters") {
    struct P {
      unsigned h;
      std::int64_t a;
      Ratio alpha;
    };
    for (auto p : {P{2, 8, Ratio(3, 2)}, P{2, 6, Ratio(2)}, P{3, 3, Ratio(2)}, P{3, 6, Ratio(3, 2)},
                   P{2, 10, Ratio(7, 5)}}) {
      auto c = example2(p.h, p.a, p.alpha);
      auto cards = cardinality_stream(c.a, c.b, p.h);
      INFO("h=" << p.h << " a=" << p.a << " alpha=" << p.alpha.str());
      CHECK(static_cast<std::int64_t>(cards[0]) == c.spec.predicted_m);
      CHECK(static_cast<std::int64_t>(cards[1]) <= c.spec.sum_ab_cap + c.spec.b);
      CHECK(static_cast<std::int64_t>(cards[p.h]) == c.spec.lower_formula);
      // The subgroup sum absorbs B.
      std::vector<GElement> grid;
      for (const auto& e : c.a) {
        if (e.coords.back() == 0) grid.push_back(e);
      }
      GSet a1 = GSet::from_canonical(c.a.space(), grid);
      CHECK(iterated_sumset(a1, c.b, p.h) == a1);
      CHECK(bound_report(c.a, c.b, p.h).all_pass());
    }
  }

  TEST_CASE("second example needs integral b") {
    CHECK_THROWS_AS(example2(2, 3, Ratio(3, 2)), InputError);
    CHECK_THROWS_AS(example2(2, 4, Ratio(1, 2)), InputError);
  }

  TEST_CASE("construction metadata json") {
    auto j = to_json(example1(2, 4, 1).spec);
    CHECK(j["which"] == "example1");
    CHECK(j["predicted"]["m"] == 18);
    CHECK(j["moduli"] == nlohmann::json({4, 4, 4, 4}));
    auto j2 = to_json(example2(2, 8, Ratio(3, 2)).spec);
    CHECK(j2["alpha"] == nlohmann::json({3, 2}));
    CHECK(j2["moduli"] == nlohmann::json({8, 8, 3}));
  }
}
