#include "sumsetlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>

#include "sumsetlab/bounds.hpp"
#include "sumsetlab/constructions.hpp"
#include "sumsetlab/generators.hpp"
#include "sumsetlab/layered_graph.hpp"
#include "sumsetlab/magnification.hpp"
#include "sumsetlab/partition.hpp"

namespace sumsetlab {

namespace {

constexpr std::size_t kFailureLogLimit = 5;

struct CaseOutcome {
  std::optional<std::string> failure;
  std::size_t tally = 0;  // criterion-specific count reported in the summary
};

using CaseFn = std::function<CaseOutcome(std::size_t)>;

CriterionResult make_result(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::vector<CaseOutcome> run_cases(std::size_t count, unsigned threads, const CaseFn& fn) {
  std::vector<CaseOutcome> out(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        out[k] = fn(k);
      } catch (const std::exception& e) {
        out[k].failure = std::string("exception: ") + e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

/// Folds outcomes into `r`; case labels are "<prefix>#<index>".
std::size_t absorb(CriterionResult& r, const std::vector<CaseOutcome>& outcomes, const std::string& prefix = "") {
  std::size_t tally = 0;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    ++r.cases;
    tally += outcomes[k].tally;
    if (outcomes[k].failure) {
      ++r.failures;
      if (r.failure_log.size() < kFailureLogLimit) {
        r.failure_log.push_back("case " + prefix + "#" + std::to_string(k) + ": " + *outcomes[k].failure);
      }
    }
  }
  return tally;
}

std::string describe(const GSet& a, const GSet& b) {
  return "A=" + to_json(a).dump() + " B=" + to_json(b).dump();
}

std::string ids(const std::vector<VertexId>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

struct Context {
  std::uint64_t seed;
  unsigned threads;
  std::optional<std::size_t> cases;

  std::size_t count(std::size_t fallback) const { return cases.value_or(fallback); }
};

// ---------------------------------------------------------------------------

CriterionResult criterion1(const Context& ctx) {
  CriterionResult r = make_result(1, "magnification: parametric flow equals subset enumeration");
  auto out = run_cases(ctx.count(300), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 1, k);
    auto [a, b] = random_pair(rng, 12, 5);
    auto h = static_cast<unsigned>(uniform(rng, 1, 3));
    auto g = build_addition_graph(a, b, h);
    CaseOutcome o;
    for (std::size_t i = 1; i <= h; ++i) {
      auto flow = magnification_flow(g, i);
      auto brute = magnification_bruteforce(g, i).result;
      ++o.tally;
      if (!(flow.value == brute.value) || flow.maximal_tight_set != brute.maximal_tight_set) {
        o.failure = "level " + std::to_string(i) + " flow " + flow.value.str() + " " + ids(flow.maximal_tight_set) +
                    " vs enumeration " + brute.value.str() + " " + ids(brute.maximal_tight_set) + "; " +
                    describe(a, b);
        break;
      }
    }
    return o;
  });
  r.summary = std::to_string(absorb(r, out)) + " (graph, level) comparisons";
  return r;
}

CriterionResult criterion2(const Context& ctx) {
  CriterionResult r = make_result(2, "magnification ratios: D_i^j >= D_j^i for i < j (h = 4)");
  auto out = run_cases(ctx.count(200), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 2, k);
    auto [a, b] = random_pair(rng, 10, 5);
    auto chain = plunnecke_chain(build_addition_graph(a, b, 4));
    CaseOutcome o;
    if (!chain.monotone) {
      auto [i, j] = chain.failures.front();
      o.failure = "D_" + std::to_string(i) + "^" + std::to_string(j) + " < D_" + std::to_string(j) + "^" +
                  std::to_string(i) + "; " + describe(a, b);
    }
    return o;
  });
  absorb(r, out);
  r.summary = "exact integer comparisons";
  return r;
}

CriterionResult criterion3(const Context& ctx) {
  CriterionResult r = make_result(3, "tight channels: |V_j|^h >= |V_0|^(h-j) |V_h|^j and the floor bound at j = 1");
  auto out = run_cases(ctx.count(100), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 3, k);
    auto [a, b] = random_pair(rng, 12, 5);
    auto h = static_cast<unsigned>(uniform(rng, 2, 3));
    auto j = static_cast<std::size_t>(uniform(rng, 1, h));
    auto g = build_addition_graph(a, b, h);
    auto x = magnification_flow(g, j).maximal_tight_set;
    auto ch = channel_of(g, x);
    auto sp = stronger_plunnecke_check(ch, j);
    CaseOutcome o;
    o.tally = x.size() < a.size() ? 1 : 0;
    if (!sp.hypothesis) {
      o.failure = "channel of the maximal tight set is not tight at level " + std::to_string(j);
    } else if (!sp.power_inequality || !sp.floor_bound) {
      o.failure = "layer inequality fails at level " + std::to_string(j);
    }
    if (o.failure) *o.failure += "; " + describe(a, b);
    return o;
  });
  r.summary = std::to_string(absorb(r, out)) + " channels on a proper subset of V_0";
  return r;
}

// Criteria 4 and 5 run on the same graphs.
RandomPair partition_instance(const Context& ctx, std::size_t k, unsigned& h) {
  auto rng = case_rng(ctx.seed, 4, k);
  auto pair = random_pair(rng, 14, 6);
  h = static_cast<unsigned>(uniform(rng, 2, 3));
  return pair;
}

CriterionResult criterion4(const Context& ctx) {
  CriterionResult r = make_result(4, "partition: maximal tight blocks, increasing ratios, exact top-layer accounting");
  auto out = run_cases(ctx.count(100), ctx.threads, [&](std::size_t k) {
    unsigned h = 0;
    auto [a, b] = partition_instance(ctx, k, h);
    auto g = build_addition_graph(a, b, h);
    auto p = partition_graph(g);
    auto v = verify_partition(g, p);
    CaseOutcome o;
    o.tally = p.k() >= 2 ? 1 : 0;
    if (!v.ok()) {
      o.failure = (v.messages.empty() ? std::string("verdict failed") : v.messages.front()) + "; " + describe(a, b);
    } else if (v.top_sum != g.layer_size(h)) {
      o.failure = "block tops sum to " + std::to_string(v.top_sum) + " != |A+hB|; " + describe(a, b);
    }
    return o;
  });
  r.summary = std::to_string(absorb(r, out)) + " graphs with two or more blocks";
  return r;
}

CriterionResult criterion5(const Context& ctx) {
  CriterionResult r = make_result(5, "certified chain: |A+hB| <= sum_i min(alpha_i^h, s alpha_i)|Z_i|");
  auto out = run_cases(ctx.count(100), ctx.threads, [&](std::size_t k) {
    unsigned h = 0;
    auto [a, b] = partition_instance(ctx, k, h);
    auto g = build_addition_graph(a, b, h);
    auto p = partition_graph(g);
    auto hb = iterated_sumset(singleton(b.space(), b.space().identity()), b, h).size();
    auto beta = pseudo_cardinality(hb, h);
    double s = round_up(static_cast<double>(hb) / beta.beta_lo);
    auto cs = certified_min_sum(p, s, h, g.layer_size(h));
    CaseOutcome o;
    if (!cs.pass) {
      o.failure = "bound " + std::to_string(cs.value) + " < observed " + std::to_string(cs.observed) + "; " +
                  describe(a, b);
    }
    return o;
  });
  absorb(r, out);
  r.summary = "bounds rounded up before comparison";
  return r;
}

CriterionResult criterion6(const Context& ctx) {
  CriterionResult r = make_result(6, "restricted graphs: |V_h| <= |V_1||hB|/beta and per-vertex binomial bound");
  auto out = run_cases(ctx.count(100), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 6, k);
    auto [a, b] = random_pair(rng, 12, 5);
    GSet c = random_set_like(rng, a, 10);
    auto h = static_cast<unsigned>(uniform(rng, 2, 3));
    auto g = build_restricted_graph(a, b, c, h);
    auto hb = iterated_sumset(singleton(b.space(), b.space().identity()), b, h).size();
    auto beta = pseudo_cardinality(hb, h);
    double bound = round_up(static_cast<double>(g.layer_size(1)) * static_cast<double>(hb) / beta.beta_lo);
    CaseOutcome o;
    o.tally = g.layer_size(h) < build_addition_graph(a, b, h).layer_size(h) ? 1 : 0;
    if (static_cast<double>(g.layer_size(h)) > bound) {
      o.failure = "|V_h| = " + std::to_string(g.layer_size(h)) + " > " + std::to_string(bound);
    } else if (!per_vertex_binomial_check(g).pass) {
      o.failure = "per-vertex binomial bound fails";
    }
    if (o.failure) *o.failure += "; " + describe(a, b) + " C=" + to_json(c).dump();
    return o;
  });
  r.summary = std::to_string(absorb(r, out)) + " triples where the restriction removed top vertices";
  return r;
}

CriterionResult criterion7(const Context&) {
  CriterionResult r = make_result(7, "first extremal example (h=2, a=4, l=1)");
  r.cases = 1;
  auto c = example1(2, 4, 1);
  auto rep = bound_report(c.a, c.b, 2);
  const double ruzsa = std::pow(5.0 / 3.0, 2) * std::pow(18.0, 1.5);
  const auto* ru = rep.find("ruzsa_universal");
  std::ostringstream os;
  os << "(m, |A+B|, |A+2B|, |2B|) = (" << rep.m << ", " << rep.sum_ab << ", " << rep.observed << ", " << rep.hb
     << "), formula " << c.spec.lower_formula << ", universal bound " << (ru && ru->value ? *ru->value : 0.0);
  r.summary = os.str();
  bool ok = rep.m == 18 && rep.sum_ab == 30 && rep.observed == 48 && rep.hb == 16 && c.spec.lower_formula == 31 &&
            rep.observed >= 31 && ru && ru->value && std::abs(*ru->value - ruzsa) <= 1e-9 * ruzsa &&
            ru->pass.value_or(false) && rep.all_pass();
  if (!ok) {
    r.failures = 1;
    r.failure_log.push_back("measured " + os.str());
  }
  return r;
}

CriterionResult criterion8(const Context&) {
  CriterionResult r = make_result(8, "second extremal example (h=2, a=8, alpha=3/2)");
  r.cases = 1;
  auto c = example2(2, 8, Ratio(3, 2));
  auto cards = cardinality_stream(c.a, c.b, 2);
  std::ostringstream os;
  os << "(m, |A+B|, |A+2B|) = (" << cards[0] << ", " << cards[1] << ", " << cards[2] << "), (b+1)a^h = "
     << c.spec.lower_formula;
  r.summary = os.str();
  bool ok = cards[0] == 66 && cards[1] == 94 && cards[2] == 192 && cards[1] <= 96 &&
            static_cast<std::int64_t>(cards[2]) == c.spec.lower_formula && bound_report(c.a, c.b, 2).all_pass();
  if (!ok) {
    r.failures = 1;
    r.failure_log.push_back("measured " + os.str());
  }
  return r;
}

CriterionResult criterion9(const Context& ctx) {
  CriterionResult r = make_result(9, "commutative graphs: growth bound, and large subsets for t in {0, m/4, m/2}");
  auto growth = run_cases(ctx.count(100), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 9, k);
    auto [a, b] = random_pair(rng, 14, 5);
    auto h = static_cast<unsigned>(uniform(rng, 2, 3));
    auto g = k % 2 ? build_restricted_graph(a, b, random_set_like(rng, a, 8), h) : build_addition_graph(a, b, h);
    auto gc = growth_commutative_bound(g);
    CaseOutcome o;
    if (!gc.pass) {
      o.failure = "|V_h| = " + std::to_string(gc.observed) + " > " + std::to_string(gc.bound) + "; " + describe(a, b);
    }
    return o;
  });
  auto large = run_cases(ctx.count(50), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 90, k);
    auto [a, b] = random_pair(rng, 12, 4);
    auto h = static_cast<unsigned>(uniform(rng, 1, 3));
    auto g = build_addition_graph(a, b, h);
    const auto m = static_cast<std::int64_t>(g.layer_size(0));
    CaseOutcome o;
    for (const Ratio& t : {Ratio(0), Ratio(m, 4), Ratio(m, 2)}) {
      auto ls = large_subset_search(g, t, true);
      if (!ls.found || !ls.second_found.value_or(false)) {
        o.failure = std::string(ls.found ? "second" : "first") + " form has no witness at t = " + t.str() + "; " +
                    describe(a, b) + " h=" + std::to_string(h);
        break;
      }
      if (ls.subset.size() < static_cast<std::size_t>(m)) ++o.tally;
    }
    return o;
  });
  absorb(r, growth, "growth");
  std::size_t proper = absorb(r, large, "subset");
  r.summary = std::to_string(growth.size()) + " growth checks, " + std::to_string(large.size() * 3) +
              " subset searches (" + std::to_string(proper) + " witnesses smaller than V_0)";
  return r;
}

CriterionResult criterion10(const Context& ctx) {
  CriterionResult r = make_result(10, "sumset inequalities for minimizing sets: NAP, restricted growth, Reiher steps");
  auto nap = run_cases(ctx.count(100), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 10, k);
    auto [a, b] = random_pair(rng, 12, 5);
    GSet s = random_set_like(rng, a, 6);
    auto res = nap_check(a, b, s);
    CaseOutcome o;
    if (!res.pass) o.failure = "NAP fails; " + describe(a, b) + " S=" + to_json(s).dump();
    return o;
  });
  auto restricted = run_cases(ctx.count(100), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 100, k);
    auto [a, b] = random_pair(rng, 10, 4);
    GSet j_set = random_set_like(rng, a, 6);
    GSet x = set_difference(a, j_set);
    if (x.empty()) {
      x = a;
      j_set = set_difference(j_set, a);
    }
    auto h = static_cast<unsigned>(uniform(rng, 2, 3));
    auto j = static_cast<unsigned>(uniform(rng, 1, h));
    if (k % 2 == 0) {
      // Shrink X to its maximal tight set so that the hypothesis holds.
      GSet c = j_set.empty() ? j_set : sumset(j_set, b);
      auto g = build_restricted_graph(x, b, c, h);
      std::vector<GElement> keep;
      for (auto v : magnification_flow(g, j).maximal_tight_set) keep.push_back(x.elements()[static_cast<std::size_t>(v)]);
      x = GSet::from_canonical(x.space(), keep);
    }
    std::vector<GSet> samples;
    for (int i = 0; i < 10; ++i) samples.push_back(random_set_like(rng, a, 5));
    auto res = restricted_sumset_check(x, b, j_set, j, h, samples);
    CaseOutcome o;
    o.tally = res.status == RestrictedSumsetCheck::Status::hypothesis_not_met ? 0 : 1;
    if (res.status == RestrictedSumsetCheck::Status::bound_failed) {
      o.failure = std::string(res.conclusion ? "Reiher step" : "restricted growth") + " fails; X=" +
                  to_json(x).dump() + " B=" + to_json(b).dump() + " J=" + to_json(j_set).dump() +
                  " j=" + std::to_string(j) + " h=" + std::to_string(h);
    }
    return o;
  });
  absorb(r, nap, "nap");
  std::size_t met = absorb(r, restricted, "restricted");
  r.summary = std::to_string(nap.size()) + " NAP checks; restricted-growth hypothesis held in " + std::to_string(met) +
              " of " + std::to_string(restricted.size()) + " cases";
  return r;
}

CriterionResult criterion11(const Context& ctx) {
  CriterionResult r = make_result(11, "pseudo-cardinality: exact at integers, certified brackets elsewhere");
  std::vector<CaseOutcome> grid;
  for (unsigned h = 1; h <= 6; ++h) {
    for (std::int64_t rr = 1; rr <= 30; ++rr) {
      CaseOutcome o;
      auto n = static_cast<std::uint64_t>(multiset_count(rr, h));
      auto pc = pseudo_cardinality(n, h);
      if (!pc.exact || pc.beta != static_cast<double>(rr) || pc.beta_lo != pc.beta || pc.beta_hi != pc.beta) {
        o.failure = "beta(" + std::to_string(n) + ", " + std::to_string(h) + ") is not exactly " + std::to_string(rr);
      }
      grid.push_back(o);
    }
  }
  auto random = run_cases(ctx.count(200), ctx.threads, [&](std::size_t k) {
    auto rng = case_rng(ctx.seed, 11, k);
    auto h = static_cast<unsigned>(uniform(rng, 1, 6));
    auto n = static_cast<std::uint64_t>(uniform(rng, 1, 1'000'000));
    auto pc = pseudo_cardinality(n, h);
    auto next = pseudo_cardinality(n + 1, h);
    CaseOutcome o;
    const BigRational target{BigInt(n)};
    if (pc.beta_hi - pc.beta_lo > kBetaTolerance * std::max(1.0, pc.beta)) {
      o.failure = "bracket too wide";
    } else if (rising_binomial_exact(exact_rational(pc.beta_lo), h) > target ||
               rising_binomial_exact(exact_rational(pc.beta_hi), h) < target) {
      o.failure = "bracket does not enclose N";
    } else if (!(pc.beta < next.beta)) {
      o.failure = "not increasing in N";
    }
    if (o.failure) *o.failure += " at N=" + std::to_string(n) + ", h=" + std::to_string(h);
    return o;
  });
  absorb(r, grid, "grid");
  absorb(r, random, "random");
  r.summary = std::to_string(grid.size()) + " integer points, " + std::to_string(random.size()) + " random N";
  return r;
}

}  // namespace

bool SuiteReport::pass() const noexcept {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass(); });
}

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SUMSETLAB_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

SuiteReport run_suite(const SuiteOptions& opts) {
  using Fn = CriterionResult (*)(const Context&);
  static constexpr Fn kCriteria[kCriterionCount] = {criterion1, criterion2, criterion3, criterion4,
                                                    criterion5, criterion6, criterion7, criterion8,
                                                    criterion9, criterion10, criterion11};
  Context ctx{opts.seed, resolve_threads(opts.threads), opts.cases};
  SuiteReport report;
  report.seed = opts.seed;
  report.cases_override = opts.cases;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), id) == opts.only.end()) continue;
    try {
      report.criteria.push_back(kCriteria[id - 1](ctx));
    } catch (const std::exception& e) {
      CriterionResult r = make_result(id, "criterion aborted");
      r.cases = 1;
      r.failures = 1;
      r.failure_log.push_back(std::string("exception: ") + e.what());
      report.criteria.push_back(r);
    }
  }
  return report;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << "criterion " << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << "  " << r.title << " [" << r.cases
     << " cases, " << r.failures << " failures";
  if (!r.summary.empty()) os << "; " << r.summary;
  os << ']';
  return os.str();
}

std::string format_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "sumsetlab verify suite, seed " << r.seed;
  if (r.cases_override) os << ", cases " << *r.cases_override;
  os << '\n';
  for (const auto& c : r.criteria) {
    os << format_line(c) << '\n';
    for (const auto& f : c.failure_log) os << "    " << f << '\n';
  }
  os << (r.pass() ? "all criteria pass" : "some criteria FAILED") << '\n';
  return os.str();
}

nlohmann::json to_json(const SuiteReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["seed"] = r.seed;
  j["cases"] = r.cases_override ? nlohmann::json(*r.cases_override) : nlohmann::json(nullptr);
  auto arr = nlohmann::json::array();
  for (const auto& c : r.criteria) {
    arr.push_back({{"id", c.id},
                   {"title", c.title},
                   {"cases", c.cases},
                   {"failures", c.failures},
                   {"pass", c.pass()},
                   {"summary", c.summary},
                   {"failure_log", c.failure_log}});
  }
  j["criteria"] = arr;
  j["pass"] = r.pass();
  return j;
}

}  // namespace sumsetlab
