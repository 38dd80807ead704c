#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumsetlab/group.hpp"
#include "sumsetlab/layered_graph.hpp"
#include "sumsetlab/partition.hpp"
#include "sumsetlab/ratio.hpp"

namespace sumsetlab {

// ---------------------------------------------------------------------------
// Pseudo-cardinality

/// prod_{i<h} (beta + i) / h!, i.e. binom(beta + h - 1, h) for real beta.
double rising_binomial(double beta, unsigned h);
BigRational rising_binomial_exact(const BigRational& beta, unsigned h);
/// binom(n + h - 1, h) for integer n >= 0.
BigInt multiset_count(std::int64_t n, unsigned h);

/// The positive real beta with binom(beta + h - 1, h) = n.
struct PseudoCardinality {
  unsigned h = 1;
  std::uint64_t n = 1;
  double beta = 1;
  /// rising_binomial(beta_lo) <= n <= rising_binomial(beta_hi), certified
  /// with exact rational arithmetic on the two endpoints.
  double beta_lo = 1;
  double beta_hi = 1;
  bool exact = false;  // beta is an integer and lo == hi == beta
};

inline constexpr double kBetaTolerance = 1e-9;

/// Bracket width ends up <= rel_tol * max(1, beta). Throws DomainError for
/// n == 0 or h == 0.
PseudoCardinality pseudo_cardinality(std::uint64_t n, unsigned h, double rel_tol = kBetaTolerance);

/// x rounded away from zero by a relative margin far above the rounding
/// error of the handful of floating operations behind any bound here.
double round_up(double x);

// ---------------------------------------------------------------------------
// Bound report for a pair (A, B)

struct NamedBound {
  std::string name;
  std::optional<double> value;  // rounded up; absent when not applicable
  std::string observed_quantity;
  std::size_t observed = 0;
  bool asserted = true;          // false: asymptotic main term, report only
  std::optional<bool> pass;      // verdict for asserted, applicable bounds
  std::string note;
};

struct BoundReport {
  unsigned h = 1;
  std::size_t m = 0;           // |A|
  std::size_t sum_ab = 0;      // |A+B|
  std::size_t hb = 0;          // |hB|
  std::size_t observed = 0;    // |A+hB|
  bool a_equals_b = false;
  Ratio alpha;                 // |A+B| / |A|
  Ratio alpha1;                // D_1(G_+(A,B))
  PseudoCardinality beta;
  double s = 0;                // |hB| / beta, rounded up
  std::optional<double> t;     // slope of the linear majorant, h >= 2 only
  std::vector<Ratio> block_ratios;
  std::vector<std::size_t> block_sizes;
  std::vector<NamedBound> bounds;

  bool all_pass() const noexcept;
  const NamedBound* find(const std::string& name) const;
};

struct BoundOptions {
  std::size_t cap = kUnlimited;
  double beta_tolerance = kBetaTolerance;
};

BoundReport bound_report(const GSet& a, const GSet& b, unsigned h, const BoundOptions& opts = {});

nlohmann::json to_json(const BoundReport& r);
std::string csv_header();
std::string csv_row(const BoundReport& r, const std::string& instance);

// ---------------------------------------------------------------------------
// Individual certified checks

struct CertifiedSum {
  double value = 0;  // sum_i min(alpha_i^h, s alpha_i) |Z_i|, rounded up
  std::size_t observed = 0;
  bool pass = false;
};

/// `s` should already be an upper bound for |hB| / beta.
CertifiedSum certified_min_sum(const PartitionResult& p, double s, unsigned h, std::size_t observed);

struct LinearMajorant {
  double t = 0;
  double anchor = 0;  // s^(1/(h-1)), where the two branches of the minimum meet
  std::size_t samples = 0;
  bool holds = true;  // min(a^h, s a) <= alpha_1^h + t (a - alpha_1) at every sample
  double worst_slack = 0;
};

/// t = (s^(h/(h-1)) - alpha_1^h) / (s^(1/(h-1)) - alpha_1), checked on
/// `samples` points of [alpha_1, 2 s^(1/(h-1)) + 1]. Throws DomainError when
/// h < 2 or alpha_1 >= s^(1/(h-1)).
LinearMajorant linear_majorant(double alpha1, double s, unsigned h, std::size_t samples = 64);

struct GrowthCommutative {
  std::size_t max_image = 0;  // M
  PseudoCardinality beta;
  double bound = 0;           // M |V_1| / beta, rounded up
  std::size_t observed = 0;   // |V_h|
  bool pass = false;
};

GrowthCommutative growth_commutative_bound(const LayeredGraph& g, double beta_tolerance = kBetaTolerance);

struct PerVertexBinomial {
  bool pass = true;
  std::optional<VertexId> first_failure;
};

/// |image({v}, h)| <= binom(|image({v}, 1)| + h - 1, h) for every v in V_0.
PerVertexBinomial per_vertex_binomial_check(const LayeredGraph& g);

struct GrowthGeneral {
  double value = 0;  // (n - m^(1-1/h) + 3h)^h / h!, main term only
  BigInt contraction;  // binom(n + h - 1, h)
  bool precondition = false;  // n >= m^(1-1/h)
};

GrowthGeneral growth_general_bound(std::uint64_t m, std::uint64_t n, unsigned h);

struct LargeSubset {
  bool found = false;
  std::vector<VertexId> subset;
  std::size_t image_size = 0;
  /// Same search against alpha_1^h t + (|X| - t)((n - alpha_1 t)/(m - t))^h.
  std::optional<bool> second_found;
  std::vector<VertexId> second_subset;
};

/// First X (ascending bitmask order over V_0) with |X| > t and
/// |image(X, h)| <= (|X| - t)(n / (m - t))^h, compared exactly.
LargeSubset large_subset_search(const LayeredGraph& g, const Ratio& t, bool with_alpha1 = false,
                                std::size_t max_bottom = 22);

struct NapCheck {
  std::vector<GElement> x;
  Ratio ratio;                 // |X+B| / |X|
  std::size_t sx = 0;          // |S+X|
  std::size_t sxb = 0;         // |S+X+B|
  bool pass = false;           // |S+X+B| <= ratio |S+X|
};

NapCheck nap_check(const GSet& a, const GSet& b, const GSet& s, std::size_t cap = kUnlimited);

struct RestrictedSumsetCheck {
  enum class Status { pass, hypothesis_not_met, bound_failed };
  Status status = Status::pass;
  std::size_t x_size = 0;
  std::size_t level_j = 0;   // |(X+jB) \ (J+jB)|
  std::size_t level_h = 0;   // |(X+hB) \ (J+hB)|
  bool conclusion = true;
  std::size_t reiher_samples = 0;
  std::size_t reiher_failures = 0;
};

/// Requires X and J disjoint (InputError) and |X| <= max_x (GuardError).
RestrictedSumsetCheck restricted_sumset_check(const GSet& x, const GSet& b, const GSet& j_set, unsigned j,
                                              unsigned h, const std::vector<GSet>& samples,
                                              std::size_t max_x = 22, std::size_t cap = kUnlimited);

std::string to_string(RestrictedSumsetCheck::Status s);

}  // namespace sumsetlab
