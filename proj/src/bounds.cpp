#include "sumsetlab/bounds.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/magnification.hpp"

namespace sumsetlab {

namespace {

constexpr double kRoundingSlack = 1e-12;

BigInt factorial(unsigned h) {
  BigInt f = 1;
  for (unsigned i = 2; i <= h; ++i) f *= i;
  return f;
}

BigRational big(std::uint64_t n) { return BigRational(BigInt(n)); }

std::string fmt_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

// ---------------------------------------------------------------------------
// Pseudo-cardinality

double rising_binomial(double beta, unsigned h) {
  double v = 1;
  for (unsigned i = 0; i < h; ++i) v *= (beta + i) / (i + 1);
  return v;
}

BigRational rising_binomial_exact(const BigRational& beta, unsigned h) {
  BigRational v = 1;
  for (unsigned i = 0; i < h; ++i) v *= beta + BigRational(i);
  return v / BigRational(factorial(h));
}

BigInt multiset_count(std::int64_t n, unsigned h) {
  if (n < 0) throw DomainError("multiset_count needs n >= 0");
  BigInt v = 1;
  for (unsigned i = 0; i < h; ++i) v *= BigInt(n + i);
  return v / factorial(h);
}

PseudoCardinality pseudo_cardinality(std::uint64_t n, unsigned h, double rel_tol) {
  if (n == 0) throw DomainError("pseudo-cardinality needs N >= 1");
  if (h == 0) throw DomainError("pseudo-cardinality needs h >= 1");
  PseudoCardinality pc;
  pc.h = h;
  pc.n = n;
  const BigInt target(n);

  // Largest integer r >= 1 with binom(r + h - 1, h) <= N; r <= N always.
  std::uint64_t lo = 1;
  std::uint64_t hi = n;
  while (lo < hi) {
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (multiset_count(static_cast<std::int64_t>(mid), h) <= target) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const double r = static_cast<double>(lo);
  if (multiset_count(static_cast<std::int64_t>(lo), h) == target) {
    pc.beta = pc.beta_lo = pc.beta_hi = r;
    pc.exact = true;
    return pc;
  }

  const BigRational goal(target);
  double a = r;
  double b = r + 1;
  const double width = rel_tol * std::max(1.0, r);
  while (b - a > width) {
    double mid = a + (b - a) / 2;
    if (mid <= a || mid >= b) break;
    if (rising_binomial_exact(exact_rational(mid), h) <= goal) {
      a = mid;
    } else {
      b = mid;
    }
  }
  pc.beta_lo = a;
  pc.beta_hi = b;
  pc.beta = a + (b - a) / 2;
  return pc;
}

double round_up(double x) {
  double y = x + std::abs(x) * kRoundingSlack;
  return std::nextafter(y, std::numeric_limits<double>::infinity());
}

// ---------------------------------------------------------------------------
// Individual checks

CertifiedSum certified_min_sum(const PartitionResult& p, double s, unsigned h, std::size_t observed) {
  double total = 0;
  for (const auto& blk : p.blocks) {
    double a = blk.ratio.to_double();
    total += std::min(std::pow(a, h), s * a) * static_cast<double>(blk.bottom.size());
  }
  CertifiedSum out;
  out.value = round_up(total);
  out.observed = observed;
  out.pass = static_cast<double>(observed) <= out.value;
  return out;
}

LinearMajorant linear_majorant(double alpha1, double s, unsigned h, std::size_t samples) {
  if (h < 2) throw DomainError("linear majorant needs h >= 2");
  const double anchor = std::pow(s, 1.0 / (h - 1));
  if (!(alpha1 < anchor)) throw DomainError("linear majorant needs alpha_1 < s^(1/(h-1))");
  LinearMajorant lm;
  lm.anchor = anchor;
  lm.t = (std::pow(s, static_cast<double>(h) / (h - 1)) - std::pow(alpha1, h)) / (anchor - alpha1);
  lm.samples = samples;
  const double top = 2 * anchor + 1;
  const double base = std::pow(alpha1, h);
  lm.worst_slack = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < samples; ++k) {
    double a = samples == 1 ? alpha1 : alpha1 + (top - alpha1) * static_cast<double>(k) / (samples - 1);
    double lhs = std::min(std::pow(a, h), s * a);
    double rhs = base + lm.t * (a - alpha1);
    lm.worst_slack = std::min(lm.worst_slack, rhs - lhs);
    // Both sides agree to rounding at the anchors.
    if (lhs > round_up(rhs) + 1e-12 * std::max(1.0, std::abs(rhs))) lm.holds = false;
  }
  return lm;
}

GrowthCommutative growth_commutative_bound(const LayeredGraph& g, double beta_tolerance) {
  if (g.height() < 1) throw InputError("growth bound needs height >= 1");
  const auto h = static_cast<unsigned>(g.height());
  GrowthCommutative out;
  auto sizes = singleton_image_sizes(g, h);
  out.max_image = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  out.observed = g.layer_size(h);
  if (out.max_image == 0) {
    out.bound = 0;
    out.pass = out.observed == 0;
    return out;
  }
  out.beta = pseudo_cardinality(out.max_image, h, beta_tolerance);
  out.bound = round_up(static_cast<double>(out.max_image) * static_cast<double>(g.layer_size(1)) /
                       out.beta.beta_lo);
  out.pass = static_cast<double>(out.observed) <= out.bound;
  return out;
}

PerVertexBinomial per_vertex_binomial_check(const LayeredGraph& g) {
  PerVertexBinomial out;
  if (g.height() < 1) return out;
  const auto h = static_cast<unsigned>(g.height());
  auto one = singleton_image_sizes(g, 1);
  auto top = singleton_image_sizes(g, h);
  auto bottom = g.layer(0);
  for (std::size_t k = 0; k < one.size(); ++k) {
    if (BigInt(top[k]) > multiset_count(static_cast<std::int64_t>(one[k]), h)) {
      out.pass = false;
      out.first_failure = bottom[k];
      break;
    }
  }
  return out;
}

GrowthGeneral growth_general_bound(std::uint64_t m, std::uint64_t n, unsigned h) {
  if (h == 0 || m == 0) throw DomainError("growth_general_bound needs m, h >= 1");
  GrowthGeneral out;
  const double root = std::pow(static_cast<double>(m), 1.0 - 1.0 / h);
  out.precondition = static_cast<double>(n) >= root;
  double base = static_cast<double>(n) - root + 3.0 * h;
  double v = 1;
  for (unsigned i = 1; i <= h; ++i) v *= base / i;
  out.value = v;
  out.contraction = multiset_count(static_cast<std::int64_t>(n), h);
  return out;
}

LargeSubset large_subset_search(const LayeredGraph& g, const Ratio& t, bool with_alpha1,
                                std::size_t max_bottom) {
  if (g.height() < 1) throw InputError("large subset search needs height >= 1");
  const auto h = static_cast<unsigned>(g.height());
  const auto bottom = g.layer(0);
  const std::size_t m = bottom.size();
  if (m > max_bottom) throw GuardError("subset-enumeration", "large subset search over |V_0| > guard");
  if (!(t < Ratio(static_cast<std::int64_t>(m)))) throw DomainError("large subset search needs t < |V_0|");

  const std::size_t n = g.layer_size(1);
  const BigRational tb = t.to_big();
  const BigRational mt = big(m) - tb;
  BigRational factor = 1;  // (n / (m - t))^h
  {
    BigRational q = big(n) / mt;
    for (unsigned i = 0; i < h; ++i) factor *= q;
  }
  BigRational factor2 = 1;  // ((n - alpha_1 t) / (m - t))^h
  BigRational offset2 = 0;  // alpha_1^h t
  if (with_alpha1) {
    Ratio a1 = magnification_flow(g, 1).value;
    BigRational q = (big(n) - a1.to_big() * tb) / mt;
    for (unsigned i = 0; i < h; ++i) factor2 *= q;
    offset2 = a1.pow(h) * tb;
  }

  // Top-layer image of every bottom vertex as a bitset.
  const std::size_t top_n = g.layer_size(h);
  const std::size_t words = (top_n + 63) / 64;
  const std::size_t top_off = g.layer_offset(h);
  std::vector<std::vector<std::uint64_t>> img(m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t k = 0; k < m; ++k) {
    VertexId v = bottom[k];
    for (auto y : image(g, std::span<const VertexId>(&v, 1), h)) {
      std::size_t pos = *g.find_index(y) - top_off;
      img[k][pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
  }

  LargeSubset out;
  if (with_alpha1) out.second_found = false;
  // Depth-first from the highest bit, 0 before 1: leaves in ascending mask order.
  std::vector<std::vector<std::uint64_t>> stack(m + 1, std::vector<std::uint64_t>(words, 0));
  std::vector<char> chosen(m, 0);
  auto to_subset = [&] {
    std::vector<VertexId> s;
    for (std::size_t k = 0; k < m; ++k) {
      if (chosen[k]) s.push_back(bottom[k]);
    }
    return s;
  };
  auto done = [&] { return out.found && (!with_alpha1 || *out.second_found); };
  auto leaf = [&](std::size_t size) {
    if (size == 0) return;
    BigRational xs = big(size);
    if (!(xs > tb)) return;
    std::size_t cnt = 0;
    for (auto w : stack[m]) cnt += static_cast<std::size_t>(std::popcount(w));
    BigRational lhs = big(cnt);
    if (!out.found && lhs <= (xs - tb) * factor) {
      out.found = true;
      out.subset = to_subset();
      out.image_size = cnt;
    }
    if (with_alpha1 && !*out.second_found && lhs <= offset2 + (xs - tb) * factor2) {
      out.second_found = true;
      out.second_subset = to_subset();
    }
  };
  auto rec = [&](auto&& self, std::size_t depth, std::size_t size) -> void {
    if (done()) return;
    if (depth == m) {
      leaf(size);
      return;
    }
    const std::size_t bit = m - 1 - depth;
    stack[depth + 1] = stack[depth];
    chosen[bit] = 0;
    self(self, depth + 1, size);
    if (done()) return;
    for (std::size_t w = 0; w < words; ++w) stack[depth + 1][w] = stack[depth][w] | img[bit][w];
    chosen[bit] = 1;
    self(self, depth + 1, size + 1);
    chosen[bit] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

NapCheck nap_check(const GSet& a, const GSet& b, const GSet& s, std::size_t cap) {
  if (a.space() != b.space() || a.space() != s.space()) throw InputError("operands live in different group spaces");
  if (a.empty() || b.empty() || s.empty()) throw InputError("nap check needs non-empty A, B and S");
  auto g = build_addition_graph(a, b, 1, cap);
  auto mag = magnification_flow(g, 1);
  NapCheck out;
  std::vector<GElement> xs;
  for (auto v : mag.maximal_tight_set) xs.push_back(a.elements()[static_cast<std::size_t>(v)]);
  GSet x = GSet::from_canonical(a.space(), xs);
  out.x = xs;
  out.ratio = mag.value;
  GSet sx = sumset(s, x, cap);
  out.sx = sx.size();
  out.sxb = sumset(sx, b, cap).size();
  // |S+X+B| * |X| <= |X+B| * |S+X|
  out.pass = BigInt(out.sxb) * mag.value.den() <= BigInt(out.sx) * mag.value.num();
  return out;
}

std::string to_string(RestrictedSumsetCheck::Status s) {
  switch (s) {
    case RestrictedSumsetCheck::Status::pass: return "pass";
    case RestrictedSumsetCheck::Status::hypothesis_not_met: return "hypothesis_not_met";
    case RestrictedSumsetCheck::Status::bound_failed: return "bound_failed";
  }
  return "unknown";
}

RestrictedSumsetCheck restricted_sumset_check(const GSet& x, const GSet& b, const GSet& j_set, unsigned j,
                                              unsigned h, const std::vector<GSet>& samples, std::size_t max_x,
                                              std::size_t cap) {
  if (x.space() != b.space() || x.space() != j_set.space()) {
    throw InputError("operands live in different group spaces");
  }
  if (x.empty() || b.empty()) throw InputError("restricted sumset check needs non-empty X and B");
  if (h == 0 || j == 0 || j > h) throw InputError("restricted sumset check needs 1 <= j <= h");
  for (const auto& e : x) {
    if (j_set.contains(e)) throw InputError("X and J must be disjoint");
  }
  if (x.size() > max_x) throw GuardError("subset-enumeration", "restricted sumset hypothesis over |X| > guard");

  GSet c = j_set.empty() ? j_set : sumset(j_set, b, cap);
  auto g = build_restricted_graph(x, b, c, h, cap);

  RestrictedSumsetCheck out;
  out.x_size = x.size();
  out.level_j = g.layer_size(j);
  out.level_h = g.layer_size(h);
  const std::int64_t xn = static_cast<std::int64_t>(x.size());

  auto hyp = magnification_bruteforce(g, j, max_x).result.value;
  if (!(hyp == Ratio(static_cast<std::int64_t>(out.level_j), xn))) {
    out.status = RestrictedSumsetCheck::Status::hypothesis_not_met;
    return out;
  }
  // |V_h| <= alpha^h |X| with alpha^j = |V_j| / |X|, raised to the j-th power.
  out.conclusion = ipow(static_cast<std::int64_t>(out.level_h), j) * ipow(xn, h - j) <=
                   ipow(static_cast<std::int64_t>(out.level_j), h);
  if (!out.conclusion) out.status = RestrictedSumsetCheck::Status::bound_failed;

  // Reiher's inequality as stated: alpha^j = |V_j| / |X|, step j of S + X + iB.
  // When X is also tight at level one, every step i is checked against
  // alpha_1 = |V_1| / |X| (take S' = S + (i-1)B).
  auto hyp1 = j == 1 ? hyp : magnification_bruteforce(g, 1, max_x).result.value;
  const std::size_t level1 = g.layer_size(1);
  const bool chain = hyp1 == Ratio(static_cast<std::int64_t>(level1), xn);
  for (const auto& s : samples) {
    if (s.space() != x.space()) throw InputError("sample S lives in a different group space");
    if (s.empty()) continue;
    GSet xs = sumset(x, s, cap);
    GSet js = j_set.empty() ? j_set : sumset(j_set, s, cap);
    std::vector<std::size_t> d{set_difference(xs, js).size()};
    for (unsigned k = 1; k <= h; ++k) {
      xs = sumset(xs, b, cap);
      if (!js.empty()) js = sumset(js, b, cap);
      d.push_back(set_difference(xs, js).size());
    }
    ++out.reiher_samples;
    if (ipow(static_cast<std::int64_t>(d[j]), j) * xn >
        BigInt(out.level_j) * ipow(static_cast<std::int64_t>(d[j - 1]), j)) {
      ++out.reiher_failures;
    }
    if (!chain) continue;
    for (unsigned k = 1; k <= h; ++k) {
      ++out.reiher_samples;
      if (BigInt(d[k]) * xn > BigInt(level1) * d[k - 1]) ++out.reiher_failures;
    }
  }
  if (out.reiher_failures > 0) out.status = RestrictedSumsetCheck::Status::bound_failed;
  return out;
}

// ---------------------------------------------------------------------------
// Bound report

bool BoundReport::all_pass() const noexcept {
  return std::all_of(bounds.begin(), bounds.end(), [](const NamedBound& b) { return !b.pass || *b.pass; });
}

const NamedBound* BoundReport::find(const std::string& name) const {
  for (const auto& b : bounds) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

namespace {

NamedBound real_bound(std::string name, double raw, const char* quantity, std::size_t observed) {
  NamedBound nb;
  nb.name = std::move(name);
  nb.value = round_up(raw);
  nb.observed_quantity = quantity;
  nb.observed = observed;
  nb.pass = static_cast<double>(observed) <= *nb.value;
  return nb;
}

NamedBound absent(std::string name, const char* quantity, std::size_t observed, std::string note) {
  NamedBound nb;
  nb.name = std::move(name);
  nb.observed_quantity = quantity;
  nb.observed = observed;
  nb.note = std::move(note);
  return nb;
}

}  // namespace

BoundReport bound_report(const GSet& a, const GSet& b, unsigned h, const BoundOptions& opts) {
  if (a.space() != b.space()) throw InputError("operands live in different group spaces");
  if (a.empty() || b.empty()) throw InputError("bound report needs non-empty A and B");
  if (h == 0) throw InputError("bound report needs h >= 1");

  BoundReport r;
  r.h = h;
  r.m = a.size();
  r.a_equals_b = a == b;
  auto g = build_addition_graph(a, b, h, opts.cap);
  r.sum_ab = g.layer_size(1);
  r.observed = g.layer_size(h);
  GSet zero = singleton(a.space(), a.space().identity());
  r.hb = iterated_sumset(zero, b, h, opts.cap).size();

  const auto m = static_cast<std::int64_t>(r.m);
  const double md = static_cast<double>(r.m);
  const double hd = h;
  r.alpha = Ratio(static_cast<std::int64_t>(r.sum_ab), m);
  auto mag = magnification_flow(g, 1);
  r.alpha1 = mag.value;
  r.beta = pseudo_cardinality(r.hb, h, opts.beta_tolerance);
  r.s = round_up(static_cast<double>(r.hb) / r.beta.beta_lo);
  if (h >= 2 && r.alpha1.to_double() < std::pow(r.s, 1.0 / (h - 1))) {
    r.t = linear_majorant(r.alpha1.to_double(), r.s, h).t;
  }
  const double alpha = r.alpha.to_double();
  const double m_pow = std::pow(md, 2.0 - 1.0 / hd);
  const double e = std::numbers::e;

  // |hA| <= alpha^h |A| and Ruzsa's binomial form: A = B only.
  if (r.a_equals_b) {
    NamedBound nb;
    nb.name = "plunnecke_hA";
    BigRational v = r.alpha.pow(h) * big(r.m);
    nb.value = static_cast<double>(v);
    nb.observed_quantity = "|hA|";
    nb.observed = r.hb;
    nb.pass = big(r.hb) <= v;
    r.bounds.push_back(nb);
    double a4 = std::pow(alpha, 4);
    r.bounds.push_back(real_bound("ruzsa_binomial_hA", alpha * alpha * rising_binomial(a4, h - 1) * md, "|hA|", r.hb));
  } else {
    r.bounds.push_back(absent("plunnecke_hA", "|hA|", r.hb, "requires A = B"));
    r.bounds.push_back(absent("ruzsa_binomial_hA", "|hA|", r.hb, "requires A = B"));
  }

  {
    NamedBound nb;
    nb.name = "corollary_hB";
    BigRational v = r.alpha1.pow(h) * big(r.m);
    nb.value = static_cast<double>(v);
    nb.observed_quantity = "|hB|";
    nb.observed = r.hb;
    nb.pass = big(r.hb) <= v;
    r.bounds.push_back(nb);
  }

  {
    // observed <= alpha^h m^(2-1/h)  <=>  observed^h <= alpha^(h^2) m^(2h-1)
    NamedBound nb;
    nb.name = "ruzsa_universal";
    nb.value = round_up(std::pow(alpha, h) * m_pow);
    nb.observed_quantity = "|A+hB|";
    nb.observed = r.observed;
    BigRational rhs = r.alpha.pow(h * h) * BigRational(ipow(m, 2 * h - 1));
    nb.pass = BigRational(ipow(static_cast<std::int64_t>(r.observed), h)) <= rhs;
    r.bounds.push_back(nb);
  }

  if (r.alpha <= Ratio(2)) {
    double sum = 0;
    for (unsigned j = 2; j <= h; ++j) {
      sum += (1.0 + 1.0 / j) * std::pow(alpha, j - 1) * std::pow(md, -1.0 / j);
    }
    r.bounds.push_back(
        real_bound("ruzsa_small_alpha", alpha * md + (alpha - 1) * md * md * sum, "|A+hB|", r.observed));
  } else {
    r.bounds.push_back(absent("ruzsa_small_alpha", "|A+hB|", r.observed, "requires alpha <= 2"));
  }

  {
    NamedBound nb;
    nb.name = "thm_main_universal";
    nb.value = e / (2 * hd * hd) * std::pow(alpha, h) * m_pow;
    nb.observed_quantity = "|A+hB|";
    nb.observed = r.observed;
    nb.asserted = false;
    nb.note = "asymptotic main term";
    r.bounds.push_back(nb);
    nb.name = "thm_main_small_alpha";
    nb.value = md + e / hd * (alpha - 1) * std::pow(alpha, h - 1) * m_pow;
    nb.note = alpha <= 1.0 + 1.0 / (2 * hd - 1) ? "asymptotic main term; sharper branch"
                                                 : "asymptotic main term";
    r.bounds.push_back(nb);
  }

  const double v1 = static_cast<double>(r.sum_ab);
  const double hbd = static_cast<double>(r.hb);
  r.bounds.push_back(real_bound("prop_restricted_first", v1 * hbd / r.beta.beta_lo, "|A+hB|", r.observed));
  r.bounds.push_back(real_bound("prop_restricted_second",
                                (1 + hd / r.beta.beta_lo) * e * v1 * std::pow(hbd, 1.0 - 1.0 / hd) / hd, "|A+hB|",
                                r.observed));

  auto part = partition_graph(g);
  for (const auto& blk : part.blocks) {
    r.block_ratios.push_back(blk.ratio);
    r.block_sizes.push_back(blk.bottom.size());
  }
  {
    auto cs = certified_min_sum(part, r.s, h, r.observed);
    NamedBound nb;
    nb.name = "certified_min_sum";
    nb.value = cs.value;
    nb.observed_quantity = "|A+hB|";
    nb.observed = r.observed;
    nb.pass = cs.pass;
    r.bounds.push_back(nb);
  }

  {
    auto gc = growth_commutative_bound(g, opts.beta_tolerance);
    NamedBound nb;
    nb.name = "growth_commutative";
    nb.value = gc.bound;
    nb.observed_quantity = "|A+hB|";
    nb.observed = r.observed;
    nb.pass = gc.pass;
    r.bounds.push_back(nb);
  }

  {
    auto pv = per_vertex_binomial_check(g);
    NamedBound nb;
    nb.name = "per_vertex_binomial";
    nb.observed_quantity = "|a+hB|";
    nb.observed = r.observed;
    nb.pass = pv.pass;
    nb.note = "|image(a, h)| <= binom(|image(a, 1)| + h - 1, h) for every a in A";
    r.bounds.push_back(nb);
  }

  {
    auto ch = channel_of(g, mag.maximal_tight_set);
    auto sp = stronger_plunnecke_check(ch, 1);
    NamedBound nb;
    nb.name = "stronger_plunnecke";
    BigRational v = r.alpha1.pow(h) * big(mag.maximal_tight_set.size());
    nb.value = static_cast<double>(BigInt(numerator(v) / denominator(v)));
    nb.observed_quantity = "|X+hB|";
    nb.observed = ch.layer_size(h);
    nb.pass = sp.ok();
    nb.note = "X = maximal tight set of G_+(A,B)";
    r.bounds.push_back(nb);
  }
  return r;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["schema"] = 1;
  j["h"] = r.h;
  j["m"] = r.m;
  j["sum_ab"] = r.sum_ab;
  j["hb"] = r.hb;
  j["observed"] = r.observed;
  j["alpha"] = to_json(r.alpha);
  j["alpha1"] = to_json(r.alpha1);
  j["beta"] = {{"value", r.beta.beta},
               {"lo", r.beta.beta_lo},
               {"hi", r.beta.beta_hi},
               {"exact", r.beta.exact}};
  j["s"] = r.s;
  j["t"] = r.t ? nlohmann::json(*r.t) : nlohmann::json(nullptr);
  auto blocks = nlohmann::json::array();
  for (std::size_t i = 0; i < r.block_ratios.size(); ++i) {
    blocks.push_back({{"ratio", to_json(r.block_ratios[i])}, {"size", r.block_sizes[i]}});
  }
  j["partition"] = blocks;
  auto bounds = nlohmann::json::array();
  for (const auto& b : r.bounds) {
    nlohmann::json e;
    e["name"] = b.name;
    e["value"] = b.value ? nlohmann::json(*b.value) : nlohmann::json(nullptr);
    e["observed_quantity"] = b.observed_quantity;
    e["observed"] = b.observed;
    e["asserted"] = b.asserted;
    e["verdict"] = b.pass ? nlohmann::json(*b.pass ? "pass" : "fail")
                          : nlohmann::json(b.asserted ? "not_applicable" : "not_asserted");
    if (!b.note.empty()) e["note"] = b.note;
    bounds.push_back(e);
  }
  j["bounds"] = bounds;
  j["all_pass"] = r.all_pass();
  return j;
}

namespace {

constexpr const char* kBoundColumns[] = {
    "plunnecke_hA",          "ruzsa_binomial_hA",  "corollary_hB",    "ruzsa_universal",
    "ruzsa_small_alpha",     "thm_main_universal", "thm_main_small_alpha", "prop_restricted_first",
    "prop_restricted_second", "certified_min_sum",  "growth_commutative",   "per_vertex_binomial",
    "stronger_plunnecke"};

}  // namespace

std::string csv_header() {
  std::ostringstream os;
  os << "instance,h,m,sum_ab,hb,observed,alpha,alpha1,beta,s,t";
  for (const char* c : kBoundColumns) os << ',' << c << ',' << c << "_verdict";
  os << ",all_pass";
  return os.str();
}

std::string csv_row(const BoundReport& r, const std::string& instance) {
  std::ostringstream os;
  os << instance << ',' << r.h << ',' << r.m << ',' << r.sum_ab << ',' << r.hb << ',' << r.observed << ','
     << r.alpha.str() << ',' << r.alpha1.str() << ',' << fmt_double(r.beta.beta) << ',' << fmt_double(r.s) << ','
     << (r.t ? fmt_double(*r.t) : "");
  for (const char* c : kBoundColumns) {
    const NamedBound* b = r.find(c);
    os << ',';
    if (b && b->value) os << fmt_double(*b->value);
    os << ',';
    if (b) os << (b->pass ? (*b->pass ? "pass" : "fail") : (b->asserted ? "n/a" : "not_asserted"));
  }
  os << ',' << (r.all_pass() ? "true" : "false");
  return os.str();
}

}  // namespace sumsetlab
