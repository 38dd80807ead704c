#include "sumsetlab/constructions.hpp"

#include <limits>
#include <sstream>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

namespace {

constexpr std::int64_t kMaxPoints = 50'000'000;

std::int64_t small_pow(std::int64_t base, unsigned e, const char* what) {
  BigInt v = ipow(base, e);
  if (v > kMaxPoints) {
    std::ostringstream os;
    os << what << " = " << base << "^" << e << " is too large to materialize";
    throw GuardError("construction-size", os.str());
  }
  return static_cast<std::int64_t>(v);
}

/// All vectors with the first h coordinates in {0, step, .., (count-1) step}.
std::vector<std::vector<std::int64_t>> grid(unsigned h, std::size_t rank, std::int64_t count, std::int64_t step) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> digit(h, 0);
  for (;;) {
    std::vector<std::int64_t> x(rank, 0);
    for (unsigned i = 0; i < h; ++i) x[i] = digit[i] * step;
    out.push_back(std::move(x));
    unsigned i = 0;
    while (i < h && ++digit[i] == count) digit[i++] = 0;
    if (i == h) break;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> axis_subgroups(unsigned h, std::size_t rank, std::int64_t order) {
  std::vector<std::vector<std::int64_t>> out;
  for (unsigned j = 0; j < h; ++j) {
    for (std::int64_t v = 0; v < order; ++v) {
      std::vector<std::int64_t> x(rank, 0);
      x[j] = v;
      out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

Construction example1(unsigned h, std::int64_t a, std::int64_t l) {
  if (h == 0) throw InputError("example1 needs h >= 1");
  if (a < 1 || l < 1) throw InputError("example1 needs a >= 1 and l >= 1");
  const std::int64_t ah1 = small_pow(a, h - 1, "a^(h-1)");
  if (ah1 % h != 0) {
    std::ostringstream os;
    os << "example1 needs h | a^(h-1); here a^(h-1) = " << ah1 << " and h = " << h;
    throw InputError(os.str());
  }
  const std::int64_t ah = small_pow(a, h, "a^h");
  const std::int64_t b = l * a;
  const std::int64_t extra = ah1 / h;
  const std::int64_t k = h + extra;

  ConstructionSpec spec;
  spec.which = "example1";
  spec.h = h;
  spec.a = a;
  spec.l = l;
  spec.b = b;
  spec.k = k;
  spec.moduli.assign(static_cast<std::size_t>(k), b);
  spec.predicted_m = ah + extra;
  spec.predicted_hb = small_pow(b, h, "b^h");
  spec.sum_ab_cap = static_cast<std::int64_t>(h + 1) * l * ah;
  spec.lower_formula = 1 + (spec.predicted_hb - 1) * extra;

  const auto rank = static_cast<std::size_t>(k);
  GroupSpace space(spec.moduli);
  auto pts = grid(h, rank, a, l);
  for (std::int64_t j = h; j < k; ++j) {
    std::vector<std::int64_t> x(rank, 0);
    x[static_cast<std::size_t>(j)] = 1;
    pts.push_back(std::move(x));
  }
  // B_j = {x : x_i = 0 for i != j, 1 <= x_j <= b}, i.e. the j-th copy of Z_b.
  return {GSet(space, pts), GSet(space, axis_subgroups(h, rank, b)), spec};
}

Construction example2(unsigned h, std::int64_t a, const Ratio& alpha) {
  if (h == 0) throw InputError("example2 needs h >= 1");
  if (a < 1) throw InputError("example2 needs a >= 1");
  if (alpha < Ratio(1)) throw InputError("example2 needs alpha >= 1");
  const std::int64_t ah1 = small_pow(a, h - 1, "a^(h-1)");
  const std::int64_t ah = small_pow(a, h, "a^h");
  Ratio b_exact = (alpha - Ratio(1)) * Ratio(ah1, static_cast<std::int64_t>(h));
  if (b_exact.den() != 1) {
    std::ostringstream os;
    os << "example2 needs b = (alpha - 1) a^(h-1) / h integral; here b = " << b_exact.str();
    throw InputError(os.str());
  }
  const std::int64_t b = b_exact.num();
  if (b > kMaxPoints) throw GuardError("construction-size", "example2 has too many coset points");

  ConstructionSpec spec;
  spec.which = "example2";
  spec.h = h;
  spec.a = a;
  spec.alpha = alpha;
  spec.b = b;
  spec.moduli.assign(h, a);
  spec.moduli.push_back(b + 1);
  spec.predicted_m = ah + b;
  spec.predicted_hb = ah;
  spec.sum_ab_cap = ah + b * static_cast<std::int64_t>(h) * a;
  spec.lower_formula = (b + 1) * ah;

  const std::size_t rank = h + 1;
  GroupSpace space(spec.moduli);
  auto pts = grid(h, rank, a, 1);
  for (std::int64_t j = 1; j <= b; ++j) {
    std::vector<std::int64_t> x(rank, 0);
    x[h] = j;
    pts.push_back(std::move(x));
  }
  return {GSet(space, pts), GSet(space, axis_subgroups(h, rank, a)), spec};
}

nlohmann::json to_json(const ConstructionSpec& s) {
  nlohmann::json j;
  j["schema"] = 1;
  j["which"] = s.which;
  j["h"] = s.h;
  j["a"] = s.a;
  if (s.l) j["l"] = *s.l;
  if (s.alpha) j["alpha"] = to_json(*s.alpha);
  j["b"] = s.b;
  if (s.k) j["k"] = *s.k;
  j["moduli"] = s.moduli;
  j["predicted"] = {{"m", s.predicted_m},
                    {"hb", s.predicted_hb},
                    {"sum_ab_cap", s.sum_ab_cap},
                    {"lower_formula", s.lower_formula}};
  return j;
}

}  // namespace sumsetlab
