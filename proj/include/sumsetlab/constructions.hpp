#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumsetlab/group.hpp"
#include "sumsetlab/ratio.hpp"

namespace sumsetlab {

struct ConstructionSpec {
  std::string which;  // "example1" or "example2"
  unsigned h = 0;
  std::int64_t a = 0;
  std::optional<std::int64_t> l;  // example1
  std::optional<Ratio> alpha;     // example2
  std::int64_t b = 0;
  std::optional<std::int64_t> k;  // example1: rank of Z_b^k
  std::vector<std::int64_t> moduli;

  std::int64_t predicted_m = 0;
  std::int64_t predicted_hb = 0;      // |hB|
  std::int64_t sum_ab_cap = 0;        // upper bound on |A+B|
  std::int64_t lower_formula = 0;     // value of the |A+hB| formula
};

struct Construction {
  GSet a;
  GSet b;
  ConstructionSpec spec;
};

/// Grid of a^h points with step l in the first h coordinates of Z_b^k,
/// b = l a, k = h + a^(h-1)/h, plus the unit vectors e_{h+1}..e_k; B is the
/// union of the first h axis subgroups. Requires h | a^(h-1).
Construction example1(unsigned h, std::int64_t a, std::int64_t l);

/// A_1 = Z_a^h x {0} inside Z_a^h x Z_{b+1}, A_2 = {(0, .., 0, j) : 1 <= j <= b}
/// with b = (alpha - 1) a^(h-1) / h, B = union of the h axis subgroups of
/// Z_a^h. Requires 1 <= alpha and b integral.
Construction example2(unsigned h, std::int64_t a, const Ratio& alpha);

nlohmann::json to_json(const ConstructionSpec& s);

}  // namespace sumsetlab
