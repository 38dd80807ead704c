#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sumsetlab/layered_graph.hpp"
#include "sumsetlab/ratio.hpp"

namespace sumsetlab {

/// D_i(G) = min over non-empty Z in V_0 of |image(Z, i)| / |Z|, together with
/// the maximal tight set (the union of all minimizers).
struct MagnificationResult {
  std::size_t level = 0;
  Ratio value;
  std::vector<VertexId> maximal_tight_set;
  /// |image(maximal_tight_set, level)| == value * |maximal_tight_set|.
  bool witness_check = false;
};

struct BruteforceMagnification {
  MagnificationResult result;
  std::vector<std::vector<VertexId>> minimizers;  // every minimizing Z
};

inline constexpr std::size_t kSubsetEnumerationCap = 22;

/// Enumerates all 2^|V_0| - 1 subsets. Throws GuardError("subset-enumeration")
/// when |V_0| > max_bottom.
BruteforceMagnification magnification_bruteforce(const LayeredGraph& g, std::size_t level,
                                                 std::size_t max_bottom = kSubsetEnumerationCap);

/// Same quantity via parametric minimum cuts. For t = p/q the cut network
/// source -(p)-> V_0 -(inf)-> V_level -(q)-> sink has value
/// p|V_0| + min_Z (q|image(Z)| - p|Z|); Newton/Dinkelbach steps on t
/// decrease strictly until the minimum is 0, and the inclusion-maximal
/// minimum cut at that point is the maximal tight set.
MagnificationResult magnification_flow(const LayeredGraph& g, std::size_t level);

struct PlunneckeChain {
  std::vector<Ratio> ratios;  // D_1 .. D_h
  bool monotone = true;
  /// Pairs (i, j), i < j, with D_i^j < D_j^i.
  std::vector<std::pair<std::size_t, std::size_t>> failures;
};

/// D_1..D_h and the exact check D_i^j >= D_j^i for all i < j.
PlunneckeChain plunnecke_chain(const LayeredGraph& g);

struct StrongerPlunneckeCheck {
  std::size_t level = 0;
  bool hypothesis = false;   // D_j(H) == |V_j| / |V_0|
  bool power_inequality = false;  // |V_j|^h >= |V_0|^(h-j) |V_h|^j
  bool floor_bound = true;   // j == 1: |V_h| <= floor(|V_1|^h / |V_0|^(h-1))
  bool ok() const noexcept { return !hypothesis || (power_inequality && floor_bound); }
};

/// Checks the layer-size inequality on `h` whenever its bottom layer is tight
/// at level j.
StrongerPlunneckeCheck stronger_plunnecke_check(const LayeredGraph& h, std::size_t level);

nlohmann::json to_json(const MagnificationResult& r);

}  // namespace sumsetlab
