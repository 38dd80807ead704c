#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumsetlab/layered_graph.hpp"
#include "sumsetlab/ratio.hpp"

namespace sumsetlab {

struct PartitionBlock {
  std::vector<VertexId> bottom;  // Z_i
  Ratio ratio;                   // alpha_i = D_1(G_i)
  LayeredGraph subgraph;         // G_i
};

struct PartitionResult {
  std::vector<PartitionBlock> blocks;

  std::size_t k() const noexcept { return blocks.size(); }
};

struct PartitionOptions {
  /// Run check_commutative on the input first (skipped above the edge cap).
  bool require_commutative = true;
  std::size_t max_edges = 10'000;
};

/// Peels V_0 into maximal tight sets of strictly increasing magnification
/// ratio. Round i takes Z_i = maximal tight set of the remaining graph G_i*,
/// G_i = everything reachable from Z_i in G_i*, and G_{i+1}* = G_i* with G_i
/// removed. Both pieces of each split are induced subgraphs that inherit
/// the lifting conditions, and every level-1 image of the remainder misses
/// image(Z_i), so maximality of Z_i forces alpha_{i+1} > alpha_i.
///
/// Throws InputError when the up-front commutativity check fails.
PartitionResult partition_graph(const LayeredGraph& g, const PartitionOptions& opts = {});

struct PartitionVerdict {
  bool blocks_nonempty = true;
  bool blocks_disjoint = true;
  bool covers_bottom = true;
  bool tight = true;
  bool strictly_increasing = true;
  bool maximality = true;  // alpha_i(|Z_i| + |Z_{i+1}|) < alpha_i|Z_i| + alpha_{i+1}|Z_{i+1}|
  bool subgraphs_disjoint = true;
  bool subgraphs_commutative = true;
  bool commutativity_checked = false;
  bool top_covered = true;  // sum_i |image_{G_i}(Z_i, h)| == |V_h|
  std::size_t top_sum = 0;
  std::vector<std::string> messages;

  bool ok() const noexcept {
    return blocks_nonempty && blocks_disjoint && covers_bottom && tight && strictly_increasing && maximality &&
           subgraphs_disjoint && subgraphs_commutative && top_covered;
  }
};

struct PartitionVerifyOptions {
  bool check_commutativity = true;
  std::size_t max_edges = 10'000;  // larger subgraphs are not commutativity-checked
};

PartitionVerdict verify_partition(const LayeredGraph& g, const PartitionResult& p,
                                  const PartitionVerifyOptions& opts = {});

/// {"blocks": [[id, ...], ...], "ratios": [[p, q], ...]}, plus per-block
/// graph dumps under "subgraphs" when requested.
nlohmann::json to_json(const PartitionResult& p, bool with_subgraphs = false);

}  // namespace sumsetlab
