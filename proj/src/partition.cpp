#include "sumsetlab/partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/magnification.hpp"

namespace sumsetlab {

namespace {

/// Induced subgraph of g on the vertices with keep[k] set.
LayeredGraph induced(const LayeredGraph& g, const std::vector<char>& keep) {
  std::vector<std::vector<VertexId>> layers(g.layer_count());
  std::vector<std::optional<GElement>> labels;
  std::vector<std::size_t> remap(g.vertex_count(), SIZE_MAX);
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    if (!keep[k]) continue;
    remap[k] = labels.size();
    layers[g.layer_at(k)].push_back(g.id_at(k));
    labels.push_back(g.label(g.id_at(k)));
  }
  std::vector<std::vector<std::size_t>> out(labels.size());
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    if (remap[k] == SIZE_MAX) continue;
    for (auto w : g.out_index(k)) {
      if (remap[w] != SIZE_MAX) out[remap[k]].push_back(remap[w]);
    }
  }
  return LayeredGraph::from_parts(std::move(layers), std::move(labels), std::move(out));
}

/// Marks every vertex reachable from the given bottom vertices.
std::vector<char> forward_cone(const LayeredGraph& g, const std::vector<VertexId>& bottom) {
  std::vector<char> cone(g.vertex_count(), 0);
  for (auto z : bottom) cone[g.index_of(z)] = 1;
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    if (!cone[k]) continue;
    for (auto w : g.out_index(k)) cone[w] = 1;
  }
  return cone;
}

}  // namespace

PartitionResult partition_graph(const LayeredGraph& g, const PartitionOptions& opts) {
  if (g.height() == 0) throw InputError("partition needs a graph of height >= 1");
  if (g.layer_size(0) == 0) throw InputError("partition needs a non-empty bottom layer");
  if (opts.require_commutative && g.edge_count() <= opts.max_edges &&
      !check_commutative(g, {opts.max_edges}).commutative()) {
    throw InputError("partition input is not commutative (check_commutative reports a violation)");
  }

  PartitionResult result;
  LayeredGraph current = g;
  while (current.layer_size(0) > 0) {
    const auto tight = magnification_flow(current, 1);
    if (!result.blocks.empty() && !(result.blocks.back().ratio < tight.value)) {
      // Unreachable: see the maximality argument in the header.
      std::ostringstream os;
      os << "magnification ratios stopped increasing (" << result.blocks.back().ratio.str() << " then "
         << tight.value.str() << ")";
      throw std::logic_error(os.str());
    }
    auto cone = forward_cone(current, tight.maximal_tight_set);
    PartitionBlock block;
    block.bottom = tight.maximal_tight_set;
    block.ratio = tight.value;
    block.subgraph = induced(current, cone);
    for (auto& c : cone) c = !c;
    current = induced(current, cone);
    result.blocks.push_back(std::move(block));
  }
  return result;
}

PartitionVerdict verify_partition(const LayeredGraph& g, const PartitionResult& p,
                                  const PartitionVerifyOptions& opts) {
  PartitionVerdict v;
  const std::size_t h = g.height();
  auto note = [&](bool& flag, const std::string& msg) {
    flag = false;
    v.messages.push_back(msg);
  };
  auto block_name = [](std::size_t i) { return "block " + std::to_string(i + 1); };

  std::set<VertexId> bottom_seen;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& b = p.blocks[i];
    if (b.bottom.empty()) note(v.blocks_nonempty, block_name(i) + " is empty");
    for (auto z : b.bottom) {
      if (!bottom_seen.insert(z).second) note(v.blocks_disjoint, "vertex " + std::to_string(z) + " lies in two blocks");
    }
  }
  for (auto z : g.layer(0)) {
    if (!bottom_seen.count(z)) note(v.covers_bottom, "bottom vertex " + std::to_string(z) + " is in no block");
  }
  for (auto z : bottom_seen) {
    if (!g.contains(z) || g.layer_of(z) != 0) note(v.covers_bottom, "block vertex " + std::to_string(z) + " is not in V_0");
  }

  std::set<VertexId> vertices_seen;
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    const auto& b = p.blocks[i];
    const auto& sub = b.subgraph;
    if (sub.layer_count() != g.layer_count()) {
      note(v.tight, block_name(i) + " subgraph has the wrong height");
      continue;
    }
    if (!std::equal(sub.layer(0).begin(), sub.layer(0).end(), b.bottom.begin(), b.bottom.end())) {
      note(v.tight, block_name(i) + " is not the bottom layer of its subgraph");
    } else if (!b.bottom.empty()) {
      const auto img = image(sub, b.bottom, 1).size();
      if (Ratio(static_cast<std::int64_t>(img), static_cast<std::int64_t>(b.bottom.size())) != b.ratio) {
        note(v.tight, block_name(i) + ": |image(Z_i)| differs from ratio * |Z_i|");
      }
      if (magnification_flow(sub, 1).value != b.ratio) note(v.tight, block_name(i) + ": ratio differs from D_1(G_i)");
      v.top_sum += image(sub, b.bottom, h).size();
    }
    for (std::size_t k = 0; k < sub.vertex_count(); ++k) {
      const auto id = sub.id_at(k);
      if (!g.contains(id) || g.layer_of(id) != sub.layer_at(k)) {
        note(v.subgraphs_disjoint, "subgraph vertex " + std::to_string(id) + " is not a vertex of G at that layer");
      }
      if (!vertices_seen.insert(id).second) {
        note(v.subgraphs_disjoint, "vertex " + std::to_string(id) + " lies in two subgraphs");
      }
    }
    if (opts.check_commutativity && sub.edge_count() <= opts.max_edges) {
      v.commutativity_checked = true;
      if (!check_commutative(sub, {opts.max_edges}).commutative()) {
        note(v.subgraphs_commutative, block_name(i) + " subgraph is not commutative");
      }
    }
  }
  if (v.top_sum != g.layer_size(h)) {
    std::ostringstream os;
    os << "block images account for " << v.top_sum << " of " << g.layer_size(h) << " top vertices";
    note(v.top_covered, os.str());
  }

  for (std::size_t i = 0; i + 1 < p.blocks.size(); ++i) {
    const auto& a = p.blocks[i];
    const auto& b = p.blocks[i + 1];
    if (!(a.ratio < b.ratio)) {
      note(v.strictly_increasing, "ratios " + a.ratio.str() + " and " + b.ratio.str() + " do not increase");
    }
    const auto za = static_cast<std::int64_t>(a.bottom.size());
    const auto zb = static_cast<std::int64_t>(b.bottom.size());
    if (!(a.ratio * Ratio(za + zb) < a.ratio * Ratio(za) + b.ratio * Ratio(zb))) {
      note(v.maximality, block_name(i) + " and " + block_name(i + 1) + " violate the maximality inequality");
    }
  }
  return v;
}

nlohmann::json to_json(const PartitionResult& p, bool with_subgraphs) {
  nlohmann::json blocks = nlohmann::json::array();
  nlohmann::json ratios = nlohmann::json::array();
  for (const auto& b : p.blocks) {
    blocks.push_back(b.bottom);
    ratios.push_back(to_json(b.ratio));
  }
  nlohmann::json j{{"blocks", std::move(blocks)}, {"ratios", std::move(ratios)}};
  if (with_subgraphs) {
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& b : p.blocks) subs.push_back(to_json(b.subgraph));
    j["subgraphs"] = std::move(subs);
  }
  return j;
}

}  // namespace sumsetlab
