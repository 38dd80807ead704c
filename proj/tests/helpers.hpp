#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "sumsetlab/group.hpp"
#include "sumsetlab/layered_graph.hpp"

namespace testing {

/// Subset of the integers.
inline sumsetlab::GSet zset(std::initializer_list<std::int64_t> xs) {
  std::vector<std::vector<std::int64_t>> pts;
  for (auto x : xs) pts.push_back({x});
  return sumsetlab::GSet(sumsetlab::GroupSpace({0}), pts);
}

inline sumsetlab::GSet cset(std::vector<std::int64_t> moduli, std::vector<std::vector<std::int64_t>> pts) {
  return sumsetlab::GSet(sumsetlab::GroupSpace(std::move(moduli)), pts);
}

/// Height-h graph from explicit layers and edges, no labels.
inline sumsetlab::LayeredGraph make_graph(const std::vector<std::vector<sumsetlab::VertexId>>& layers,
                                          const std::vector<std::pair<sumsetlab::VertexId, sumsetlab::VertexId>>& edges) {
  sumsetlab::LayeredGraph::Builder b(layers.size() - 1);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (auto v : layers[i]) b.add_vertex(i, v);
  }
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

/// Labels of the given vertices as integers (rank-1 labels only).
inline std::vector<std::int64_t> labels_of(const sumsetlab::LayeredGraph& g,
                                           const std::vector<sumsetlab::VertexId>& vs) {
  std::vector<std::int64_t> out;
  for (auto v : vs) out.push_back(g.label(v)->coords.at(0));
  return out;
}

}  // namespace testing
