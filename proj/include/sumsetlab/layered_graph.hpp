#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sumsetlab/group.hpp"

namespace sumsetlab {

using VertexId = std::int64_t;

/// Directed graph on layers V_0, ..., V_h whose edges all go from V_i to
/// V_{i+1}. Vertices have caller-chosen ids (unique across layers) and an
/// optional group-element label (distinct within a layer).
///
/// Internally vertices are also numbered densely, layer by layer and by
/// ascending id inside a layer; the `*_index` accessors expose that
/// numbering for algorithms that want flat arrays.
class LayeredGraph {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t height);
    Builder& add_vertex(std::size_t layer, VertexId id, std::optional<GElement> label = {});
    Builder& add_edge(VertexId from, VertexId to);
    /// Validates the layering and label invariants; throws InputError.
    LayeredGraph build() &&;

   private:
    struct PendingVertex {
      std::size_t layer;
      VertexId id;
      std::optional<GElement> label;
    };
    std::size_t height_;
    std::vector<PendingVertex> vertices_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
  };

  LayeredGraph() = default;

  std::size_t height() const noexcept { return layers_.empty() ? 0 : layers_.size() - 1; }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  std::span<const VertexId> layer(std::size_t i) const { return layers_.at(i); }
  std::size_t layer_size(std::size_t i) const { return layers_.at(i).size(); }
  std::size_t vertex_count() const noexcept { return ids_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  /// True when some layer has no vertices (e.g. a channel without paths).
  bool has_empty_layer() const noexcept;

  bool contains(VertexId v) const { return find_index(v).has_value(); }
  std::size_t layer_of(VertexId v) const { return layer_of_[index_of(v)]; }
  const std::optional<GElement>& label(VertexId v) const { return labels_[index_of(v)]; }
  bool has_edge(VertexId from, VertexId to) const;

  /// Successor / predecessor ids, ascending.
  std::vector<VertexId> successors(VertexId v) const;
  std::vector<VertexId> predecessors(VertexId v) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // Dense numbering.
  std::size_t index_of(VertexId v) const;
  std::optional<std::size_t> find_index(VertexId v) const;
  VertexId id_at(std::size_t index) const { return ids_[index]; }
  std::size_t layer_at(std::size_t index) const { return layer_of_[index]; }
  /// Dense index of the first vertex in layer i.
  std::size_t layer_offset(std::size_t i) const { return offsets_.at(i); }
  std::span<const std::size_t> out_index(std::size_t index) const { return out_[index]; }
  std::span<const std::size_t> in_index(std::size_t index) const { return in_[index]; }

  /// Builds a graph from dense data (layer-major, ids ascending within each
  /// layer); used by graph transforms that already guarantee the invariants.
  static LayeredGraph from_parts(std::vector<std::vector<VertexId>> layers,
                                 std::vector<std::optional<GElement>> labels,
                                 std::vector<std::vector<std::size_t>> out);

 private:
  void finalize();

  std::vector<std::vector<VertexId>> layers_;
  std::vector<VertexId> ids_;
  std::vector<std::size_t> layer_of_;
  std::vector<std::size_t> offsets_;
  std::vector<std::optional<GElement>> labels_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::pair<VertexId, std::size_t>> id_lookup_;  // sorted by id
  std::size_t edge_count_ = 0;
};

/// G_+(A,B): V_0 = A, V_i = A + iB, edge x -> y iff y - x in B.
/// Vertex ids are assigned 0, 1, 2, ... layer by layer in label order.
LayeredGraph build_addition_graph(const GSet& a, const GSet& b, unsigned h,
                                  std::size_t cap = kUnlimited);

/// G_R(A,B,C): V_0 = A, V_i = (A + iB) \ (C + (i-1)B) for i >= 1, edges as in
/// the addition graph. An empty C reproduces build_addition_graph exactly.
LayeredGraph build_restricted_graph(const GSet& a, const GSet& b, const GSet& c, unsigned h,
                                    std::size_t cap = kUnlimited);

/// All paths from `from` (a subset of V_i) to `to` (a subset of V_j), i < j,
/// as a layered graph of height j - i that keeps the original ids and labels.
/// If no such path exists the result has empty layers (see has_empty_layer).
LayeredGraph channel(const LayeredGraph& g, std::span<const VertexId> from, std::size_t i,
                     std::span<const VertexId> to, std::size_t j);

/// Channel from a subset of V_0 to the whole top layer.
LayeredGraph channel_of(const LayeredGraph& g, std::span<const VertexId> bottom);

/// Vertices of V_i reachable from Z (a subset of V_0) by paths of length i.
std::vector<VertexId> image(const LayeredGraph& g, std::span<const VertexId> z, std::size_t i);

/// |image(g, {v}, i)| for every v in V_0, in layer order.
std::vector<std::size_t> singleton_image_sizes(const LayeredGraph& g, std::size_t i);

struct CommutativityViolation {
  enum class Direction { upward, downward };
  Direction direction;
  /// Upward: edge (first, second) and the out-neighbour `third` of `second`
  /// left without a distinct mid-vertex. Downward: edge (second, third) and
  /// the in-neighbour `first` of `second` left unmatched.
  VertexId first;
  VertexId second;
  VertexId third;
};

struct CommutativityReport {
  bool upward_ok = true;
  bool downward_ok = true;
  std::vector<CommutativityViolation> violations;

  bool commutative() const noexcept { return upward_ok && downward_ok; }
};

struct CommutativityOptions {
  std::size_t max_edges = 10'000;
};

/// Checks both lifting conditions, requiring pairwise distinct mid-vertices
/// (a perfect matching found by augmenting paths). Throws
/// GuardError("commutativity-edge-cap") above `max_edges`.
CommutativityReport check_commutative(const LayeredGraph& g, const CommutativityOptions& opts = {});

nlohmann::json to_json(const LayeredGraph& g);
LayeredGraph graph_from_json(const nlohmann::json& j);

}  // namespace sumsetlab
