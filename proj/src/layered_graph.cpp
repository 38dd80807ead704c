#include "sumsetlab/layered_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

// ---------------------------------------------------------------------------
// Construction

LayeredGraph::Builder::Builder(std::size_t height) : height_(height) {}

LayeredGraph::Builder& LayeredGraph::Builder::add_vertex(std::size_t layer, VertexId id,
                                                         std::optional<GElement> label) {
  if (layer > height_) {
    std::ostringstream os;
    os << "vertex " << id << " placed in layer " << layer << " of a height-" << height_ << " graph";
    throw InputError(os.str());
  }
  vertices_.push_back({layer, id, std::move(label)});
  return *this;
}

LayeredGraph::Builder& LayeredGraph::Builder::add_edge(VertexId from, VertexId to) {
  edges_.emplace_back(from, to);
  return *this;
}

LayeredGraph LayeredGraph::Builder::build() && {
  std::sort(vertices_.begin(), vertices_.end(), [](const auto& x, const auto& y) {
    return std::tie(x.layer, x.id) < std::tie(y.layer, y.id);
  });
  std::vector<std::vector<VertexId>> layers(height_ + 1);
  std::vector<std::optional<GElement>> labels;
  std::map<VertexId, std::size_t> index;
  labels.reserve(vertices_.size());
  for (auto& v : vertices_) {
    if (!index.emplace(v.id, labels.size()).second) {
      throw InputError("duplicate vertex id " + std::to_string(v.id));
    }
    layers[v.layer].push_back(v.id);
    labels.push_back(std::move(v.label));
  }
  std::size_t offset = 0;
  for (const auto& layer : layers) {
    std::set<GElement> seen;
    for (std::size_t k = offset; k < offset + layer.size(); ++k) {
      if (labels[k] && !seen.insert(*labels[k]).second) {
        throw InputError("two vertices in one layer carry the same label");
      }
    }
    offset += layer.size();
  }

  std::vector<std::size_t> layer_of(labels.size());
  offset = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (std::size_t k = 0; k < layers[i].size(); ++k) layer_of[offset + k] = i;
    offset += layers[i].size();
  }

  std::vector<std::vector<std::size_t>> out(labels.size());
  for (auto [from, to] : edges_) {
    auto f = index.find(from);
    auto t = index.find(to);
    if (f == index.end() || t == index.end()) {
      std::ostringstream os;
      os << "edge (" << from << ", " << to << ") references an unknown vertex";
      throw InputError(os.str());
    }
    if (layer_of[t->second] != layer_of[f->second] + 1) {
      std::ostringstream os;
      os << "edge (" << from << ", " << to << ") does not join consecutive layers";
      throw InputError(os.str());
    }
    out[f->second].push_back(t->second);
  }
  for (auto& adj : out) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw InputError("duplicate edge");
    }
  }
  return LayeredGraph::from_parts(std::move(layers), std::move(labels), std::move(out));
}

LayeredGraph LayeredGraph::from_parts(std::vector<std::vector<VertexId>> layers,
                                      std::vector<std::optional<GElement>> labels,
                                      std::vector<std::vector<std::size_t>> out) {
  LayeredGraph g;
  g.layers_ = std::move(layers);
  g.labels_ = std::move(labels);
  g.out_ = std::move(out);
  g.finalize();
  return g;
}

void LayeredGraph::finalize() {
  ids_.clear();
  layer_of_.clear();
  offsets_.clear();
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    offsets_.push_back(ids_.size());
    for (auto id : layers_[i]) {
      ids_.push_back(id);
      layer_of_.push_back(i);
    }
  }
  offsets_.push_back(ids_.size());
  in_.assign(ids_.size(), {});
  edge_count_ = 0;
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (auto v : out_[u]) in_[v].push_back(u);
    edge_count_ += out_[u].size();
  }
  id_lookup_.clear();
  id_lookup_.reserve(ids_.size());
  for (std::size_t k = 0; k < ids_.size(); ++k) id_lookup_.emplace_back(ids_[k], k);
  std::sort(id_lookup_.begin(), id_lookup_.end());
}

// ---------------------------------------------------------------------------
// Accessors

bool LayeredGraph::has_empty_layer() const noexcept {
  return std::any_of(layers_.begin(), layers_.end(), [](const auto& l) { return l.empty(); });
}

std::optional<std::size_t> LayeredGraph::find_index(VertexId v) const {
  auto it = std::lower_bound(id_lookup_.begin(), id_lookup_.end(), std::make_pair(v, std::size_t{0}));
  if (it == id_lookup_.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::size_t LayeredGraph::index_of(VertexId v) const {
  auto k = find_index(v);
  if (!k) throw InputError("unknown vertex id " + std::to_string(v));
  return *k;
}

bool LayeredGraph::has_edge(VertexId from, VertexId to) const {
  auto f = find_index(from);
  auto t = find_index(to);
  if (!f || !t) return false;
  return std::binary_search(out_[*f].begin(), out_[*f].end(), *t);
}

std::vector<VertexId> LayeredGraph::successors(VertexId v) const {
  std::vector<VertexId> r;
  for (auto k : out_[index_of(v)]) r.push_back(ids_[k]);
  return r;
}

std::vector<VertexId> LayeredGraph::predecessors(VertexId v) const {
  std::vector<VertexId> r;
  for (auto k : in_[index_of(v)]) r.push_back(ids_[k]);
  return r;
}

std::vector<std::pair<VertexId, VertexId>> LayeredGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> r;
  r.reserve(edge_count_);
  for (std::size_t u = 0; u < out_.size(); ++u) {
    for (auto v : out_[u]) r.emplace_back(ids_[u], ids_[v]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Addition and restricted addition graphs

namespace {

LayeredGraph graph_from_layers(const std::vector<GSet>& layers, const GSet& b) {
  std::vector<std::vector<VertexId>> ids(layers.size());
  std::vector<std::optional<GElement>> labels;
  VertexId next = 0;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for (const auto& x : layers[i]) {
      ids[i].push_back(next++);
      labels.emplace_back(x);
    }
  }
  std::vector<std::vector<std::size_t>> out(labels.size());
  const auto& space = b.space();
  std::size_t offset = 0;
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    const std::size_t next_offset = offset + layers[i].size();
    for (std::size_t k = 0; k < layers[i].size(); ++k) {
      const auto& x = layers[i].elements()[k];
      auto& adj = out[offset + k];
      for (const auto& y : b) {
        const auto pos = layers[i + 1].index_of(space.add(x, y));
        if (pos < layers[i + 1].size()) adj.push_back(next_offset + pos);
      }
      std::sort(adj.begin(), adj.end());
    }
    offset = next_offset;
  }
  return LayeredGraph::from_parts(std::move(ids), std::move(labels), std::move(out));
}

}  // namespace

LayeredGraph build_addition_graph(const GSet& a, const GSet& b, unsigned h, std::size_t cap) {
  if (a.space() != b.space()) throw InputError("operands live in different group spaces");
  if (a.empty() || b.empty()) throw InputError("addition graph needs non-empty A and B");
  std::vector<GSet> layers{a};
  for (unsigned i = 1; i <= h; ++i) layers.push_back(sumset(layers.back(), b, cap));
  return graph_from_layers(layers, b);
}

LayeredGraph build_restricted_graph(const GSet& a, const GSet& b, const GSet& c, unsigned h,
                                    std::size_t cap) {
  if (a.space() != b.space() || a.space() != c.space()) {
    throw InputError("operands live in different group spaces");
  }
  if (a.empty() || b.empty()) throw InputError("restricted graph needs non-empty A and B");
  std::vector<GSet> layers{a};
  GSet sums = a;
  GSet removed = c;  // C + (i-1)B
  for (unsigned i = 1; i <= h; ++i) {
    sums = sumset(sums, b, cap);
    if (i > 1 && !removed.empty()) removed = sumset(removed, b, cap);
    layers.push_back(removed.empty() ? sums : set_difference(sums, removed));
  }
  return graph_from_layers(layers, b);
}

// ---------------------------------------------------------------------------
// Channels and images

namespace {

std::vector<char> mark_subset(const LayeredGraph& g, std::span<const VertexId> subset, std::size_t layer,
                              const char* what) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (auto v : subset) {
    auto k = g.find_index(v);
    if (!k || g.layer_at(*k) != layer) {
      std::ostringstream os;
      os << what << " vertex " << v << " is not in layer " << layer;
      throw InputError(os.str());
    }
    mark[*k] = 1;
  }
  return mark;
}

}  // namespace

LayeredGraph channel(const LayeredGraph& g, std::span<const VertexId> from, std::size_t i,
                     std::span<const VertexId> to, std::size_t j) {
  if (i >= j || j > g.height()) throw InputError("channel needs layers i < j <= height");
  auto fwd = mark_subset(g, from, i, "channel source");
  auto bwd = mark_subset(g, to, j, "channel target");
  for (std::size_t k = g.layer_offset(i); k < g.layer_offset(j); ++k) {
    if (!fwd[k]) continue;
    for (auto w : g.out_index(k)) fwd[w] = 1;
  }
  for (std::size_t k = g.layer_offset(j + 1); k-- > g.layer_offset(i + 1);) {
    if (!bwd[k]) continue;
    for (auto u : g.in_index(k)) bwd[u] = 1;
  }

  std::vector<std::vector<VertexId>> layers(j - i + 1);
  std::vector<std::optional<GElement>> labels;
  std::vector<std::size_t> remap(g.vertex_count(), SIZE_MAX);
  for (std::size_t k = g.layer_offset(i); k < g.layer_offset(j + 1); ++k) {
    if (fwd[k] && bwd[k]) {
      remap[k] = labels.size();
      layers[g.layer_at(k) - i].push_back(g.id_at(k));
      labels.push_back(g.label(g.id_at(k)));
    }
  }
  std::vector<std::vector<std::size_t>> out(labels.size());
  for (std::size_t k = g.layer_offset(i); k < g.layer_offset(j); ++k) {
    if (remap[k] == SIZE_MAX) continue;
    for (auto w : g.out_index(k)) {
      if (remap[w] != SIZE_MAX) out[remap[k]].push_back(remap[w]);
    }
  }
  return LayeredGraph::from_parts(std::move(layers), std::move(labels), std::move(out));
}

LayeredGraph channel_of(const LayeredGraph& g, std::span<const VertexId> bottom) {
  if (g.height() == 0) {
    auto mark = mark_subset(g, bottom, 0, "channel source");
    std::vector<std::vector<VertexId>> layers(1);
    std::vector<std::optional<GElement>> labels;
    for (std::size_t k = 0; k < g.layer_size(0); ++k) {
      if (mark[k]) {
        layers[0].push_back(g.id_at(k));
        labels.push_back(g.label(g.id_at(k)));
      }
    }
    std::vector<std::vector<std::size_t>> out(labels.size());
    return LayeredGraph::from_parts(std::move(layers), std::move(labels), std::move(out));
  }
  return channel(g, bottom, 0, g.layer(g.height()), g.height());
}

std::vector<VertexId> image(const LayeredGraph& g, std::span<const VertexId> z, std::size_t i) {
  if (i > g.height()) throw InputError("image level exceeds graph height");
  auto mark = mark_subset(g, z, 0, "image source");
  for (std::size_t k = 0; k < g.layer_offset(i); ++k) {
    if (!mark[k]) continue;
    for (auto w : g.out_index(k)) mark[w] = 1;
  }
  std::vector<VertexId> r;
  for (std::size_t k = g.layer_offset(i); k < g.layer_offset(i + 1); ++k) {
    if (mark[k]) r.push_back(g.id_at(k));
  }
  return r;
}

std::vector<std::size_t> singleton_image_sizes(const LayeredGraph& g, std::size_t i) {
  if (i > g.height()) throw InputError("image level exceeds graph height");
  const std::size_t n0 = g.layer_size(0);
  std::vector<std::size_t> sizes(n0, 0);
  std::vector<std::size_t> stamp(g.vertex_count(), SIZE_MAX);
  std::vector<std::size_t> frontier, next;
  for (std::size_t v = 0; v < n0; ++v) {
    frontier.assign(1, v);
    for (std::size_t step = 0; step < i; ++step) {
      next.clear();
      for (auto u : frontier) {
        for (auto w : g.out_index(u)) {
          if (stamp[w] != v) {
            stamp[w] = v;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
    sizes[v] = frontier.size();
  }
  return sizes;
}

// ---------------------------------------------------------------------------
// Plünnecke conditions

namespace {

/// Kuhn's augmenting-path matching. left[l] lists right-vertex slots; returns
/// the first left vertex that could not be matched, or SIZE_MAX.
class Matcher {
 public:
  std::size_t first_unmatched(const std::vector<std::vector<std::size_t>>& left, std::size_t right_size) {
    match_right_.assign(right_size, SIZE_MAX);
    for (std::size_t l = 0; l < left.size(); ++l) {
      visited_.assign(right_size, 0);
      if (!augment(left, l)) return l;
    }
    return SIZE_MAX;
  }

 private:
  bool augment(const std::vector<std::vector<std::size_t>>& left, std::size_t l) {
    for (auto r : left[l]) {
      if (visited_[r]) continue;
      visited_[r] = 1;
      if (match_right_[r] == SIZE_MAX || augment(left, match_right_[r])) {
        match_right_[r] = l;
        return true;
      }
    }
    return false;
  }

  std::vector<std::size_t> match_right_;
  std::vector<char> visited_;
};

bool sorted_contains(std::span<const std::size_t> xs, std::size_t x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

}  // namespace

CommutativityReport check_commutative(const LayeredGraph& g, const CommutativityOptions& opts) {
  if (g.edge_count() > opts.max_edges) {
    std::ostringstream os;
    os << "graph has " << g.edge_count() << " edges; commutativity check is capped at " << opts.max_edges;
    throw GuardError("commutativity-edge-cap", os.str());
  }
  CommutativityReport report;
  Matcher matcher;
  std::vector<std::vector<std::size_t>> left;

  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    // Upward: for each edge uv, the out-neighbours w_k of v need distinct
    // mid-vertices v_k with u v_k and v_k w_k edges.
    const auto outs_v = g.out_index(v);
    if (!outs_v.empty()) {
      for (auto u : g.in_index(v)) {
        const auto mids = g.out_index(u);
        left.assign(outs_v.size(), {});
        for (std::size_t k = 0; k < outs_v.size(); ++k) {
          for (std::size_t r = 0; r < mids.size(); ++r) {
            if (sorted_contains(g.out_index(mids[r]), outs_v[k])) left[k].push_back(r);
          }
        }
        if (auto bad = matcher.first_unmatched(left, mids.size()); bad != SIZE_MAX) {
          report.upward_ok = false;
          report.violations.push_back({CommutativityViolation::Direction::upward, g.id_at(u), g.id_at(v),
                                       g.id_at(outs_v[bad])});
        }
      }
    }
    // Downward: for each edge vw, the in-neighbours u_k of v need distinct
    // mid-vertices v_k with u_k v_k and v_k w edges.
    const auto ins_v = g.in_index(v);
    if (!ins_v.empty()) {
      for (auto w : g.out_index(v)) {
        const auto mids = g.in_index(w);
        left.assign(ins_v.size(), {});
        for (std::size_t k = 0; k < ins_v.size(); ++k) {
          for (std::size_t r = 0; r < mids.size(); ++r) {
            if (sorted_contains(g.out_index(ins_v[k]), mids[r])) left[k].push_back(r);
          }
        }
        if (auto bad = matcher.first_unmatched(left, mids.size()); bad != SIZE_MAX) {
          report.downward_ok = false;
          report.violations.push_back({CommutativityViolation::Direction::downward, g.id_at(ins_v[bad]),
                                       g.id_at(v), g.id_at(w)});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// JSON

nlohmann::json to_json(const LayeredGraph& g) {
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t i = 0; i < g.layer_count(); ++i) {
    layers.push_back(std::vector<VertexId>(g.layer(i).begin(), g.layer(i).end()));
  }
  nlohmann::json labels = nlohmann::json::object();
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    if (const auto& l = g.label(g.id_at(k))) labels[std::to_string(g.id_at(k))] = l->coords;
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json j;
  j["height"] = g.height();
  j["layers"] = std::move(layers);
  j["labels"] = std::move(labels);
  j["edges"] = std::move(edges);
  return j;
}

LayeredGraph graph_from_json(const nlohmann::json& j) {
  try {
    const auto height = j.at("height").get<std::size_t>();
    const auto& layers = j.at("layers");
    if (layers.size() != height + 1) throw InputError("graph JSON: layer count must be height + 1");
    std::map<VertexId, GElement> labels;
    if (j.contains("labels")) {
      for (const auto& [key, value] : j.at("labels").items()) {
        labels[std::stoll(key)] = GElement{value.get<std::vector<std::int64_t>>()};
      }
    }
    LayeredGraph::Builder builder(height);
    for (std::size_t i = 0; i <= height; ++i) {
      for (auto id : layers.at(i).get<std::vector<VertexId>>()) {
        auto it = labels.find(id);
        builder.add_vertex(i, id, it == labels.end() ? std::nullopt : std::optional<GElement>(it->second));
      }
    }
    for (const auto& e : j.at("edges")) builder.add_edge(e.at(0).get<VertexId>(), e.at(1).get<VertexId>());
    return std::move(builder).build();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace sumsetlab
