#include "sumsetlab/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace sumsetlab {

MaxFlow::MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

void MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
  adj_[from].push_back(arcs_.size());
  arcs_.push_back({to, capacity});
  adj_[to].push_back(arcs_.size());
  arcs_.push_back({from, 0});
}

bool MaxFlow::build_levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<std::size_t> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const auto u = q.front();
    q.pop();
    for (auto k : adj_[u]) {
      const auto& a = arcs_[k];
      if (a.cap > 0 && level_[a.to] < 0) {
        level_[a.to] = level_[u] + 1;
        q.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(std::size_t u, std::size_t sink, std::int64_t limit) {
  if (u == sink) return limit;
  for (auto& i = next_[u]; i < adj_[u].size(); ++i) {
    const auto k = adj_[u][i];
    auto& a = arcs_[k];
    if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
    if (const auto pushed = push(a.to, sink, std::min(limit, a.cap)); pushed > 0) {
      a.cap -= pushed;
      arcs_[k ^ 1U].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (const auto f = push(source, sink, std::numeric_limits<std::int64_t>::max())) total += f;
  }
  return total;
}

std::vector<char> MaxFlow::maximal_source_side(std::size_t sink) const {
  // Walk backwards from the sink: y reaches x when the arc y -> x (the
  // reverse of x's arc k) still has residual capacity.
  std::vector<char> reaches_sink(adj_.size(), 0);
  std::queue<std::size_t> q;
  reaches_sink[sink] = 1;
  q.push(sink);
  while (!q.empty()) {
    const auto x = q.front();
    q.pop();
    for (auto k : adj_[x]) {
      const auto y = arcs_[k].to;
      if (!reaches_sink[y] && arcs_[k ^ 1U].cap > 0) {
        reaches_sink[y] = 1;
        q.push(y);
      }
    }
  }
  std::vector<char> side(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) side[v] = reaches_sink[v] ? 0 : 1;
  return side;
}

}  // namespace sumsetlab
