#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumsetlab {

/// Dinic's algorithm on integer capacities.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  void add_edge(std::size_t from, std::size_t to, std::int64_t capacity);
  std::int64_t run(std::size_t source, std::size_t sink);

  /// After run(): nodes that cannot reach the sink in the residual network.
  /// This is the source side of the unique inclusion-maximal minimum cut.
  std::vector<char> maximal_source_side(std::size_t sink) const;

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };
  bool build_levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t u, std::size_t sink, std::int64_t limit);

  std::vector<Arc> arcs_;  // arc k and k ^ 1 are mutual reverses
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace sumsetlab
