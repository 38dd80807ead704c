#include "sumsetlab/magnification.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "sumsetlab/errors.hpp"
#include "sumsetlab/maxflow.hpp"

namespace sumsetlab {

namespace {

void require_level(const LayeredGraph& g, std::size_t level) {
  if (level < 1 || level > g.height()) {
    std::ostringstream os;
    os << "magnification level " << level << " outside 1.." << g.height();
    throw InputError(os.str());
  }
  if (g.layer_size(0) == 0) throw InputError("magnification needs a non-empty bottom layer");
}

/// Image of every bottom vertex at `level`, as positions within that layer.
std::vector<std::vector<std::size_t>> bottom_images(const LayeredGraph& g, std::size_t level) {
  const std::size_t n0 = g.layer_size(0);
  const std::size_t base = g.layer_offset(level);
  std::vector<std::vector<std::size_t>> images(n0);
  std::vector<std::size_t> stamp(g.vertex_count(), SIZE_MAX);
  std::vector<std::size_t> frontier, next;
  for (std::size_t v = 0; v < n0; ++v) {
    frontier.assign(1, v);
    for (std::size_t step = 0; step < level; ++step) {
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
    for (auto w : frontier) images[v].push_back(w - base);
    std::sort(images[v].begin(), images[v].end());
  }
  return images;
}

std::size_t union_size(const std::vector<std::vector<std::size_t>>& images, const std::vector<char>& in_z,
                       std::size_t layer_size) {
  std::vector<char> hit(layer_size, 0);
  std::size_t count = 0;
  for (std::size_t v = 0; v < images.size(); ++v) {
    if (!in_z[v]) continue;
    for (auto w : images[v]) {
      if (!hit[w]) {
        hit[w] = 1;
        ++count;
      }
    }
  }
  return count;
}

}  // namespace

BruteforceMagnification magnification_bruteforce(const LayeredGraph& g, std::size_t level,
                                                 std::size_t max_bottom) {
  require_level(g, level);
  const std::size_t n0 = g.layer_size(0);
  if (n0 > max_bottom || n0 > 30) {
    std::ostringstream os;
    os << "bottom layer has " << n0 << " vertices; subset enumeration is capped at " << max_bottom;
    throw GuardError("subset-enumeration", os.str());
  }
  const auto images = bottom_images(g, level);
  const std::size_t words = (g.layer_size(level) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(n0, std::vector<std::uint64_t>(words, 0));
  for (std::size_t v = 0; v < n0; ++v) {
    for (auto w : images[v]) masks[v][w / 64] |= std::uint64_t{1} << (w % 64);
  }

  // Depth-first include/exclude enumeration; stack[d] holds the union of
  // the masks chosen among the first d vertices.
  Ratio best(g.layer_size(level) + 1, 1);
  std::vector<std::uint32_t> minimizers;
  std::vector<std::vector<std::uint64_t>> stack(n0 + 1, std::vector<std::uint64_t>(words, 0));
  auto visit = [&](auto&& self, std::size_t depth, std::uint32_t chosen) -> void {
    if (depth == n0) {
      if (chosen == 0) return;
      std::size_t count = 0;
      for (auto word : stack[depth]) count += static_cast<std::size_t>(std::popcount(word));
      const Ratio r(static_cast<std::int64_t>(count), std::popcount(chosen));
      if (r < best) {
        best = r;
        minimizers.assign(1, chosen);
      } else if (r == best) {
        minimizers.push_back(chosen);
      }
      return;
    }
    stack[depth + 1] = stack[depth];
    self(self, depth + 1, chosen);
    for (std::size_t k = 0; k < words; ++k) stack[depth + 1][k] = stack[depth][k] | masks[depth][k];
    self(self, depth + 1, chosen | (std::uint32_t{1} << depth));
  };
  visit(visit, 0, 0);

  std::sort(minimizers.begin(), minimizers.end());
  BruteforceMagnification out;
  std::uint32_t all = 0;
  for (auto m : minimizers) {
    all |= m;
    std::vector<VertexId> z;
    for (std::size_t v = 0; v < n0; ++v) {
      if (m >> v & 1U) z.push_back(g.id_at(v));
    }
    out.minimizers.push_back(std::move(z));
  }
  out.result.level = level;
  out.result.value = best;
  std::vector<char> in_z(n0, 0);
  for (std::size_t v = 0; v < n0; ++v) {
    if (all >> v & 1U) {
      in_z[v] = 1;
      out.result.maximal_tight_set.push_back(g.id_at(v));
    }
  }
  const auto img = union_size(images, in_z, g.layer_size(level));
  out.result.witness_check =
      Ratio(static_cast<std::int64_t>(img), static_cast<std::int64_t>(out.result.maximal_tight_set.size())) == best;
  return out;
}

MagnificationResult magnification_flow(const LayeredGraph& g, std::size_t level) {
  require_level(g, level);
  const std::size_t n0 = g.layer_size(0);
  const std::size_t ni = g.layer_size(level);
  const auto images = bottom_images(g, level);

  std::vector<char> in_z(n0, 1);
  Ratio t(static_cast<std::int64_t>(union_size(images, in_z, ni)), static_cast<std::int64_t>(n0));

  // Nodes: source, V_0 (1..n0), V_level (n0+1..n0+ni), sink.
  const std::size_t source = 0;
  const std::size_t sink = n0 + ni + 1;
  for (;;) {
    const std::int64_t p = t.num();
    const std::int64_t q = t.den();
    const std::int64_t inf = p * static_cast<std::int64_t>(n0) + 1;
    MaxFlow flow(n0 + ni + 2);
    for (std::size_t v = 0; v < n0; ++v) {
      flow.add_edge(source, 1 + v, p);
      for (auto w : images[v]) flow.add_edge(1 + v, 1 + n0 + w, inf);
    }
    for (std::size_t w = 0; w < ni; ++w) flow.add_edge(1 + n0 + w, sink, q);
    const std::int64_t cut = flow.run(source, sink);
    const std::int64_t excess = cut - p * static_cast<std::int64_t>(n0);  // min_Z q|im Z| - p|Z|

    const auto side = flow.maximal_source_side(sink);
    std::size_t z_size = 0;
    for (std::size_t v = 0; v < n0; ++v) {
      in_z[v] = side[1 + v];
      z_size += in_z[v] ? 1 : 0;
    }
    const auto img = union_size(images, in_z, ni);
    if (excess == 0) {
      // Every minimizer lies inside the maximal min-cut source side, and the
      // previous iterate's set is a minimizer, so z_size > 0 here.
      MagnificationResult r;
      r.level = level;
      r.value = t;
      for (std::size_t v = 0; v < n0; ++v) {
        if (in_z[v]) r.maximal_tight_set.push_back(g.id_at(v));
      }
      r.witness_check = z_size > 0 && Ratio(static_cast<std::int64_t>(img), static_cast<std::int64_t>(z_size)) == t;
      return r;
    }
    t = Ratio(static_cast<std::int64_t>(img), static_cast<std::int64_t>(z_size));
  }
}

PlunneckeChain plunnecke_chain(const LayeredGraph& g) {
  PlunneckeChain chain;
  const std::size_t h = g.height();
  for (std::size_t i = 1; i <= h; ++i) chain.ratios.push_back(magnification_flow(g, i).value);
  for (std::size_t i = 1; i <= h; ++i) {
    for (std::size_t j = i + 1; j <= h; ++j) {
      const auto& di = chain.ratios[i - 1];
      const auto& dj = chain.ratios[j - 1];
      // D_i^j >= D_j^i  <=>  p_i^j q_j^i >= p_j^i q_i^j
      const BigInt lhs = ipow(di.num(), static_cast<unsigned>(j)) * ipow(dj.den(), static_cast<unsigned>(i));
      const BigInt rhs = ipow(dj.num(), static_cast<unsigned>(i)) * ipow(di.den(), static_cast<unsigned>(j));
      if (lhs < rhs) {
        chain.monotone = false;
        chain.failures.emplace_back(i, j);
      }
    }
  }
  return chain;
}

StrongerPlunneckeCheck stronger_plunnecke_check(const LayeredGraph& h, std::size_t level) {
  StrongerPlunneckeCheck c;
  c.level = level;
  const auto top = static_cast<unsigned>(h.height());
  const auto j = static_cast<unsigned>(level);
  const auto n0 = static_cast<std::int64_t>(h.layer_size(0));
  const auto nj = static_cast<std::int64_t>(h.layer_size(level));
  const auto nh = static_cast<std::int64_t>(h.layer_size(top));
  c.hypothesis = magnification_flow(h, level).value == Ratio(nj, n0);
  c.power_inequality = ipow(nj, top) >= ipow(n0, top - j) * ipow(nh, j);
  if (level == 1) {
    const BigInt floor_value = ipow(nj, top) / ipow(n0, top - 1);
    c.floor_bound = BigInt(nh) <= floor_value;
  }
  return c;
}

nlohmann::json to_json(const MagnificationResult& r) {
  return {{"level", r.level}, {"ratio", to_json(r.value)}, {"tight_set", r.maximal_tight_set}};
}

}  // namespace sumsetlab
