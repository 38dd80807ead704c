#include "sumsetlab/generators.hpp"

#include <algorithm>
#include <vector>

namespace sumsetlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ (stream * 0x100000001b3ULL));
  s = splitmix64(s ^ index);
  return Rng(s);
}

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

GSet random_set_z(Rng& rng, std::size_t max_size, std::int64_t range) {
  const auto n = uniform(rng, 1, static_cast<std::int64_t>(max_size));
  std::vector<std::vector<std::int64_t>> pts;
  for (std::int64_t i = 0; i < n; ++i) pts.push_back({uniform(rng, 0, range - 1)});
  return GSet(GroupSpace({0}), pts);
}

GSet random_set_cyclic2(Rng& rng, const GroupSpace& space, std::size_t max_size) {
  const auto n = uniform(rng, 1, static_cast<std::int64_t>(max_size));
  std::vector<std::vector<std::int64_t>> pts;
  for (std::int64_t i = 0; i < n; ++i) {
    pts.push_back({uniform(rng, 0, space.moduli()[0] - 1), uniform(rng, 0, space.moduli()[1] - 1)});
  }
  return GSet(space, pts);
}

RandomPair random_pair(Rng& rng, std::size_t max_a, std::size_t max_b) {
  if (uniform(rng, 0, 1) == 0) {
    const auto range = uniform(rng, 8, 64);
    GSet a = random_set_z(rng, max_a, range);
    GSet b = random_set_z(rng, max_b, range);
    return {a, b};
  }
  GroupSpace space({uniform(rng, 3, 9), uniform(rng, 3, 9)});
  GSet a = random_set_cyclic2(rng, space, max_a);
  GSet b = random_set_cyclic2(rng, space, max_b);
  return {a, b};
}

GSet random_set_like(Rng& rng, const GSet& like, std::size_t max_size) {
  const auto& space = like.space();
  if (space.rank() == 2 && space.moduli()[0] > 0) return random_set_cyclic2(rng, space, max_size);
  std::int64_t hi = 1;
  for (const auto& e : like) hi = std::max(hi, e.coords[0] + 1);
  return random_set_z(rng, max_size, hi + 8);
}

}  // namespace sumsetlab
