#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "sumsetlab/group.hpp"

namespace sumsetlab {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Independent stream for case `index` of criterion `stream` under `seed`.
Rng case_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform in [lo, hi]. Plain modulo keeps draws identical across standard
/// libraries; the bias is irrelevant here.
std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Up to `max_size` (at least one) distinct integers in [0, range).
GSet random_set_z(Rng& rng, std::size_t max_size, std::int64_t range);

/// Up to `max_size` (at least one) distinct elements of Z_m1 x Z_m2.
GSet random_set_cyclic2(Rng& rng, const GroupSpace& space, std::size_t max_size);

struct RandomPair {
  GSet a;
  GSet b;
};

/// Shared-space pair: half the time in Z, otherwise in Z_m1 x Z_m2 with
/// 3 <= m_i <= 9.
RandomPair random_pair(Rng& rng, std::size_t max_a, std::size_t max_b);

/// A set in the same space as `like`, up to `max_size` elements.
GSet random_set_like(Rng& rng, const GSet& like, std::size_t max_size);

}  // namespace sumsetlab
