#pragma once

// Naive reference implementations that share no code with the library:
// sets of coordinate vectors, explicit sums, exhaustive subset loops.

#include <cmath>
#include <numeric>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "sumsetlab/group.hpp"

namespace oracle {

using Point = std::vector<std::int64_t>;
using PointSet = std::set<Point>;
using Moduli = std::vector<std::int64_t>;

inline Point reduce(Point p, const Moduli& mod) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (mod[i] > 0) p[i] = ((p[i] % mod[i]) + mod[i]) % mod[i];
  }
  return p;
}

inline PointSet points(const sumsetlab::GSet& s) {
  PointSet out;
  for (const auto& e : s) out.insert(e.coords);
  return out;
}

inline Moduli moduli(const sumsetlab::GSet& s) {
  return Moduli(s.space().moduli().begin(), s.space().moduli().end());
}

inline PointSet sum(const PointSet& a, const PointSet& b, const Moduli& mod) {
  PointSet out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      Point z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
      out.insert(reduce(z, mod));
    }
  }
  return out;
}

inline PointSet iterated(PointSet a, const PointSet& b, unsigned h, const Moduli& mod) {
  for (unsigned i = 0; i < h; ++i) a = sum(a, b, mod);
  return a;
}

inline PointSet minus(const PointSet& a, const PointSet& b) {
  PointSet out;
  for (const auto& x : a) {
    if (!b.count(x)) out.insert(x);
  }
  return out;
}

struct Magnification {
  std::int64_t num = 0;
  std::int64_t den = 1;
  PointSet tight;  // union of all minimizers
};

/// min over non-empty Z in A of |(Z + iB) \ (C + (i-1)B)| / |Z|; C empty gives
/// the plain addition graph.
inline Magnification magnification(const PointSet& a, const PointSet& b, const PointSet& c, unsigned level,
                                   const Moduli& mod) {
  std::vector<Point> av(a.begin(), a.end());
  PointSet removed = c.empty() ? c : iterated(c, b, level - 1, mod);
  Magnification best;
  bool have = false;
  const std::size_t n = av.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    PointSet z;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) z.insert(av[k]);
    }
    auto img = static_cast<std::int64_t>(minus(iterated(z, b, level, mod), removed).size());
    auto zs = static_cast<std::int64_t>(z.size());
    if (!have || img * best.den < best.num * zs) {
      best.num = img;
      best.den = zs;
      best.tight = z;
      have = true;
    } else if (img * best.den == best.num * zs) {
      best.tight.insert(z.begin(), z.end());
    }
  }
  std::int64_t g = std::gcd(best.num, best.den);
  if (g > 0) {
    best.num /= g;
    best.den /= g;
  }
  return best;
}

/// Real root of prod_{i<h}(beta + i) / h! = n by long double bisection.
inline long double beta(std::uint64_t n, unsigned h) {
  auto f = [h](long double x) {
    long double v = 1;
    for (unsigned i = 0; i < h; ++i) v *= (x + i) / (i + 1);
    return v;
  };
  long double lo = 0, hi = static_cast<long double>(n) + 1;
  for (int it = 0; it < 200; ++it) {
    long double mid = (lo + hi) / 2;
    (f(mid) <= static_cast<long double>(n) ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

inline std::uint64_t binom(std::uint64_t n, unsigned k) {
  std::uint64_t v = 1;
  for (unsigned i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

}  // namespace oracle
