#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include <json.hpp>

namespace sumsetlab {

/// Element of Z^k x (finite cyclic factors). Coordinates are kept normalized
/// by the owning GroupSpace, so equality and ordering are plain
/// lexicographic comparisons of `coords`.
struct GElement {
  std::vector<std::int64_t> coords;

  auto operator<=>(const GElement&) const = default;
  bool operator==(const GElement&) const = default;
};

struct GElementHash {
  std::size_t operator()(const GElement& e) const noexcept;
};

/// Ambient commutative group Z_{n_1} x ... x Z_{n_k}, where a modulus of 0
/// stands for a copy of the integers.
class GroupSpace {
 public:
  explicit GroupSpace(std::vector<std::int64_t> moduli);

  std::size_t rank() const noexcept { return moduli_.size(); }
  std::span<const std::int64_t> moduli() const noexcept { return moduli_; }

  /// Reduces every coordinate into its canonical residue.
  GElement normalize(std::vector<std::int64_t> coords) const;
  GElement identity() const;
  GElement add(const GElement& x, const GElement& y) const;
  GElement subtract(const GElement& x, const GElement& y) const;

  bool operator==(const GroupSpace&) const = default;

 private:
  std::vector<std::int64_t> moduli_;
};

/// Free-function form of GroupSpace::normalize.
GElement normalize(std::vector<std::int64_t> coords, const GroupSpace& space);

/// Finite set of distinct normalized elements, sorted lexicographically.
class GSet {
 public:
  explicit GSet(GroupSpace space) : space_(std::move(space)) {}
  /// Normalizes, sorts and deduplicates.
  GSet(GroupSpace space, std::vector<GElement> elements);
  GSet(GroupSpace space, const std::vector<std::vector<std::int64_t>>& coords);

  const GroupSpace& space() const noexcept { return space_; }
  std::span<const GElement> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const GElement& x) const;
  /// Position of `x` in canonical order, or size() when absent.
  std::size_t index_of(const GElement& x) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const GSet&) const = default;

  /// Adopts `elements` as-is; they must already be normalized, sorted and
  /// distinct.
  static GSet from_canonical(GroupSpace space, std::vector<GElement> elements);

 private:
  GroupSpace space_;
  std::vector<GElement> elements_;
};

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// {a + b}. Throws InputError on space mismatch or an empty operand and
/// GuardError("sumset-cap") when the result would exceed `cap` elements.
GSet sumset(const GSet& a, const GSet& b, std::size_t cap = kUnlimited);

/// A + hB, computed as ((A + B) + B) + ... ; h = 0 returns A.
GSet iterated_sumset(const GSet& a, const GSet& b, unsigned h,
                     std::size_t cap = kUnlimited);

/// [|A|, |A+B|, ..., |A+hB|], holding at most two layers at a time.
std::vector<std::size_t> cardinality_stream(const GSet& a, const GSet& b, unsigned h,
                                            std::size_t cap = kUnlimited);

GSet set_difference(const GSet& a, const GSet& b);
GSet set_union(const GSet& a, const GSet& b);
GSet translate(const GSet& a, const GElement& x);
/// The one-element set {x}.
GSet singleton(const GroupSpace& space, const GElement& x);

nlohmann::json to_json(const GSet& s);
/// Accepts {"moduli": [...], "elements": [[...], ...]}; elements need not be
/// normalized.
GSet gset_from_json(const nlohmann::json& j);

}  // namespace sumsetlab
