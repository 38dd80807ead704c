#include "sumsetlab/group.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

std::size_t GElementHash::operator()(const GElement& e) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto c : e.coords) {
    h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

GroupSpace::GroupSpace(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw InputError("group space must have rank >= 1");
  for (auto m : moduli_) {
    if (m < 0) throw InputError("group moduli must be non-negative");
  }
}

GElement GroupSpace::normalize(std::vector<std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) {
    std::ostringstream os;
    os << "element has " << coords.size() << " coordinates, space has rank " << moduli_.size();
    throw InputError(os.str());
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (const auto m = moduli_[i]; m > 0) coords[i] = ((coords[i] % m) + m) % m;
  }
  return GElement{std::move(coords)};
}

GElement GroupSpace::identity() const { return GElement{std::vector<std::int64_t>(rank(), 0)}; }

GElement GroupSpace::add(const GElement& x, const GElement& y) const {
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = x.coords[i] + y.coords[i];
    if (const auto m = moduli_[i]; m > 0 && c[i] >= m) c[i] -= m;
  }
  return GElement{std::move(c)};
}

GElement GroupSpace::subtract(const GElement& x, const GElement& y) const {
  std::vector<std::int64_t> c(rank());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = x.coords[i] - y.coords[i];
    if (const auto m = moduli_[i]; m > 0 && c[i] < 0) c[i] += m;
  }
  return GElement{std::move(c)};
}

GElement normalize(std::vector<std::int64_t> coords, const GroupSpace& space) {
  return space.normalize(std::move(coords));
}

GSet::GSet(GroupSpace space, std::vector<GElement> elements) : space_(std::move(space)) {
  elements_.reserve(elements.size());
  for (auto& e : elements) elements_.push_back(space_.normalize(std::move(e.coords)));
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

GSet::GSet(GroupSpace space, const std::vector<std::vector<std::int64_t>>& coords)
    : space_(std::move(space)) {
  elements_.reserve(coords.size());
  for (const auto& c : coords) elements_.push_back(space_.normalize(c));
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

GSet GSet::from_canonical(GroupSpace space, std::vector<GElement> elements) {
  GSet s(std::move(space));
  s.elements_ = std::move(elements);
  return s;
}

bool GSet::contains(const GElement& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t GSet::index_of(const GElement& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) return elements_.size();
  return static_cast<std::size_t>(it - elements_.begin());
}

namespace {

void require_same_space(const GSet& a, const GSet& b) {
  if (a.space() != b.space()) throw InputError("operands live in different group spaces");
}

}  // namespace

GSet sumset(const GSet& a, const GSet& b, std::size_t cap) {
  require_same_space(a, b);
  if (a.empty() || b.empty()) throw InputError("sumset operands must be non-empty");
  const auto& space = a.space();
  std::unordered_set<GElement, GElementHash> seen;
  seen.reserve(std::min(a.size() * b.size(), cap == kUnlimited ? a.size() * b.size() : cap));
  for (const auto& x : a) {
    for (const auto& y : b) {
      seen.insert(space.add(x, y));
      if (seen.size() > cap) {
        std::ostringstream os;
        os << "sumset cardinality exceeds cap " << cap;
        throw GuardError("sumset-cap", os.str());
      }
    }
  }
  std::vector<GElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return GSet::from_canonical(space, std::move(out));
}

GSet iterated_sumset(const GSet& a, const GSet& b, unsigned h, std::size_t cap) {
  require_same_space(a, b);
  if (a.empty()) throw InputError("sumset operands must be non-empty");
  GSet current = a;
  for (unsigned i = 0; i < h; ++i) current = sumset(current, b, cap);
  return current;
}

std::vector<std::size_t> cardinality_stream(const GSet& a, const GSet& b, unsigned h,
                                            std::size_t cap) {
  require_same_space(a, b);
  if (a.empty()) throw InputError("sumset operands must be non-empty");
  std::vector<std::size_t> sizes{a.size()};
  GSet current = a;
  for (unsigned i = 0; i < h; ++i) {
    GSet next = sumset(current, b, cap);
    sizes.push_back(next.size());
    current = std::move(next);
  }
  return sizes;
}

GSet set_difference(const GSet& a, const GSet& b) {
  require_same_space(a, b);
  std::vector<GElement> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return GSet::from_canonical(a.space(), std::move(out));
}

GSet set_union(const GSet& a, const GSet& b) {
  require_same_space(a, b);
  std::vector<GElement> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return GSet::from_canonical(a.space(), std::move(out));
}

GSet translate(const GSet& a, const GElement& x) {
  std::vector<GElement> out;
  out.reserve(a.size());
  for (const auto& y : a) out.push_back(a.space().add(y, x));
  std::sort(out.begin(), out.end());
  return GSet::from_canonical(a.space(), std::move(out));
}

GSet singleton(const GroupSpace& space, const GElement& x) {
  return GSet(space, std::vector<GElement>{x});
}

nlohmann::json to_json(const GSet& s) {
  nlohmann::json elems = nlohmann::json::array();
  for (const auto& e : s) elems.push_back(e.coords);
  return {{"moduli", std::vector<std::int64_t>(s.space().moduli().begin(), s.space().moduli().end())},
          {"elements", std::move(elems)}};
}

GSet gset_from_json(const nlohmann::json& j) {
  try {
    GroupSpace space(j.at("moduli").get<std::vector<std::int64_t>>());
    return GSet(std::move(space), j.at("elements").get<std::vector<std::vector<std::int64_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed set JSON: ") + e.what());
  }
}

}  // namespace sumsetlab
