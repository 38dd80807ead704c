#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace sumsetlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact non-negative rational p/q, always stored in lowest terms with q > 0.
/// Magnification ratios are |image|/|Z|, so 64-bit parts are plenty; anything
/// raised to a power goes through BigInt.
class Ratio {
 public:
  constexpr Ratio() = default;
  Ratio(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  BigRational to_big() const { return BigRational(BigInt(num_), BigInt(den_)); }

  /// (p/q)^e as an exact big rational.
  BigRational pow(unsigned e) const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, const Ratio& b);

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept;

  /// "p/q", or "p" when q = 1.
  std::string str() const;
  /// Accepts "p", "p/q" or a finite decimal such as "1.25" (parsed exactly).
  static Ratio parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// base^e for non-negative integers, exact.
BigInt ipow(std::int64_t base, unsigned e);

/// Exact value of a finite double.
BigRational exact_rational(double x);

/// Serialized as [p, q].
nlohmann::json to_json(const Ratio& r);
Ratio ratio_from_json(const nlohmann::json& j);

}  // namespace sumsetlab
