#include "sumsetlab/ratio.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

#include "sumsetlab/errors.hpp"

namespace sumsetlab {

namespace {

__extension__ using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("rational overflow");
  return static_cast<std::int64_t>(v);
}

Ratio make(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Ratio(narrow(num), narrow(den));
}

}  // namespace

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (num < 0 || (den < 0 && num > 0)) throw DomainError("ratios are non-negative");
  if (den < 0) den = -den;
  const auto g = std::gcd(num, den);
  num_ = g > 1 ? num / g : num;
  den_ = g > 1 ? den / g : den;
}

BigRational Ratio::pow(unsigned e) const {
  return BigRational(ipow(num_, e), ipow(den_, e));
}

Ratio operator+(const Ratio& a, const Ratio& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
  const i128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
  if (n < 0) throw DomainError("negative ratio");
  return make(n, i128(a.den_) * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.num_ == 0) throw DomainError("division by zero ratio");
  return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
  const i128 l = i128(a.num_) * b.den_;
  const i128 r = i128(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Ratio::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw InputError("cannot parse rational '" + std::string(text) + "'");
    }
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto d = parse_int(text.substr(slash + 1));
    if (d <= 0) throw InputError("rational denominator must be positive");
    const auto n = parse_int(text.substr(0, slash));
    if (n < 0) throw InputError("ratios are non-negative");
    return Ratio(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (frac.size() > 17) throw InputError("too many decimal digits in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const auto w = whole.empty() ? 0 : parse_int(whole);
    const auto f = frac.empty() ? 0 : parse_int(frac);
    if (w < 0 || f < 0) throw InputError("ratios are non-negative");
    return make(i128(w) * scale + f, scale);
  }
  const auto n = parse_int(text);
  if (n < 0) throw InputError("ratios are non-negative");
  return Ratio(n, 1);
}

BigInt ipow(std::int64_t base, unsigned e) {
  BigInt result = 1;
  BigInt b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

BigRational exact_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("non-finite value");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer for every finite double.
  const auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num = m;
  BigInt den = 1;
  if (exp >= 0) {
    num <<= exp;
  } else {
    den <<= -exp;
  }
  return BigRational(num, den);
}

nlohmann::json to_json(const Ratio& r) { return nlohmann::json::array({r.num(), r.den()}); }

Ratio ratio_from_json(const nlohmann::json& j) {
  try {
    return Ratio(j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed ratio JSON: ") + e.what());
  }
}

}  // namespace sumsetlab
