#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qcmine {

/// Exact ratio of two signed 64-bit integers, kept in lowest terms.
///
/// Density thresholds such as 0.70 or 19/20 sit exactly on decision
/// boundaries, so all threshold comparisons in the library go through
/// this type instead of floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
  explicit Rational(std::int64_t n) : num(n), den(1) {}

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Parses "1/3", "0.85", "1", or ".7". Throws std::invalid_argument on junk.
  static Rational parse(const std::string& text);

  /// Decimal rendering that round-trips through parse ("1/3" stays "1/3").
  std::string str() const;
};

/// Sign of a/b - c/d without division; b and d must be positive.
inline int compare_frac(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const __int128 lhs = static_cast<__int128>(a) * d;
  const __int128 rhs = static_cast<__int128>(c) * b;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace qcmine
