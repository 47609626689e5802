#include "qcmine/rational.hpp"

#include <charconv>
#include <cstdio>

namespace qcmine {

namespace {

std::int64_t parse_i64_strict(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer in ratio: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw std::invalid_argument("empty ratio");

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    return Rational(parse_i64_strict(std::string_view(s).substr(0, slash)),
                    parse_i64_strict(std::string_view(s).substr(slash + 1)));
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.size() > 18) throw std::invalid_argument("ratio has too many decimal digits");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool neg = !whole.empty() && whole[0] == '-';
    const std::int64_t w = (whole.empty() || whole == "-") ? 0 : parse_i64_strict(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_i64_strict(frac);
    if (f < 0) throw std::invalid_argument("bad ratio: '" + text + "'");
    const std::int64_t mag = (w < 0 ? -w : w) * den + f;
    return Rational(neg || w < 0 ? -mag : mag, den);
  }
  return Rational(parse_i64_strict(s), 1);
}

std::string Rational::str() const {
  char buf[64];
  if (den == 1) {
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(num));
  } else {
    std::snprintf(buf, sizeof(buf), "%lld/%lld", static_cast<long long>(num),
                  static_cast<long long>(den));
  }
  return buf;
}

}  // namespace qcmine
