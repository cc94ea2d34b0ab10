#include "paso/rational.hpp"

#include <cctype>

namespace paso {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view digits) {
  Integer value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d = parse_integer(den);
    if (d == 0) return std::nullopt;
    return Rational(parse_integer(num), d);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    if (!all_digits(text)) return std::nullopt;
    return Rational(parse_integer(text));
  }
  auto whole = text.substr(0, dot);
  auto frac = text.substr(dot + 1);
  if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
  Integer scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rational(parse_integer(whole) * scale + parse_integer(frac), scale);
}

std::string format_rational(const Rational& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  bool negative = num < 0;
  if (negative) num = -num;

  Integer rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  std::string sign = negative ? "-" : "";
  if (rest != 1) return sign + num.str() + "/" + den.str();

  unsigned places = std::max(twos, fives);
  Integer scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;
  Integer scaled = num * (scale / den);
  std::string digits = scaled.str();
  if (places == 0) return sign + digits;
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return sign + digits;
}

}  // namespace paso
