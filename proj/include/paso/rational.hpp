#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace paso {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an unsigned decimal ("0.75", "1") or a fraction ("3/8").
std::optional<Rational> parse_rational(std::string_view text);

/// Exact decimal text when the value has a finite decimal expansion, "p/q" otherwise.
std::string format_rational(const Rational& value);

}  // namespace paso
