#pragma once

#include "paso/rational.hpp"

#include <string>

namespace paso {

/// A closed subinterval [lower, upper] of [0,1] with exact endpoints.
class ProbInterval {
 public:
  /// The interval [0,0].
  ProbInterval() = default;

  /// Throws EvalError unless 0 <= lower <= upper <= 1.
  ProbInterval(Rational lower, Rational upper);

  static ProbInterval point(const Rational& value) { return ProbInterval(value, value); }
  static ProbInterval zero() { return {}; }
  static ProbInterval one() { return point(Rational(1)); }

  const Rational& lower() const noexcept { return lower_; }
  const Rational& upper() const noexcept { return upper_; }
  bool is_point() const { return lower_ == upper_; }

  friend bool operator==(const ProbInterval&, const ProbInterval&) = default;

 private:
  Rational lower_{0};
  Rational upper_{0};
};

/// Truth order: componentwise <= on both endpoints.
inline bool truth_leq(const ProbInterval& a, const ProbInterval& b) {
  return a.lower() <= b.lower() && a.upper() <= b.upper();
}

inline bool truth_lt(const ProbInterval& a, const ProbInterval& b) {
  return truth_leq(a, b) && a != b;
}

/// Lexicographic order on (lower, upper). Only used for deterministic output.
struct IntervalLexLess {
  bool operator()(const ProbInterval& a, const ProbInterval& b) const {
    if (a.lower() != b.lower()) return a.lower() < b.lower();
    return a.upper() < b.upper();
  }
};

/// "0.7" for points, "[0.2,0.5]" otherwise.
std::string format_interval(const ProbInterval& interval);

}  // namespace paso
