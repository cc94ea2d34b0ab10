#include "paso/interval.hpp"

#include "paso/error.hpp"

#include <utility>

namespace paso {

ProbInterval::ProbInterval(Rational lower, Rational upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_ < 0 || upper_ > 1 || lower_ > upper_) {
    throw EvalError("invalid probability interval [" + format_rational(lower_) + "," +
                    format_rational(upper_) + "]");
  }
}

std::string format_interval(const ProbInterval& interval) {
  if (interval.is_point()) return format_rational(interval.lower());
  return "[" + format_rational(interval.lower()) + "," + format_rational(interval.upper()) + "]";
}

}  // namespace paso
