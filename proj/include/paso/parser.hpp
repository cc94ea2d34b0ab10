#pragma once

#include "paso/program.hpp"

#include <string>
#include <string_view>

namespace paso {

/// Parses `.paso` source. Throws ParseError with the offending line and column.
Program parse_program(std::string_view text);

/// Canonical text; parse_program(format_program(p)) == p.
std::string format_program(const Program& program);

std::string format_combination(const BooleanCombination& combination);
std::string format_generator_rule(const GeneratorRule& rule);
std::string format_preference_rule(const PreferenceRule& rule);

}  // namespace paso
