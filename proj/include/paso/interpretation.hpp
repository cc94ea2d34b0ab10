#pragma once

#include "paso/formula.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace paso {

/// A partial map from ground literals to intervals. Compound formulas are never
/// stored; their values are derived by value_of.
///
/// Undefined literals read as [0,0] for ordering and rule satisfaction, but
/// definedness stays observable for the preference semantics.
class PInterpretation {
 public:
  using Entry = std::pair<GroundLiteral, ProbInterval>;

  PInterpretation() = default;
  explicit PInterpretation(std::vector<Entry> entries);

  void assign(GroundLiteral literal, ProbInterval value);
  void erase(GroundLiteral literal);

  const ProbInterval* find(GroundLiteral literal) const;
  bool defined(GroundLiteral literal) const { return find(literal) != nullptr; }
  ProbInterval read(GroundLiteral literal) const;

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const PInterpretation&, const PInterpretation&) = default;

 private:
  std::vector<Entry> entries_;  // sorted by literal, unique keys
};

/// Single formulas read the map; compounds compose their parts (undefined parts read
/// [0,0]) and are defined iff at least one part is defined.
std::optional<ProbInterval> value_of(const PInterpretation& h, const GroundFormula& formula);

/// value_of with undefined read as [0,0].
ProbInterval read_value(const PInterpretation& h, const GroundFormula& formula);

/// Pointwise truth order, undefined entries reading [0,0].
bool pointwise_leq(const PInterpretation& a, const PInterpretation& b);

/// Drops entries defined at [0,0].
PInterpretation normalized(const PInterpretation& h);

/// Lexicographic order over the atom table: undefined before defined, then interval lex order.
bool interpretation_less(const PInterpretation& a, const PInterpretation& b);

/// `{a:0.7, b:[0.2,0.5]}`
std::string format_interpretation(const PInterpretation& h, const AtomTable& atoms);

}  // namespace paso
