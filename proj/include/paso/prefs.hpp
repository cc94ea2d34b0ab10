#pragma once

#include "paso/grounder.hpp"
#include "paso/interpretation.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paso {

enum class Ordering3 { strict_first, strict_second, equal, incomparable };

/// The same outcome seen from the other side.
Ordering3 flip(Ordering3 o);

/// strict_first or equal.
inline bool at_least(Ordering3 o) { return o == Ordering3::strict_first || o == Ordering3::equal; }

std::string_view ordering_name(Ordering3 o);

/// Position (1-based) of the first head combination an answer set satisfies, or
/// irrelevant when the body or every combination fails.
struct SatisfactionIndex {
  std::optional<std::size_t> index;

  static SatisfactionIndex irrelevant() { return {}; }
  static SatisfactionIndex at(std::size_t i) { return {i}; }
  bool is_irrelevant() const { return !index.has_value(); }

  friend bool operator==(const SatisfactionIndex&, const SatisfactionIndex&) = default;
};

/// "3" or "irr".
std::string format_index(const SatisfactionIndex& index);

/// `L:mu` holds iff L is defined and mu <=_t its value; `not L:mu` holds iff L is
/// undefined or mu is not below its value. Unevaluable annotations fail.
bool eval_leaf(const PInterpretation& h, const AnnotatedGroundFormula& leaf, bool naf, const Bindings& bindings = {});
bool eval_combination(const PInterpretation& h, const GroundCombination& c, const Bindings& bindings = {});

/// Bindings of the annotation variables when h satisfies the body, nullopt otherwise.
std::optional<Bindings> preference_body(const PInterpretation& h, const GroundPreferenceRule& rule);

SatisfactionIndex pref_rule_index(const PInterpretation& h, const GroundPreferenceRule& rule);

/// Compares two answer sets on one combination. Annotation variables are read from
/// each side's own bindings. Throws std::logic_error if the strict and equal
/// conditions overlap.
Ordering3 compare_combination(const PInterpretation& h1, const PInterpretation& h2, const GroundCombination& c,
                              const Bindings& b1 = {}, const Bindings& b2 = {});

Ordering3 compare_rule(const PInterpretation& h1, const PInterpretation& h2, const GroundPreferenceRule& rule);

Ordering3 pareto_compare(const PInterpretation& h1, const PInterpretation& h2,
                         std::span<const GroundPreferenceRule> rules);

Ordering3 maximal_compare(const PInterpretation& h1, const PInterpretation& h2,
                          std::span<const GroundPreferenceRule> rules);

enum class RankMode { pareto, maximal };

std::string_view rank_mode_name(RankMode mode);
std::optional<RankMode> parse_rank_mode(std::string_view name);

struct PairIssue {
  enum class Kind { incomparable, cyclic, inconsistent };
  std::size_t first = 0;  // first < second
  std::size_t second = 0;
  Kind kind = Kind::incomparable;

  friend bool operator==(const PairIssue&, const PairIssue&) = default;
};

std::string_view issue_kind_name(PairIssue::Kind kind);

struct RankingResult {
  RankMode mode = RankMode::maximal;
  std::vector<std::vector<Ordering3>> relation;  // relation[i][j] compares set i with set j
  /// Most preferred first. Present only when the relation is a total preorder.
  std::optional<std::vector<std::vector<std::size_t>>> strata;
  std::vector<PairIssue> issues;
  /// Sets no other set is strictly preferred over.
  std::vector<std::size_t> undominated;
};

RankingResult rank(std::span<const PInterpretation> sets, std::span<const GroundPreferenceRule> rules, RankMode mode,
                   unsigned workers = 1);

}  // namespace paso
