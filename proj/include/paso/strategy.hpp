#pragma once

#include "paso/interval.hpp"

#include <span>
#include <string_view>

namespace paso {

enum class StrategyKind { conjunctive, disjunctive };

/// A p-strategy: a named, commutative and associative composition of two intervals.
///
/// Built-in strategies are static objects; identity is pointer identity.
struct PStrategy {
  std::string_view id;
  StrategyKind kind;
  ProbInterval (*compose2)(const ProbInterval&, const ProbInterval&);
};

/// igc, pcc, ind, ncc (conjunctive) followed by igd, pcd, ind, me (disjunctive).
std::span<const PStrategy> builtin_strategies();

/// nullptr when no built-in strategy of that kind carries the id.
const PStrategy* find_strategy(std::string_view id, StrategyKind kind);

/// The strategy assigned to atoms without a #strategy directive (pcd).
const PStrategy& default_disjunctive_strategy();

/// Left fold of compose2 over a non-empty multiset. Throws std::invalid_argument on empty input.
ProbInterval compose(const PStrategy& strategy, std::span<const ProbInterval> values);

}  // namespace paso
