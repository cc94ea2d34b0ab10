#include "paso/strategy.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace paso {
namespace {

const Rational kZero{0};
const Rational kOne{1};

Rational clip_low(const Rational& x) { return x < kZero ? kZero : x; }
Rational clip_high(const Rational& x) { return x > kOne ? kOne : x; }

// Conjunctive.

ProbInterval ignorance_conj(const ProbInterval& a, const ProbInterval& b) {
  return {clip_low(a.lower() + b.lower() - 1), std::min(a.upper(), b.upper())};
}

ProbInterval positive_conj(const ProbInterval& a, const ProbInterval& b) {
  return {std::min(a.lower(), b.lower()), std::min(a.upper(), b.upper())};
}

ProbInterval independent_conj(const ProbInterval& a, const ProbInterval& b) {
  return {a.lower() * b.lower(), a.upper() * b.upper()};
}

ProbInterval negative_conj(const ProbInterval& a, const ProbInterval& b) {
  return {clip_low(a.lower() + b.lower() - 1), clip_low(a.upper() + b.upper() - 1)};
}

// Disjunctive.

ProbInterval ignorance_disj(const ProbInterval& a, const ProbInterval& b) {
  return {std::max(a.lower(), b.lower()), clip_high(a.upper() + b.upper())};
}

ProbInterval positive_disj(const ProbInterval& a, const ProbInterval& b) {
  return {std::max(a.lower(), b.lower()), std::max(a.upper(), b.upper())};
}

ProbInterval independent_disj(const ProbInterval& a, const ProbInterval& b) {
  return {a.lower() + b.lower() - a.lower() * b.lower(),
          a.upper() + b.upper() - a.upper() * b.upper()};
}

ProbInterval exclusive_disj(const ProbInterval& a, const ProbInterval& b) {
  return {clip_high(a.lower() + b.lower()), clip_high(a.upper() + b.upper())};
}

const std::array<PStrategy, 8> kStrategies{{
    {"igc", StrategyKind::conjunctive, &ignorance_conj},
    {"pcc", StrategyKind::conjunctive, &positive_conj},
    {"ind", StrategyKind::conjunctive, &independent_conj},
    {"ncc", StrategyKind::conjunctive, &negative_conj},
    {"igd", StrategyKind::disjunctive, &ignorance_disj},
    {"pcd", StrategyKind::disjunctive, &positive_disj},
    {"ind", StrategyKind::disjunctive, &independent_disj},
    {"me", StrategyKind::disjunctive, &exclusive_disj},
}};

}  // namespace

std::span<const PStrategy> builtin_strategies() { return kStrategies; }

const PStrategy* find_strategy(std::string_view id, StrategyKind kind) {
  for (const auto& s : kStrategies) {
    if (s.id == id && s.kind == kind) return &s;
  }
  return nullptr;
}

const PStrategy& default_disjunctive_strategy() { return kStrategies[5]; }

ProbInterval compose(const PStrategy& strategy, std::span<const ProbInterval> values) {
  if (values.empty()) throw std::invalid_argument("compose: empty multiset");
  ProbInterval acc = values.front();
  for (std::size_t i = 1; i < values.size(); ++i) acc = strategy.compose2(acc, values[i]);
  return acc;
}

}  // namespace paso
