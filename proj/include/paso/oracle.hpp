#pragma once

#include "paso/grounder.hpp"
#include "paso/interpretation.hpp"
#include "paso/prefs.hpp"
#include "paso/program.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace paso::oracle {

inline constexpr std::uint64_t kMaxBruteCandidates = 100'000;

/// Exhaustive reference search: every lattice candidate is checked for being a
/// p-model of the program and of its reduct, and for minimality against every
/// other candidate. Throws ResourceError above kMaxBruteCandidates candidates.
std::vector<PInterpretation> brute_answer_sets(const GroundProgram& program);

/// Unannotated image of a program whose annotations are all [1,1].
struct ClassicalCombination {
  enum class Kind { literal, conj, disj };
  Kind kind = Kind::literal;
  std::string literal;  // "a" or "-a"
  bool naf = false;
  std::vector<ClassicalCombination> children;
};

struct ClassicalRule {
  std::vector<std::string> head;
  std::vector<std::string> positive;
  std::vector<std::string> naf;
};

struct ClassicalPreference {
  std::vector<ClassicalCombination> head;
  std::vector<std::string> positive;
  std::vector<std::string> naf;
};

struct ClassicalProgram {
  std::vector<ClassicalRule> rules;
  std::vector<ClassicalPreference> preferences;
};

/// Throws SemanticError unless the program is variable-free, uses single literals
/// only and every annotation is [1,1].
ClassicalProgram to_classical(const Program& program);

using AtomSet = std::set<std::string>;

/// Subset-minimal models of the Gelfond-Lifschitz reduct, sorted.
std::vector<AtomSet> classical_answer_sets(const ClassicalProgram& program);

struct ClassicalRanking {
  std::vector<AtomSet> sets;
  std::vector<std::vector<Ordering3>> relation;  // Pareto
  std::vector<std::size_t> undominated;
};

/// Pareto comparison of classical answer sets by satisfaction degree. A rule whose
/// body fails or whose combinations all fail gives the set the lowest rank.
ClassicalRanking classical_rank(const ClassicalProgram& program);

struct GenParams {
  unsigned atoms = 3;
  unsigned rules = 4;
  unsigned preferences = 2;
  bool classical = false;
};

/// Deterministic small random program over the atoms a, b, c, ...
Program gen_random(std::uint64_t seed, const GenParams& params);

/// Source text of gen_random's program.
std::string gen_random_text(std::uint64_t seed, const GenParams& params);

}  // namespace paso::oracle
