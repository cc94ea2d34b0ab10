#pragma once

#include "paso/program.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace paso {

struct GroundHead {
  AtomId atom = 0;
  ProbInterval annotation;

  friend bool operator==(const GroundHead&, const GroundHead&) = default;
};

struct GroundRule {
  std::vector<GroundHead> head;
  std::vector<AnnotatedGroundFormula> positive;
  std::vector<AnnotatedGroundFormula> naf;

  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

struct GroundCombination {
  BooleanCombination::Kind kind = BooleanCombination::Kind::leaf;
  AnnotatedGroundFormula leaf;
  bool naf = false;
  std::vector<GroundCombination> children;

  friend bool operator==(const GroundCombination&, const GroundCombination&) = default;
};

struct GroundPreferenceRule {
  std::vector<GroundCombination> head;
  std::vector<AnnotatedGroundFormula> positive;
  std::vector<AnnotatedGroundFormula> naf;

  friend bool operator==(const GroundPreferenceRule&, const GroundPreferenceRule&) = default;
};

/// A variable-free program. Atoms occurring in generator heads are interned first,
/// in source order; `tau` is indexed by atom id and total over the table.
struct GroundProgram {
  AtomTable atoms;
  std::vector<GroundRule> rules;
  std::vector<GroundPreferenceRule> preferences;
  std::vector<const PStrategy*> tau;
  std::map<std::string, const PStrategy*> strategy_directives;

  const PStrategy& strategy_for(AtomId atom) const { return *tau.at(atom); }
};

struct Diagnostic {
  SourceLocation loc;
  std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

/// Empty iff every object variable is bound by a positive body literal, by an
/// equality with a bound term, or by a #domain declaration, and every annotation
/// variable is the bare annotation of some positive body formula.
std::vector<Diagnostic> check_safety(const Program& program);

struct GroundOptions {
  std::uint64_t max_instances = 10'000'000;
};

/// Cartesian instantiation over the Herbrand universe (constants of the program,
/// including #domain constants), variables in name order. Instances whose
/// comparisons are false are dropped. Throws SemanticError for unsafe programs and
/// ResourceError when the instance cap is exceeded.
GroundProgram ground(const Program& program, const GroundOptions& options = {});

/// `.paso` text of the ground program; grounding it again reproduces the program.
std::string format_ground(const GroundProgram& program);

std::string format_ground_combination(const GroundCombination& c, const AtomTable& atoms);

}  // namespace paso
