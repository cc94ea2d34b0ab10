#pragma once

#include "paso/grounder.hpp"
#include "paso/interpretation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace paso {

inline constexpr std::uint64_t kDefaultMaxCandidates = 10'000'000;

/// The naf-free program left after removing rules whose naf items h contradicts.
struct Reduct {
  std::vector<GroundRule> rules;
  const GroundProgram* program = nullptr;  // supplies tau
};

/// Binds annotation variables from the bare-variable positive items of a body:
/// `F:V` requires F to be defined and binds V to its value. Repeated binders must agree.
std::optional<Bindings> bind_annotation_variables(const PInterpretation& h,
                                                  std::span<const AnnotatedGroundFormula> positive);

Reduct compute_reduct(const GroundProgram& program, const PInterpretation& h);

bool body_satisfied(const PInterpretation& h, const GroundRule& rule);
bool satisfies_rule(const PInterpretation& h, const GroundRule& rule);

/// Rule satisfaction plus the head aggregation condition: for each atom a, the
/// tau(a)-composition of the annotations of a in fired rules whose disjunct h
/// satisfies is below h(a). Compound formulas are checked against their parts.
bool is_p_model(const PInterpretation& h, std::span<const GroundRule> rules, const GroundProgram& program);
bool is_p_model(const PInterpretation& h, const GroundProgram& program);
bool is_p_model(const PInterpretation& h, const Reduct& reduct);

/// For every compound body formula: composition of the parts' values <=_t its value.
bool compounds_consistent(const PInterpretation& h, const GroundProgram& program);

/// Per head atom, the closure of its head annotations under tau-composition, without [0,0].
struct CandidateLattice {
  std::vector<AtomId> atoms;                     // ascending id, non-empty cells only
  std::vector<std::vector<ProbInterval>> cells;  // lexicographically sorted

  /// Number of candidates, saturating at UINT64_MAX.
  std::uint64_t size() const;
  const std::vector<ProbInterval>* cell(AtomId atom) const;
};

CandidateLattice build_lattice(const GroundProgram& program);

/// Streams every candidate of a lattice in lexicographic order: the lowest atom id
/// is most significant and "undefined" precedes each cell's values.
class CandidateStream {
 public:
  /// Throws ResourceError when the lattice holds more than max_candidates candidates.
  CandidateStream(const CandidateLattice& lattice, std::uint64_t max_candidates);

  std::uint64_t count() const noexcept { return count_; }
  PInterpretation at(std::uint64_t index) const;
  bool next(PInterpretation& out);

 private:
  const CandidateLattice& lattice_;
  std::uint64_t count_;
  std::uint64_t cursor_ = 0;
};

std::vector<PInterpretation> enumerate_candidates(const GroundProgram& program,
                                                  std::uint64_t max_candidates = kDefaultMaxCandidates);

struct SolveOptions {
  std::uint64_t max_candidates = kDefaultMaxCandidates;
  unsigned workers = 1;
};

/// Candidates h that are p-models of the program and of its reduct by h, such that
/// no candidate strictly below h in the truth order is a p-model of that reduct.
std::vector<PInterpretation> answer_sets(const GroundProgram& program, const SolveOptions& options = {});

}  // namespace paso
