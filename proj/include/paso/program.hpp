#pragma once

#include "paso/formula.hpp"

#include <string>
#include <vector>

namespace paso {

struct SourceLocation {
  int line = 0;
  int column = 0;

  // Positions never take part in structural equality of programs.
  friend bool operator==(const SourceLocation&, const SourceLocation&) { return true; }
};

struct AnnotatedFormula {
  HybridFormula formula;
  Annotation annotation;

  friend bool operator==(const AnnotatedFormula&, const AnnotatedFormula&) = default;
};

struct HeadAtom {
  Literal atom;
  Annotation annotation;

  friend bool operator==(const HeadAtom&, const HeadAtom&) = default;
};

struct Comparison {
  enum class Op { eq, ne };
  Op op = Op::eq;
  Term lhs;
  Term rhs;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// `a1:mu1 | ... | ak:muk :- A1:mu, ..., not B1:mu, ..., X != Y.`
struct GeneratorRule {
  std::vector<HeadAtom> head;
  std::vector<AnnotatedFormula> positive;
  std::vector<AnnotatedFormula> naf;
  std::vector<Comparison> comparisons;
  SourceLocation loc;

  friend bool operator==(const GeneratorRule&, const GeneratorRule&) = default;
};

/// Binary and/or tree over annotated hybrid literals; negation as failure only at leaves.
struct BooleanCombination {
  enum class Kind { leaf, conj, disj };
  Kind kind = Kind::leaf;
  AnnotatedFormula leaf;
  bool naf = false;
  std::vector<BooleanCombination> children;  // exactly two for conj/disj

  static BooleanCombination make_leaf(AnnotatedFormula f, bool naf);
  static BooleanCombination make_node(Kind kind, BooleanCombination lhs, BooleanCombination rhs);

  friend bool operator==(const BooleanCombination&, const BooleanCombination&) = default;
};

/// `C1 >> C2 >> ... >> Ck :- body.` Head order is the preference order.
struct PreferenceRule {
  std::vector<BooleanCombination> head;
  std::vector<AnnotatedFormula> positive;
  std::vector<AnnotatedFormula> naf;
  std::vector<Comparison> comparisons;
  SourceLocation loc;

  friend bool operator==(const PreferenceRule&, const PreferenceRule&) = default;
};

/// `#strategy pred = sid.` assigns the aggregation strategy for every atom of `pred`.
struct StrategyDirective {
  std::string predicate;
  const PStrategy* strategy = nullptr;
  SourceLocation loc;

  friend bool operator==(const StrategyDirective&, const StrategyDirective&) = default;
};

/// `#domain X = {c1, ..., cn}.` ranges the variable X wherever it is otherwise unbound.
struct DomainDecl {
  std::string variable;
  std::vector<std::string> constants;
  SourceLocation loc;

  friend bool operator==(const DomainDecl&, const DomainDecl&) = default;
};

struct Program {
  std::vector<GeneratorRule> generators;
  std::vector<PreferenceRule> preferences;
  std::vector<StrategyDirective> strategies;
  std::vector<DomainDecl> domains;

  bool empty() const {
    return generators.empty() && preferences.empty() && strategies.empty() && domains.empty();
  }

  friend bool operator==(const Program&, const Program&) = default;
};

}  // namespace paso
