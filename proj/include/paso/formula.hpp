#pragma once

#include "paso/annotation.hpp"
#include "paso/strategy.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace paso {

struct Term {
  enum class Kind { constant, variable };
  Kind kind = Kind::constant;
  std::string name;

  static Term constant(std::string name) { return {Kind::constant, std::move(name)}; }
  static Term var(std::string name) { return {Kind::variable, std::move(name)}; }
  bool is_variable() const { return kind == Kind::variable; }

  friend bool operator==(const Term&, const Term&) = default;
};

/// An atom or a classically negated atom (`-p(a)`), possibly with variables.
struct Literal {
  bool negated = false;
  std::string predicate;
  std::vector<Term> terms;

  bool is_ground() const;
  friend bool operator==(const Literal&, const Literal&) = default;
};

enum class Connective { single, conj, disj };

/// `l`, `l1 ^s ... ^s ln` or `l1 vs ... vs ln` over distinct literals.
struct HybridFormula {
  Connective connective = Connective::single;
  const PStrategy* strategy = nullptr;  // null iff single
  std::vector<Literal> parts;

  static HybridFormula single(Literal literal) {
    return {Connective::single, nullptr, {std::move(literal)}};
  }

  friend bool operator==(const HybridFormula&, const HybridFormula&) = default;
};

std::string format_term(const Term& term);
std::string format_literal(const Literal& literal);
std::string format_formula(const HybridFormula& formula);

// Ground level.

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

std::string format_atom(const GroundAtom& atom);

using AtomId = std::uint32_t;

/// Interns ground atoms. Ids are dense and assigned in insertion order.
class AtomTable {
 public:
  AtomId intern(const GroundAtom& atom);
  std::optional<AtomId> find(const GroundAtom& atom) const;
  const GroundAtom& operator[](AtomId id) const { return atoms_.at(id); }
  std::size_t size() const noexcept { return atoms_.size(); }

 private:
  std::vector<GroundAtom> atoms_;
  std::map<GroundAtom, AtomId> index_;
};

struct GroundLiteral {
  AtomId atom = 0;
  bool negated = false;

  friend auto operator<=>(const GroundLiteral&, const GroundLiteral&) = default;
};

struct GroundFormula {
  Connective connective = Connective::single;
  const PStrategy* strategy = nullptr;
  std::vector<GroundLiteral> parts;

  static GroundFormula single(GroundLiteral literal) {
    return {Connective::single, nullptr, {literal}};
  }
  static GroundFormula atom(AtomId id) { return single({id, false}); }

  friend bool operator==(const GroundFormula&, const GroundFormula&) = default;
};

std::string format_ground_literal(const GroundLiteral& literal, const AtomTable& atoms);
std::string format_ground_formula(const GroundFormula& formula, const AtomTable& atoms);

/// `F : mu` in a rule body or a preference leaf. The evaluated annotation is cached
/// when it is variable-free.
struct AnnotatedGroundFormula {
  GroundFormula formula;
  Annotation annotation;
  std::optional<ProbInterval> constant;

  AnnotatedGroundFormula() = default;
  AnnotatedGroundFormula(GroundFormula f, Annotation a);

  std::optional<std::string> binder() const { return annotation.binder_variable(); }

  friend bool operator==(const AnnotatedGroundFormula& a, const AnnotatedGroundFormula& b) {
    return a.formula == b.formula && a.annotation == b.annotation;
  }
};

}  // namespace paso
