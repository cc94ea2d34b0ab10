#include "paso/formula.hpp"

namespace paso {

bool Literal::is_ground() const {
  for (const auto& t : terms) {
    if (t.is_variable()) return false;
  }
  return true;
}

std::string format_term(const Term& term) { return term.name; }

std::string format_literal(const Literal& literal) {
  std::string out = literal.negated ? "-" : "";
  out += literal.predicate;
  if (!literal.terms.empty()) {
    out += "(";
    for (std::size_t i = 0; i < literal.terms.size(); ++i) {
      if (i) out += ",";
      out += format_term(literal.terms[i]);
    }
    out += ")";
  }
  return out;
}

namespace {

template <class Part, class Fmt>
std::string format_compound(Connective connective, const PStrategy* strategy,
                            const std::vector<Part>& parts, Fmt&& fmt) {
  if (connective == Connective::single) return fmt(parts.front());
  std::string op = connective == Connective::conj ? " ^" : " v";
  op += std::string(strategy->id) + " ";
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += op;
    out += fmt(parts[i]);
  }
  return out + ")";
}

}  // namespace

std::string format_formula(const HybridFormula& formula) {
  return format_compound(formula.connective, formula.strategy, formula.parts,
                         [](const Literal& l) { return format_literal(l); });
}

std::string format_atom(const GroundAtom& atom) {
  std::string out = atom.predicate;
  if (!atom.args.empty()) {
    out += "(";
    for (std::size_t i = 0; i < atom.args.size(); ++i) {
      if (i) out += ",";
      out += atom.args[i];
    }
    out += ")";
  }
  return out;
}

AtomId AtomTable::intern(const GroundAtom& atom) {
  auto [it, inserted] = index_.try_emplace(atom, static_cast<AtomId>(atoms_.size()));
  if (inserted) atoms_.push_back(atom);
  return it->second;
}

std::optional<AtomId> AtomTable::find(const GroundAtom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string format_ground_literal(const GroundLiteral& literal, const AtomTable& atoms) {
  return (literal.negated ? "-" : "") + format_atom(atoms[literal.atom]);
}

std::string format_ground_formula(const GroundFormula& formula, const AtomTable& atoms) {
  return format_compound(formula.connective, formula.strategy, formula.parts,
                         [&](const GroundLiteral& l) { return format_ground_literal(l, atoms); });
}

AnnotatedGroundFormula::AnnotatedGroundFormula(GroundFormula f, Annotation a)
    : formula(std::move(f)), annotation(std::move(a)) {
  if (annotation.is_ground()) constant = eval_annotation(annotation);
}

}  // namespace paso
