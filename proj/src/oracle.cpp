#include "paso/oracle.hpp"

#include "paso/error.hpp"
#include "paso/parser.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace paso::oracle {
namespace {

// ---- probabilistic reference ------------------------------------------------

std::optional<ProbInterval> formula_value(const PInterpretation& h, const GroundFormula& f) {
  if (f.connective == Connective::single) {
    const ProbInterval* v = h.find(f.parts.front());
    return v ? std::optional<ProbInterval>(*v) : std::nullopt;
  }
  bool any = false;
  std::vector<ProbInterval> parts;
  for (const auto& p : f.parts) {
    const ProbInterval* v = h.find(p);
    any = any || v != nullptr;
    parts.push_back(v ? *v : ProbInterval());
  }
  if (!any) return std::nullopt;
  ProbInterval acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = f.strategy->compose2(acc, parts[i]);
  return acc;
}

ProbInterval formula_reading(const PInterpretation& h, const GroundFormula& f) {
  return formula_value(h, f).value_or(ProbInterval());
}

bool leq(const ProbInterval& a, const ProbInterval& b) { return a.lower() <= b.lower() && a.upper() <= b.upper(); }

std::optional<Bindings> binders(const PInterpretation& h, const GroundRule& r) {
  Bindings b;
  for (const auto& item : r.positive) {
    const auto& lo = item.annotation.lower;
    const auto& up = item.annotation.upper;
    if (!(lo.kind == AnnotationItem::Kind::variable && up == lo)) continue;
    auto v = formula_value(h, item.formula);
    if (!v) return std::nullopt;
    auto it = b.find(lo.variable);
    if (it == b.end()) {
      b.emplace(lo.variable, *v);
    } else if (!(it->second == *v)) {
      return std::nullopt;
    }
  }
  return b;
}

std::optional<ProbInterval> annotation_of(const AnnotatedGroundFormula& item, const Bindings& b) {
  try {
    return eval_annotation(item.annotation, b);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

bool body_holds(const PInterpretation& h, const GroundRule& r) {
  auto b = binders(h, r);
  if (!b) return false;
  for (const auto& item : r.positive) {
    auto mu = annotation_of(item, *b);
    if (!mu || !leq(*mu, formula_reading(h, item.formula))) return false;
  }
  for (const auto& item : r.naf) {
    auto mu = annotation_of(item, *b);
    if (!mu || leq(*mu, formula_reading(h, item.formula))) return false;
  }
  return true;
}

ProbInterval atom_reading(const PInterpretation& h, AtomId a) {
  const ProbInterval* v = h.find(GroundLiteral{a, false});
  return v ? *v : ProbInterval();
}

bool models(const PInterpretation& h, const std::vector<GroundRule>& rules, const GroundProgram& g) {
  std::map<AtomId, std::vector<ProbInterval>> support;
  for (const auto& r : rules) {
    if (!body_holds(h, r)) continue;
    bool satisfied = false;
    for (const auto& head : r.head) {
      if (leq(head.annotation, atom_reading(h, head.atom))) {
        satisfied = true;
        support[head.atom].push_back(head.annotation);
      }
    }
    if (!satisfied) return false;
  }
  for (const auto& [atom, values] : support) {
    const PStrategy* tau = g.tau.at(atom);
    ProbInterval acc = values.front();
    for (std::size_t i = 1; i < values.size(); ++i) acc = tau->compose2(acc, values[i]);
    if (!leq(acc, atom_reading(h, atom))) return false;
  }
  return true;
}

std::vector<GroundRule> reduct_of(const GroundProgram& g, const PInterpretation& h) {
  std::vector<GroundRule> out;
  for (const auto& r : g.rules) {
    auto b = binders(h, r);
    if (!b) continue;
    bool keep = true;
    for (const auto& item : r.naf) {
      auto mu = annotation_of(item, *b);
      if (!mu || leq(*mu, formula_reading(h, item.formula))) keep = false;
    }
    if (keep) out.push_back(GroundRule{r.head, r.positive, {}});
  }
  return out;
}

// Compositions of every non-empty sub-multiset of the head annotations.
std::vector<ProbInterval> head_values(const PStrategy& tau, const std::vector<ProbInterval>& occurrences) {
  std::vector<std::pair<ProbInterval, std::size_t>> distinct;
  for (const auto& v : occurrences) {
    auto it = std::find_if(distinct.begin(), distinct.end(), [&](const auto& e) { return e.first == v; });
    if (it == distinct.end()) {
      distinct.emplace_back(v, 1);
    } else {
      ++it->second;
    }
  }
  std::vector<ProbInterval> out;
  auto walk = [&](auto&& self, std::size_t i, std::optional<ProbInterval> acc) -> void {
    if (i == distinct.size()) {
      if (acc) out.push_back(*acc);
      return;
    }
    self(self, i + 1, acc);
    std::optional<ProbInterval> cur = acc;
    for (std::size_t c = 1; c <= distinct[i].second; ++c) {
      ProbInterval next = cur ? tau.compose2(*cur, distinct[i].first) : distinct[i].first;
      bool fixed = cur && *cur == next;
      cur = next;
      self(self, i + 1, cur);
      if (fixed) break;  // further copies change nothing
    }
  };
  walk(walk, 0, std::nullopt);
  std::vector<ProbInterval> unique;
  for (const auto& v : out) {
    if (v == ProbInterval()) continue;
    if (std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
  }
  return unique;
}

// ---- classical reference ---------------------------------------------------

bool literal_in(const AtomSet& s, const std::string& literal) { return s.count(literal) > 0; }

bool classical_holds(const AtomSet& s, const ClassicalCombination& c) {
  switch (c.kind) {
    case ClassicalCombination::Kind::literal:
      return c.naf ? !literal_in(s, c.literal) : literal_in(s, c.literal);
    case ClassicalCombination::Kind::conj:
      for (const auto& child : c.children) {
        if (!classical_holds(s, child)) return false;
      }
      return true;
    case ClassicalCombination::Kind::disj:
      for (const auto& child : c.children) {
        if (classical_holds(s, child)) return true;
      }
      return false;
  }
  return false;
}

constexpr std::size_t kLowestRank = std::numeric_limits<std::size_t>::max();

std::size_t degree(const AtomSet& s, const ClassicalPreference& p) {
  for (const auto& a : p.positive) {
    if (!literal_in(s, a)) return kLowestRank;
  }
  for (const auto& a : p.naf) {
    if (literal_in(s, a)) return kLowestRank;
  }
  for (std::size_t i = 0; i < p.head.size(); ++i) {
    if (classical_holds(s, p.head[i])) return i + 1;
  }
  return kLowestRank;
}

std::string classical_literal(const HybridFormula& f, const Annotation& a, const char* where) {
  if (f.connective != Connective::single) {
    throw SemanticError(std::string("compound formula in ") + where + " has no classical image");
  }
  if (!f.parts.front().is_ground()) throw SemanticError(std::string("variable in ") + where);
  if (!a.is_ground() || eval_annotation(a) != ProbInterval::one()) {
    throw SemanticError(std::string("annotation other than [1,1] in ") + where);
  }
  return format_literal(f.parts.front());
}

ClassicalCombination classical_combination(const BooleanCombination& c) {
  ClassicalCombination out;
  switch (c.kind) {
    case BooleanCombination::Kind::leaf:
      out.kind = ClassicalCombination::Kind::literal;
      out.literal = classical_literal(c.leaf.formula, c.leaf.annotation, "preference head");
      out.naf = c.naf;
      break;
    case BooleanCombination::Kind::conj:
    case BooleanCombination::Kind::disj:
      out.kind = c.kind == BooleanCombination::Kind::conj ? ClassicalCombination::Kind::conj
                                                          : ClassicalCombination::Kind::disj;
      for (const auto& child : c.children) out.children.push_back(classical_combination(child));
      break;
  }
  return out;
}

bool comparisons_hold(const std::vector<Comparison>& cs) {
  for (const auto& c : cs) {
    if (c.lhs.is_variable() || c.rhs.is_variable()) throw SemanticError("variable in comparison");
    bool same = c.lhs.name == c.rhs.name;
    if (same != (c.op == Comparison::Op::eq)) return false;
  }
  return true;
}

// ---- generator ---------------------------------------------------------------

class Gen {
 public:
  Gen(std::uint64_t seed, const GenParams& p) : rng_(seed), p_(p) {}

  std::string run() {
    std::ostringstream out;
    if (!p_.classical && pick(3) == 0) {
      static const char* kDisj[] = {"igd", "pcd", "ind", "me"};
      out << "#strategy " << atom(pick(atoms())) << " = " << kDisj[pick(4)] << ".\n";
    }
    for (unsigned i = 0; i < p_.rules; ++i) out << rule() << "\n";
    for (unsigned i = 0; i < p_.preferences; ++i) out << preference() << "\n";
    return out.str();
  }

 private:
  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }
  unsigned atoms() const { return std::clamp(p_.atoms, 1u, 26u); }
  static std::string atom(std::uint64_t i) { return std::string(1, static_cast<char>('a' + i)); }

  std::string value() {
    static const char* kValues[] = {"0.2", "0.3", "0.5", "0.7", "1"};
    return kValues[pick(5)];
  }
  std::string annotated(const std::string& formula) {
    return p_.classical ? formula : formula + ":" + value();
  }

  std::string formula() {
    if (!p_.classical && atoms() >= 2 && pick(6) == 0) {
      static const char* kConj[] = {"igc", "pcc", "ind", "ncc"};
      static const char* kDisj[] = {"igd", "pcd", "ind", "me"};
      std::uint64_t x = pick(atoms());
      std::uint64_t y = (x + 1 + pick(atoms() - 1)) % atoms();
      bool conj = pick(2) == 0;
      return "(" + atom(x) + (conj ? " ^" : " v") + (conj ? kConj[pick(4)] : kDisj[pick(4)]) + " " + atom(y) + ")";
    }
    return atom(pick(atoms()));
  }

  std::string rule() {
    std::vector<std::uint64_t> head;
    std::uint64_t width = 1 + pick(std::min<unsigned>(2, atoms()));
    while (head.size() < width) {
      std::uint64_t a = pick(atoms());
      if (std::find(head.begin(), head.end(), a) == head.end()) head.push_back(a);
    }
    std::string text;
    for (std::size_t i = 0; i < head.size(); ++i) text += (i ? " | " : "") + annotated(atom(head[i]));
    std::vector<std::string> body;
    std::uint64_t positives = pick(3);
    std::uint64_t nafs = pick(2);
    bool binder = !p_.classical && pick(8) == 0;
    for (std::uint64_t i = 0; i < positives; ++i) body.push_back(annotated(formula()));
    if (binder) body.push_back(atom(pick(atoms())) + ":V");
    for (std::uint64_t i = 0; i < nafs; ++i) {
      body.push_back("not " + (binder && i == 0 ? atom(pick(atoms())) + ":V" : annotated(formula())));
    }
    if (!body.empty()) {
      text += " :- ";
      for (std::size_t i = 0; i < body.size(); ++i) text += (i ? ", " : "") + body[i];
    }
    return text + ".";
  }

  std::string leaf() {
    std::string lit = (pick(10) == 0 ? "-" : "") + atom(pick(atoms()));
    return (pick(4) == 0 ? "not " : "") + annotated(lit);
  }

  std::string combination() {
    if (pick(2) == 0) return leaf();
    return leaf() + (pick(2) == 0 ? " && " : " || ") + leaf();
  }

  std::string preference() {
    std::uint64_t k = 1 + pick(3);
    std::string text = "#prefer ";
    for (std::uint64_t i = 0; i < k; ++i) text += (i ? " >> " : "") + combination();
    if (pick(4) == 0) text += " :- " + std::string(pick(2) == 0 ? "not " : "") + annotated(atom(pick(atoms())));
    return text + ".";
  }

  std::mt19937_64 rng_;
  GenParams p_;
};

}  // namespace

std::vector<PInterpretation> brute_answer_sets(const GroundProgram& g) {
  std::map<AtomId, std::vector<ProbInterval>> occurrences;
  for (const auto& r : g.rules) {
    for (const auto& head : r.head) occurrences[head.atom].push_back(head.annotation);
  }
  std::vector<AtomId> atoms;
  std::vector<std::vector<ProbInterval>> values;
  std::uint64_t total = 1;
  for (const auto& [atom, occ] : occurrences) {
    auto vals = head_values(*g.tau.at(atom), occ);
    if (vals.empty()) continue;
    atoms.push_back(atom);
    total *= vals.size() + 1;
    if (total > kMaxBruteCandidates) {
      throw ResourceError("instance too large for the brute-force oracle");
    }
    values.push_back(std::move(vals));
  }

  std::vector<PInterpretation> candidates;
  std::vector<std::size_t> choice(atoms.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    PInterpretation h;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (choice[i] > 0) h.assign(GroundLiteral{atoms[i], false}, values[i][choice[i] - 1]);
    }
    candidates.push_back(std::move(h));
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (++choice[i] <= values[i].size()) break;
      choice[i] = 0;
    }
  }

  auto below = [&](const PInterpretation& lo, const PInterpretation& hi) {
    for (AtomId a : atoms) {
      if (!leq(atom_reading(lo, a), atom_reading(hi, a))) return false;
    }
    return true;
  };

  std::vector<PInterpretation> out;
  for (const auto& h : candidates) {
    if (!models(h, g.rules, g)) continue;
    auto reduct = reduct_of(g, h);
    if (!models(h, reduct, g)) continue;
    bool minimal = true;
    for (const auto& other : candidates) {
      if (other == h || !below(other, h)) continue;
      if (models(other, reduct, g)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(h);
  }
  std::sort(out.begin(), out.end(), interpretation_less);
  return out;
}

ClassicalProgram to_classical(const Program& program) {
  if (!program.domains.empty()) throw SemanticError("#domain has no classical image");
  ClassicalProgram out;
  for (const auto& r : program.generators) {
    if (!comparisons_hold(r.comparisons)) continue;
    ClassicalRule c;
    for (const auto& h : r.head) {
      c.head.push_back(classical_literal(HybridFormula::single(h.atom), h.annotation, "rule head"));
    }
    for (const auto& f : r.positive) c.positive.push_back(classical_literal(f.formula, f.annotation, "rule body"));
    for (const auto& f : r.naf) c.naf.push_back(classical_literal(f.formula, f.annotation, "rule body"));
    out.rules.push_back(std::move(c));
  }
  for (const auto& r : program.preferences) {
    if (!comparisons_hold(r.comparisons)) continue;
    ClassicalPreference c;
    for (const auto& comb : r.head) c.head.push_back(classical_combination(comb));
    for (const auto& f : r.positive) {
      c.positive.push_back(classical_literal(f.formula, f.annotation, "preference body"));
    }
    for (const auto& f : r.naf) c.naf.push_back(classical_literal(f.formula, f.annotation, "preference body"));
    out.preferences.push_back(std::move(c));
  }
  return out;
}

std::vector<AtomSet> classical_answer_sets(const ClassicalProgram& program) {
  std::vector<std::string> heads;
  for (const auto& r : program.rules) {
    for (const auto& a : r.head) {
      if (std::find(heads.begin(), heads.end(), a) == heads.end()) heads.push_back(a);
    }
  }
  if (heads.size() > 20) throw ResourceError("instance too large for the classical oracle");
  const std::uint32_t n = static_cast<std::uint32_t>(heads.size());

  auto to_set = [&](std::uint32_t mask) {
    AtomSet s;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.insert(heads[i]);
    }
    return s;
  };
  auto is_model = [](const AtomSet& s, const std::vector<const ClassicalRule*>& rules) {
    for (const auto* r : rules) {
      bool body = std::all_of(r->positive.begin(), r->positive.end(), [&](const auto& a) { return s.count(a) > 0; });
      if (!body) continue;
      bool head = std::any_of(r->head.begin(), r->head.end(), [&](const auto& a) { return s.count(a) > 0; });
      if (!head) return false;
    }
    return true;
  };

  std::vector<AtomSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    AtomSet x = to_set(mask);
    std::vector<const ClassicalRule*> reduct;
    for (const auto& r : program.rules) {
      if (std::none_of(r.naf.begin(), r.naf.end(), [&](const auto& a) { return x.count(a) > 0; })) {
        reduct.push_back(&r);
      }
    }
    if (!is_model(x, reduct)) continue;
    bool minimal = true;
    for (std::uint32_t sub = (mask - 1) & mask; minimal && sub != mask; sub = (sub - 1) & mask) {
      if (is_model(to_set(sub), reduct)) minimal = false;
      if (sub == 0) break;
    }
    if (minimal) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassicalRanking classical_rank(const ClassicalProgram& program) {
  ClassicalRanking result;
  result.sets = classical_answer_sets(program);
  const std::size_t n = result.sets.size();
  std::vector<std::vector<std::size_t>> degrees(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& p : program.preferences) degrees[i].push_back(degree(result.sets[i], p));
  }
  result.relation.assign(n, std::vector<Ordering3>(n, Ordering3::equal));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool better = false;
      bool worse = false;
      for (std::size_t r = 0; r < program.preferences.size(); ++r) {
        better = better || degrees[i][r] < degrees[j][r];
        worse = worse || degrees[i][r] > degrees[j][r];
      }
      if (better && !worse) {
        result.relation[i][j] = Ordering3::strict_first;
      } else if (worse && !better) {
        result.relation[i][j] = Ordering3::strict_second;
      } else if (better && worse) {
        result.relation[i][j] = Ordering3::incomparable;
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < n; ++i) dominated = dominated || result.relation[i][j] == Ordering3::strict_first;
    if (!dominated) result.undominated.push_back(j);
  }
  return result;
}

std::string gen_random_text(std::uint64_t seed, const GenParams& params) { return Gen(seed, params).run(); }

Program gen_random(std::uint64_t seed, const GenParams& params) {
  return parse_program(gen_random_text(seed, params));
}

}  // namespace paso::oracle
