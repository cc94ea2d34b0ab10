#include "paso/grounder.hpp"

#include "paso/error.hpp"
#include "paso/parser.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace paso {
namespace {

using Substitution = std::map<std::string, std::string, std::less<>>;

// Variable collection.

void add_vars(const Literal& lit, std::set<std::string>& out) {
  for (const auto& t : lit.terms) {
    if (t.is_variable()) out.insert(t.name);
  }
}

void add_vars(const HybridFormula& f, std::set<std::string>& out) {
  for (const auto& p : f.parts) add_vars(p, out);
}

void add_vars(const BooleanCombination& c, std::set<std::string>& out) {
  if (c.kind == BooleanCombination::Kind::leaf) {
    add_vars(c.leaf.formula, out);
    return;
  }
  for (const auto& ch : c.children) add_vars(ch, out);
}

void add_annotation_vars(const BooleanCombination& c, std::set<std::string>& out) {
  if (c.kind == BooleanCombination::Kind::leaf) {
    c.leaf.annotation.collect_variables(out);
    return;
  }
  for (const auto& ch : c.children) add_annotation_vars(ch, out);
}

template <class Rule>
std::set<std::string> body_object_vars(const Rule& rule) {
  std::set<std::string> vars;
  for (const auto& f : rule.positive) add_vars(f.formula, vars);
  for (const auto& f : rule.naf) add_vars(f.formula, vars);
  for (const auto& c : rule.comparisons) {
    if (c.lhs.is_variable()) vars.insert(c.lhs.name);
    if (c.rhs.is_variable()) vars.insert(c.rhs.name);
  }
  return vars;
}

std::set<std::string> rule_vars(const GeneratorRule& rule) {
  auto vars = body_object_vars(rule);
  for (const auto& h : rule.head) add_vars(h.atom, vars);
  return vars;
}

std::set<std::string> rule_vars(const PreferenceRule& rule) {
  auto vars = body_object_vars(rule);
  for (const auto& c : rule.head) add_vars(c, vars);
  return vars;
}

template <class Rule>
std::set<std::string> bound_vars(const Rule& rule, const std::set<std::string>& domain_vars) {
  std::set<std::string> bound = domain_vars;
  for (const auto& f : rule.positive) add_vars(f.formula, bound);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& c : rule.comparisons) {
      if (c.op != Comparison::Op::eq) continue;
      auto is_bound = [&](const Term& t) { return !t.is_variable() || bound.count(t.name); };
      if (is_bound(c.lhs) && c.rhs.is_variable() && bound.insert(c.rhs.name).second) changed = true;
      if (is_bound(c.rhs) && c.lhs.is_variable() && bound.insert(c.lhs.name).second) changed = true;
    }
  }
  return bound;
}

template <class Rule>
void check_annotation_vars(const Rule& rule, std::set<std::string> used, const char* what,
                           std::vector<Diagnostic>& out) {
  std::set<std::string> binders;
  for (const auto& f : rule.positive) {
    if (auto v = f.annotation.binder_variable()) binders.insert(*v);
  }
  for (const auto& f : rule.positive) f.annotation.collect_variables(used);
  for (const auto& f : rule.naf) f.annotation.collect_variables(used);
  for (const auto& v : used) {
    if (!binders.count(v)) {
      out.push_back({rule.loc, std::string("annotation variable ") + v + " in " + what +
                                   " is not bound by a positive body formula"});
    }
  }
}

// Instantiation.

Term substitute(const Term& t, const Substitution& s) {
  if (!t.is_variable()) return t;
  return Term::constant(s.at(t.name));
}

GroundAtom ground_atom(const Literal& lit, const Substitution& s) {
  GroundAtom atom{lit.predicate, {}};
  for (const auto& t : lit.terms) atom.args.push_back(substitute(t, s).name);
  return atom;
}

bool comparison_holds(const Comparison& c, const Substitution& s) {
  bool same = substitute(c.lhs, s).name == substitute(c.rhs, s).name;
  return c.op == Comparison::Op::eq ? same : !same;
}

class Instantiator {
 public:
  Instantiator(const Program& program, const GroundOptions& options) : options_(options) {
    std::set<std::string> universe;
    auto add_lit = [&](const Literal& l) {
      for (const auto& t : l.terms) {
        if (!t.is_variable()) universe.insert(t.name);
      }
    };
    auto add_formula = [&](const HybridFormula& f) {
      for (const auto& p : f.parts) add_lit(p);
    };
    std::function<void(const BooleanCombination&)> add_comb = [&](const BooleanCombination& c) {
      if (c.kind == BooleanCombination::Kind::leaf) {
        add_formula(c.leaf.formula);
      } else {
        for (const auto& ch : c.children) add_comb(ch);
      }
    };
    auto add_body = [&](const auto& rule) {
      for (const auto& f : rule.positive) add_formula(f.formula);
      for (const auto& f : rule.naf) add_formula(f.formula);
      for (const auto& c : rule.comparisons) {
        if (!c.lhs.is_variable()) universe.insert(c.lhs.name);
        if (!c.rhs.is_variable()) universe.insert(c.rhs.name);
      }
    };
    for (const auto& r : program.generators) {
      for (const auto& h : r.head) add_lit(h.atom);
      add_body(r);
    }
    for (const auto& r : program.preferences) {
      for (const auto& c : r.head) add_comb(c);
      add_body(r);
    }
    for (const auto& d : program.domains) {
      if (!domains_.emplace(d.variable, d.constants).second) {
        throw SemanticError("line " + std::to_string(d.loc.line) + ": variable " + d.variable +
                            " has more than one #domain declaration");
      }
      universe.insert(d.constants.begin(), d.constants.end());
    }
    for (auto& [var, values] : domains_) {
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
    }
    universe_.assign(universe.begin(), universe.end());
  }

  template <class Rule>
  std::vector<Substitution> substitutions(const Rule& rule, const std::set<std::string>& vars_set) {
    std::vector<std::string> vars(vars_set.begin(), vars_set.end());
    std::vector<Substitution> out;
    if (!vars.empty() && universe_.empty()) {
      throw SemanticError("line " + std::to_string(rule.loc.line) +
                          ": rule has variables but the Herbrand universe is empty");
    }
    Substitution current;
    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
      for (const auto& c : rule.comparisons) {
        bool ready = (!c.lhs.is_variable() || current.count(c.lhs.name)) &&
                     (!c.rhs.is_variable() || current.count(c.rhs.name));
        if (ready && !comparison_holds(c, current)) return;
      }
      if (depth == vars.size()) {
        if (++instances_ > options_.max_instances) {
          throw ResourceError("grounding exceeds " + std::to_string(options_.max_instances) +
                              " rule instances");
        }
        out.push_back(current);
        return;
      }
      const std::string& var = vars[depth];
      auto dom = domains_.find(var);
      const auto& values = dom != domains_.end() ? dom->second : universe_;
      for (const auto& v : values) {
        current[var] = v;
        extend(depth + 1);
      }
      current.erase(var);
    };
    extend(0);
    return out;
  }

 private:
  const GroundOptions& options_;
  std::map<std::string, std::vector<std::string>> domains_;
  std::vector<std::string> universe_;
  std::uint64_t instances_ = 0;
};

GroundFormula ground_formula(const HybridFormula& f, const Substitution& s, AtomTable& atoms) {
  GroundFormula g{f.connective, f.strategy, {}};
  for (const auto& p : f.parts) g.parts.push_back({atoms.intern(ground_atom(p, s)), p.negated});
  return g;
}

AnnotatedGroundFormula ground_annotated(const AnnotatedFormula& f, const Substitution& s,
                                        AtomTable& atoms) {
  return {ground_formula(f.formula, s, atoms), fold_constants(f.annotation)};
}

GroundCombination ground_combination(const BooleanCombination& c, const Substitution& s,
                                     AtomTable& atoms) {
  GroundCombination g;
  g.kind = c.kind;
  g.naf = c.naf;
  if (c.kind == BooleanCombination::Kind::leaf) {
    g.leaf = ground_annotated(c.leaf, s, atoms);
  } else {
    for (const auto& ch : c.children) g.children.push_back(ground_combination(ch, s, atoms));
  }
  return g;
}

template <class Rule, class GRule>
void ground_body(const Rule& rule, const Substitution& s, AtomTable& atoms, GRule& out) {
  for (const auto& f : rule.positive) out.positive.push_back(ground_annotated(f, s, atoms));
  for (const auto& f : rule.naf) out.naf.push_back(ground_annotated(f, s, atoms));
}

std::string format_annotated_ground(const AnnotatedGroundFormula& f, const AtomTable& atoms) {
  std::string out = format_ground_formula(f.formula, atoms);
  if (f.annotation != Annotation::one()) out += ":" + format_annotation(f.annotation);
  return out;
}

template <class GRule>
std::string format_ground_body(const GRule& rule, const AtomTable& atoms) {
  std::vector<std::string> items;
  for (const auto& f : rule.positive) items.push_back(format_annotated_ground(f, atoms));
  for (const auto& f : rule.naf) items.push_back("not " + format_annotated_ground(f, atoms));
  if (items.empty()) return "";
  std::string out = " :- ";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

std::string format_diagnostic(const Diagnostic& d) {
  return std::to_string(d.loc.line) + ":" + std::to_string(d.loc.column) + ": " + d.message;
}

std::vector<Diagnostic> check_safety(const Program& program) {
  std::vector<Diagnostic> out;
  std::set<std::string> domain_vars;
  for (const auto& d : program.domains) domain_vars.insert(d.variable);

  for (const auto& rule : program.generators) {
    auto bound = bound_vars(rule, domain_vars);
    for (const auto& v : rule_vars(rule)) {
      if (!bound.count(v)) {
        out.push_back({rule.loc, "unsafe variable " + v +
                                     " (not bound by a positive body literal or #domain)"});
      }
    }
    for (const auto& h : rule.head) {
      if (!h.annotation.is_ground()) {
        out.push_back({rule.loc, "annotation variables are not supported in rule heads"});
        break;
      }
    }
    check_annotation_vars(rule, {}, "generator rule", out);
  }

  for (const auto& rule : program.preferences) {
    auto bound = bound_vars(rule, domain_vars);
    for (const auto& v : rule_vars(rule)) {
      if (!bound.count(v)) {
        out.push_back({rule.loc, "unsafe variable " + v +
                                     " (not bound by a positive body literal or #domain)"});
      }
    }
    std::set<std::string> head_vars;
    for (const auto& c : rule.head) add_annotation_vars(c, head_vars);
    check_annotation_vars(rule, head_vars, "preference rule", out);
  }
  return out;
}

GroundProgram ground(const Program& program, const GroundOptions& options) {
  auto diagnostics = check_safety(program);
  if (!diagnostics.empty()) {
    std::string message = "unsafe program";
    for (const auto& d : diagnostics) message += "\n  " + format_diagnostic(d);
    throw SemanticError(message);
  }

  GroundProgram g;
  for (const auto& d : program.strategies) {
    auto [it, inserted] = g.strategy_directives.emplace(d.predicate, d.strategy);
    if (!inserted && it->second != d.strategy) {
      throw SemanticError("line " + std::to_string(d.loc.line) + ": conflicting #strategy for " +
                          d.predicate);
    }
  }

  Instantiator inst(program, options);
  std::vector<std::vector<Substitution>> gen_subs;
  std::vector<std::vector<Substitution>> pref_subs;
  for (const auto& r : program.generators) gen_subs.push_back(inst.substitutions(r, rule_vars(r)));
  for (const auto& r : program.preferences) pref_subs.push_back(inst.substitutions(r, rule_vars(r)));

  // Head atoms first so the atom table (and answer-set order) follows the source.
  for (std::size_t i = 0; i < program.generators.size(); ++i) {
    for (const auto& s : gen_subs[i]) {
      for (const auto& h : program.generators[i].head) g.atoms.intern(ground_atom(h.atom, s));
    }
  }

  for (std::size_t i = 0; i < program.generators.size(); ++i) {
    const auto& rule = program.generators[i];
    for (const auto& s : gen_subs[i]) {
      GroundRule gr;
      for (const auto& h : rule.head) {
        Annotation a = fold_constants(h.annotation);
        if (!a.is_ground()) throw SemanticError("annotation variables are not supported in rule heads");
        gr.head.push_back({g.atoms.intern(ground_atom(h.atom, s)), eval_annotation(a)});
      }
      ground_body(rule, s, g.atoms, gr);
      g.rules.push_back(std::move(gr));
    }
  }

  for (std::size_t i = 0; i < program.preferences.size(); ++i) {
    const auto& rule = program.preferences[i];
    for (const auto& s : pref_subs[i]) {
      GroundPreferenceRule gp;
      for (const auto& c : rule.head) gp.head.push_back(ground_combination(c, s, g.atoms));
      ground_body(rule, s, g.atoms, gp);
      g.preferences.push_back(std::move(gp));
    }
  }

  g.tau.resize(g.atoms.size(), &default_disjunctive_strategy());
  for (AtomId id = 0; id < g.atoms.size(); ++id) {
    auto it = g.strategy_directives.find(g.atoms[id].predicate);
    if (it != g.strategy_directives.end()) g.tau[id] = it->second;
  }
  return g;
}

std::string format_ground_combination(const GroundCombination& c, const AtomTable& atoms) {
  if (c.kind == BooleanCombination::Kind::leaf) {
    return (c.naf ? "not " : "") + format_annotated_ground(c.leaf, atoms);
  }
  auto child = [&](const GroundCombination& sub, bool left) {
    std::string s = format_ground_combination(sub, atoms);
    bool bare = sub.kind == BooleanCombination::Kind::leaf || (left && sub.kind == c.kind);
    return bare ? s : "(" + s + ")";
  };
  const char* op = c.kind == BooleanCombination::Kind::conj ? " && " : " || ";
  return child(c.children[0], true) + op + child(c.children[1], false);
}

std::string format_ground(const GroundProgram& g) {
  std::string out;
  for (const auto& [pred, s] : g.strategy_directives) {
    out += "#strategy " + pred + " = " + std::string(s->id) + ".\n";
  }
  for (const auto& r : g.rules) {
    for (std::size_t i = 0; i < r.head.size(); ++i) {
      if (i) out += " | ";
      out += format_atom(g.atoms[r.head[i].atom]);
      if (r.head[i].annotation != ProbInterval::one()) out += ":" + format_interval(r.head[i].annotation);
    }
    out += format_ground_body(r, g.atoms) + ".\n";
  }
  for (const auto& r : g.preferences) {
    std::string line = r.head.size() == 1 ? "#prefer " : "";
    for (std::size_t i = 0; i < r.head.size(); ++i) {
      if (i) line += " >> ";
      line += format_ground_combination(r.head[i], g.atoms);
    }
    out += line + format_ground_body(r, g.atoms) + ".\n";
  }
  return out;
}

}  // namespace paso
