#include "paso/solver.hpp"

#include "paso/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <thread>

namespace paso {
namespace {

std::optional<ProbInterval> annotation_value(const AnnotatedGroundFormula& item, const Bindings& b) {
  if (item.constant) return item.constant;
  try {
    return eval_annotation(item.annotation, b);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

void collect_compounds(const std::vector<AnnotatedGroundFormula>& items,
                       std::vector<const GroundFormula*>& out) {
  for (const auto& item : items) {
    if (item.formula.connective != Connective::single) out.push_back(&item.formula);
  }
}

// Rules whose positive body no lattice candidate can satisfy. Such rules hold
// vacuously and never contribute support, so search may skip them.
bool never_fires(const GroundRule& rule, const CandidateLattice& lattice) {
  for (const auto& item : rule.positive) {
    bool may_be_defined = false;
    for (const auto& part : item.formula.parts) {
      if (!part.negated && lattice.cell(part.atom)) may_be_defined = true;
    }
    if (may_be_defined) continue;
    if (item.binder()) return true;
    if (item.constant && *item.constant != ProbInterval::zero()) return true;
  }
  return false;
}

bool is_answer_set(const PInterpretation& h, const GroundProgram& g, std::span<const GroundRule> live,
                   const CandidateLattice& lattice) {
  if (!is_p_model(h, live, g)) return false;

  std::vector<GroundRule> reduct_rules;
  {
    Reduct full{{}, &g};
    for (const auto& r : live) {
      auto b = bind_annotation_variables(h, r.positive);
      if (!b) continue;
      bool keep = true;
      for (const auto& item : r.naf) {
        auto mu = annotation_value(item, *b);
        if (!mu || truth_leq(*mu, read_value(h, item.formula))) {
          keep = false;
          break;
        }
      }
      if (keep) reduct_rules.push_back(GroundRule{r.head, r.positive, {}});
    }
  }
  if (!is_p_model(h, reduct_rules, g)) return false;

  // Minimality: search the sub-lattice below h.
  std::vector<std::vector<std::optional<ProbInterval>>> options;
  options.reserve(lattice.atoms.size());
  for (std::size_t i = 0; i < lattice.atoms.size(); ++i) {
    std::vector<std::optional<ProbInterval>> opts{std::nullopt};
    const ProbInterval* current = h.find({lattice.atoms[i], false});
    if (current) {
      for (const auto& v : lattice.cells[i]) {
        if (truth_leq(v, *current)) opts.push_back(v);
      }
    }
    options.push_back(std::move(opts));
  }
  std::vector<std::size_t> digit(options.size(), 0);
  for (;;) {
    PInterpretation lower;
    for (std::size_t i = 0; i < options.size(); ++i) {
      if (options[i][digit[i]]) lower.assign({lattice.atoms[i], false}, *options[i][digit[i]]);
    }
    if (lower != h && is_p_model(lower, reduct_rules, g)) return false;
    std::size_t pos = options.size();
    while (pos > 0) {
      --pos;
      if (++digit[pos] < options[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return true;
    }
    if (options.empty()) return true;
  }
}

}  // namespace

std::optional<Bindings> bind_annotation_variables(const PInterpretation& h,
                                                  std::span<const AnnotatedGroundFormula> positive) {
  Bindings b;
  for (const auto& item : positive) {
    auto var = item.binder();
    if (!var) continue;
    auto value = value_of(h, item.formula);
    if (!value) return std::nullopt;
    auto [it, inserted] = b.emplace(*var, *value);
    if (!inserted && it->second != *value) return std::nullopt;
  }
  return b;
}

Reduct compute_reduct(const GroundProgram& program, const PInterpretation& h) {
  Reduct reduct{{}, &program};
  for (const auto& r : program.rules) {
    auto b = bind_annotation_variables(h, r.positive);
    bool keep = true;
    for (const auto& item : r.naf) {
      std::optional<ProbInterval> mu;
      if (b) mu = annotation_value(item, *b);
      if (!mu || truth_leq(*mu, read_value(h, item.formula))) {
        keep = false;
        break;
      }
    }
    if (keep) reduct.rules.push_back(GroundRule{r.head, r.positive, {}});
  }
  return reduct;
}

bool body_satisfied(const PInterpretation& h, const GroundRule& rule) {
  auto b = bind_annotation_variables(h, rule.positive);
  if (!b) return false;
  for (const auto& item : rule.positive) {
    if (item.binder()) continue;
    auto mu = annotation_value(item, *b);
    if (!mu || !truth_leq(*mu, read_value(h, item.formula))) return false;
  }
  for (const auto& item : rule.naf) {
    auto mu = annotation_value(item, *b);
    if (!mu || truth_leq(*mu, read_value(h, item.formula))) return false;
  }
  return true;
}

bool satisfies_rule(const PInterpretation& h, const GroundRule& rule) {
  if (!body_satisfied(h, rule)) return true;
  for (const auto& head : rule.head) {
    if (truth_leq(head.annotation, h.read({head.atom, false}))) return true;
  }
  return false;
}

bool is_p_model(const PInterpretation& h, std::span<const GroundRule> rules, const GroundProgram& program) {
  std::map<AtomId, std::vector<ProbInterval>> support;
  for (const auto& rule : rules) {
    if (!body_satisfied(h, rule)) continue;
    bool head_ok = false;
    for (const auto& head : rule.head) {
      if (truth_leq(head.annotation, h.read({head.atom, false}))) {
        head_ok = true;
        support[head.atom].push_back(head.annotation);
      }
    }
    if (!head_ok) return false;
  }
  for (const auto& [atom, values] : support) {
    if (!truth_leq(compose(program.strategy_for(atom), values), h.read({atom, false}))) return false;
  }
  return true;
}

bool is_p_model(const PInterpretation& h, const GroundProgram& program) {
  return is_p_model(h, program.rules, program) && compounds_consistent(h, program);
}

bool is_p_model(const PInterpretation& h, const Reduct& reduct) {
  return is_p_model(h, reduct.rules, *reduct.program) && compounds_consistent(h, *reduct.program);
}

bool compounds_consistent(const PInterpretation& h, const GroundProgram& program) {
  std::vector<const GroundFormula*> compounds;
  for (const auto& r : program.rules) {
    collect_compounds(r.positive, compounds);
    collect_compounds(r.naf, compounds);
  }
  for (const auto* f : compounds) {
    std::vector<ProbInterval> parts;
    for (const auto& p : f->parts) parts.push_back(h.read(p));
    if (!truth_leq(compose(*f->strategy, parts), read_value(h, *f))) return false;
  }
  return true;
}

std::uint64_t CandidateLattice::size() const {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t n = 1;
  for (const auto& c : cells) {
    std::uint64_t radix = c.size() + 1;
    if (n > kMax / radix) return kMax;
    n *= radix;
  }
  return n;
}

const std::vector<ProbInterval>* CandidateLattice::cell(AtomId atom) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), atom);
  if (it == atoms.end() || *it != atom) return nullptr;
  return &cells[static_cast<std::size_t>(it - atoms.begin())];
}

CandidateLattice build_lattice(const GroundProgram& program) {
  std::map<AtomId, std::vector<ProbInterval>> occurrences;
  for (const auto& r : program.rules) {
    for (const auto& h : r.head) occurrences[h.atom].push_back(h.annotation);
  }
  CandidateLattice lattice;
  for (const auto& [atom, occ] : occurrences) {
    const PStrategy& tau = program.strategy_for(atom);
    std::set<ProbInterval, IntervalLexLess> closure;
    for (const auto& mu : occ) {
      std::vector<ProbInterval> fresh{mu};
      for (const auto& v : closure) fresh.push_back(tau.compose2(v, mu));
      closure.insert(fresh.begin(), fresh.end());
    }
    closure.erase(ProbInterval::zero());
    if (closure.empty()) continue;
    lattice.atoms.push_back(atom);
    lattice.cells.emplace_back(closure.begin(), closure.end());
  }
  return lattice;
}

CandidateStream::CandidateStream(const CandidateLattice& lattice, std::uint64_t max_candidates)
    : lattice_(lattice), count_(lattice.size()) {
  if (count_ > max_candidates) {
    throw ResourceError("candidate space of " +
                        (count_ == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                             : std::to_string(count_)) +
                        " exceeds the cap of " + std::to_string(max_candidates));
  }
}

PInterpretation CandidateStream::at(std::uint64_t index) const {
  std::vector<PInterpretation::Entry> entries;
  for (std::size_t i = lattice_.atoms.size(); i-- > 0;) {
    const auto& cell = lattice_.cells[i];
    std::uint64_t radix = cell.size() + 1;
    std::uint64_t d = index % radix;
    index /= radix;
    if (d > 0) entries.push_back({{lattice_.atoms[i], false}, cell[d - 1]});
  }
  std::reverse(entries.begin(), entries.end());
  return PInterpretation(std::move(entries));
}

bool CandidateStream::next(PInterpretation& out) {
  if (cursor_ >= count_) return false;
  out = at(cursor_++);
  return true;
}

std::vector<PInterpretation> enumerate_candidates(const GroundProgram& program, std::uint64_t max_candidates) {
  CandidateLattice lattice = build_lattice(program);
  CandidateStream stream(lattice, max_candidates);
  std::vector<PInterpretation> out;
  out.reserve(stream.count());
  PInterpretation h;
  while (stream.next(h)) out.push_back(h);
  return out;
}

std::vector<PInterpretation> answer_sets(const GroundProgram& program, const SolveOptions& options) {
  CandidateLattice lattice = build_lattice(program);
  CandidateStream stream(lattice, options.max_candidates);

  std::vector<GroundRule> live;
  for (const auto& r : program.rules) {
    if (!never_fires(r, lattice)) live.push_back(r);
  }

  unsigned workers = std::max(1u, options.workers);
  std::uint64_t total = stream.count();
  std::vector<std::vector<std::pair<std::uint64_t, PInterpretation>>> found(workers);
  auto work = [&](unsigned w) {
    for (std::uint64_t i = w; i < total; i += workers) {
      PInterpretation h = stream.at(i);
      if (is_answer_set(h, program, live, lattice)) found[w].emplace_back(i, std::move(h));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  std::vector<std::pair<std::uint64_t, PInterpretation>> merged;
  for (auto& part : found) {
    for (auto& entry : part) merged.push_back(std::move(entry));
  }
  std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<PInterpretation> out;
  out.reserve(merged.size());
  for (auto& [index, h] : merged) out.push_back(std::move(h));
  return out;
}

}  // namespace paso
