#include "paso/prefs.hpp"

#include "paso/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace paso {
namespace {

std::optional<ProbInterval> leaf_annotation(const AnnotatedGroundFormula& leaf, const Bindings& b) {
  if (leaf.constant) return leaf.constant;
  try {
    return eval_annotation(leaf.annotation, b);
  } catch (const EvalError&) {
    return std::nullopt;
  }
}

struct Side {
  const PInterpretation& h;
  const Bindings& b;
};

bool strictly(const Side& x, const Side& y, const GroundCombination& c);
bool equally(const Side& x, const Side& y, const GroundCombination& c);

bool weakly(const Side& x, const Side& y, const GroundCombination& c) {
  return strictly(x, y, c) || equally(x, y, c);
}

bool strictly(const Side& x, const Side& y, const GroundCombination& c) {
  bool sx = eval_combination(x.h, c, x.b);
  bool sy = eval_combination(y.h, c, y.b);
  if (sx && !sy) return true;
  if (!sx || !sy) return false;
  switch (c.kind) {
    case BooleanCombination::Kind::leaf: {
      auto vx = value_of(x.h, c.leaf.formula);
      auto vy = value_of(y.h, c.leaf.formula);
      if (!c.naf) return vx && vy && truth_lt(*vy, *vx);
      if (!vx && vy) return true;
      return vx && vy && truth_lt(*vx, *vy);
    }
    case BooleanCombination::Kind::conj:
    case BooleanCombination::Kind::disj: {
      const auto& l = c.children.at(0);
      const auto& r = c.children.at(1);
      return (strictly(x, y, l) && weakly(x, y, r)) || (strictly(x, y, r) && weakly(x, y, l));
    }
  }
  return false;
}

bool equally(const Side& x, const Side& y, const GroundCombination& c) {
  bool sx = eval_combination(x.h, c, x.b);
  bool sy = eval_combination(y.h, c, y.b);
  if (!sx && !sy) return true;
  if (!sx || !sy) return false;
  switch (c.kind) {
    case BooleanCombination::Kind::leaf: {
      auto vx = value_of(x.h, c.leaf.formula);
      auto vy = value_of(y.h, c.leaf.formula);
      return vx == vy;
    }
    case BooleanCombination::Kind::conj:
      return equally(x, y, c.children.at(0)) && equally(x, y, c.children.at(1));
    case BooleanCombination::Kind::disj: {
      int forward = 0;
      int backward = 0;
      for (const auto& child : c.children) {
        forward += weakly(x, y, child) ? 1 : 0;
        backward += weakly(y, x, child) ? 1 : 0;
      }
      return forward == backward;
    }
  }
  return false;
}

Ordering3 classify(bool first, bool second, bool equal) {
  if (int(first) + int(second) + int(equal) > 1) {
    throw std::logic_error("preference comparison is both strict and equal");
  }
  if (first) return Ordering3::strict_first;
  if (second) return Ordering3::strict_second;
  if (equal) return Ordering3::equal;
  return Ordering3::incomparable;
}

struct RuleView {
  std::optional<Bindings> bindings;
  SatisfactionIndex index;
};

RuleView view_rule(const PInterpretation& h, const GroundPreferenceRule& rule) {
  RuleView v{preference_body(h, rule), SatisfactionIndex::irrelevant()};
  if (!v.bindings) return v;
  for (std::size_t i = 0; i < rule.head.size(); ++i) {
    if (eval_combination(h, rule.head[i], *v.bindings)) {
      v.index = SatisfactionIndex::at(i + 1);
      break;
    }
  }
  return v;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Ordering3 flip(Ordering3 o) {
  switch (o) {
    case Ordering3::strict_first: return Ordering3::strict_second;
    case Ordering3::strict_second: return Ordering3::strict_first;
    default: return o;
  }
}

std::string_view ordering_name(Ordering3 o) {
  switch (o) {
    case Ordering3::strict_first: return "strict_first";
    case Ordering3::strict_second: return "strict_second";
    case Ordering3::equal: return "equal";
    case Ordering3::incomparable: return "incomparable";
  }
  return "?";
}

std::string format_index(const SatisfactionIndex& index) {
  return index.index ? std::to_string(*index.index) : std::string("irr");
}

bool eval_leaf(const PInterpretation& h, const AnnotatedGroundFormula& leaf, bool naf, const Bindings& bindings) {
  auto mu = leaf_annotation(leaf, bindings);
  if (!mu) return false;
  auto value = value_of(h, leaf.formula);
  if (naf) return !value || !truth_leq(*mu, *value);
  return value && truth_leq(*mu, *value);
}

bool eval_combination(const PInterpretation& h, const GroundCombination& c, const Bindings& bindings) {
  switch (c.kind) {
    case BooleanCombination::Kind::leaf:
      return eval_leaf(h, c.leaf, c.naf, bindings);
    case BooleanCombination::Kind::conj:
      return std::all_of(c.children.begin(), c.children.end(),
                         [&](const auto& child) { return eval_combination(h, child, bindings); });
    case BooleanCombination::Kind::disj:
      return std::any_of(c.children.begin(), c.children.end(),
                         [&](const auto& child) { return eval_combination(h, child, bindings); });
  }
  return false;
}

std::optional<Bindings> preference_body(const PInterpretation& h, const GroundPreferenceRule& rule) {
  Bindings b;
  for (const auto& item : rule.positive) {
    auto var = item.binder();
    if (!var) continue;
    auto value = value_of(h, item.formula);
    if (!value) return std::nullopt;
    auto [it, inserted] = b.emplace(*var, *value);
    if (!inserted && it->second != *value) return std::nullopt;
  }
  for (const auto& item : rule.positive) {
    if (!item.binder() && !eval_leaf(h, item, false, b)) return std::nullopt;
  }
  for (const auto& item : rule.naf) {
    if (!eval_leaf(h, item, true, b)) return std::nullopt;
  }
  return b;
}

SatisfactionIndex pref_rule_index(const PInterpretation& h, const GroundPreferenceRule& rule) {
  return view_rule(h, rule).index;
}

Ordering3 compare_combination(const PInterpretation& h1, const PInterpretation& h2, const GroundCombination& c,
                              const Bindings& b1, const Bindings& b2) {
  Side x{h1, b1};
  Side y{h2, b2};
  return classify(strictly(x, y, c), strictly(y, x, c), equally(x, y, c));
}

Ordering3 compare_rule(const PInterpretation& h1, const PInterpretation& h2, const GroundPreferenceRule& rule) {
  RuleView v1 = view_rule(h1, rule);
  RuleView v2 = view_rule(h2, rule);
  if (v1.index.is_irrelevant() && v2.index.is_irrelevant()) return Ordering3::equal;
  if (v2.index.is_irrelevant()) return Ordering3::strict_first;
  if (v1.index.is_irrelevant()) return Ordering3::strict_second;
  std::size_t i = *v1.index.index;
  std::size_t j = *v2.index.index;
  if (i < j) return Ordering3::strict_first;
  if (j < i) return Ordering3::strict_second;
  return compare_combination(h1, h2, rule.head[i - 1], *v1.bindings, *v2.bindings);
}

Ordering3 pareto_compare(const PInterpretation& h1, const PInterpretation& h2,
                         std::span<const GroundPreferenceRule> rules) {
  bool all_equal = true;
  bool first_weak = true;
  bool second_weak = true;
  bool first_strict = false;
  bool second_strict = false;
  for (const auto& r : rules) {
    Ordering3 o = compare_rule(h1, h2, r);
    all_equal = all_equal && o == Ordering3::equal;
    first_weak = first_weak && at_least(o);
    second_weak = second_weak && at_least(flip(o));
    first_strict = first_strict || o == Ordering3::strict_first;
    second_strict = second_strict || o == Ordering3::strict_second;
  }
  return classify(first_strict && first_weak, second_strict && second_weak, all_equal);
}

Ordering3 maximal_compare(const PInterpretation& h1, const PInterpretation& h2,
                          std::span<const GroundPreferenceRule> rules) {
  std::size_t forward = 0;
  std::size_t backward = 0;
  for (const auto& r : rules) {
    Ordering3 o = compare_rule(h1, h2, r);
    forward += at_least(o) ? 1 : 0;
    backward += at_least(flip(o)) ? 1 : 0;
  }
  if (forward > backward) return Ordering3::strict_first;
  if (forward < backward) return Ordering3::strict_second;
  return Ordering3::equal;
}

std::string_view rank_mode_name(RankMode mode) { return mode == RankMode::pareto ? "pareto" : "maximal"; }

std::optional<RankMode> parse_rank_mode(std::string_view name) {
  if (name == "pareto") return RankMode::pareto;
  if (name == "maximal") return RankMode::maximal;
  return std::nullopt;
}

std::string_view issue_kind_name(PairIssue::Kind kind) {
  switch (kind) {
    case PairIssue::Kind::incomparable: return "incomparable";
    case PairIssue::Kind::cyclic: return "cyclic";
    case PairIssue::Kind::inconsistent: return "inconsistent";
  }
  return "?";
}

RankingResult rank(std::span<const PInterpretation> sets, std::span<const GroundPreferenceRule> rules, RankMode mode,
                   unsigned workers) {
  const std::size_t n = sets.size();
  RankingResult result;
  result.mode = mode;
  result.relation.assign(n, std::vector<Ordering3>(n, Ordering3::equal));
  auto compare = [&](std::size_t i, std::size_t j) {
    return mode == RankMode::pareto ? pareto_compare(sets[i], sets[j], rules)
                                    : maximal_compare(sets[i], sets[j], rules);
  };
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) result.relation[i][j] = compare(i, j);
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fill_row(i);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) fill_row(i);
      });
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) result.relation[j][i] = flip(result.relation[i][j]);
  }
  const auto& rel = result.relation;

  DisjointSets classes_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rel[i][j] == Ordering3::equal) classes_of.unite(i, j);
    }
  }
  std::vector<std::size_t> class_id(n);
  std::vector<std::vector<std::size_t>> classes;
  {
    std::vector<std::size_t> root_to_class(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t root = classes_of.find(i);
      if (root_to_class[root] == n) {
        root_to_class[root] = classes.size();
        classes.emplace_back();
      }
      class_id[i] = root_to_class[root];
      classes[class_id[i]].push_back(i);
    }
  }

  auto add_issue = [&](std::size_t a, std::size_t b, PairIssue::Kind kind) {
    result.issues.push_back({std::min(a, b), std::max(a, b), kind});
  };

  const std::size_t k = classes.size();
  std::vector<std::vector<bool>> beats(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i : classes[a]) {
      for (std::size_t j : classes[a]) {
        if (i < j && rel[i][j] != Ordering3::equal) add_issue(i, j, PairIssue::Kind::inconsistent);
      }
    }
    for (std::size_t b = a + 1; b < k; ++b) {
      bool any_incomparable = false;
      bool any_first = false;
      bool any_second = false;
      for (std::size_t i : classes[a]) {
        for (std::size_t j : classes[b]) {
          any_incomparable = any_incomparable || rel[i][j] == Ordering3::incomparable;
          any_first = any_first || rel[i][j] == Ordering3::strict_first;
          any_second = any_second || rel[i][j] == Ordering3::strict_second;
        }
      }
      for (std::size_t i : classes[a]) {
        for (std::size_t j : classes[b]) {
          if (rel[i][j] == Ordering3::incomparable) {
            add_issue(i, j, PairIssue::Kind::incomparable);
          } else if (any_first && any_second) {
            add_issue(i, j, PairIssue::Kind::inconsistent);
          }
        }
      }
      if (!any_incomparable && !(any_first && any_second)) {
        if (any_first) beats[a][b] = true;
        if (any_second) beats[b][a] = true;
      }
    }
  }

  // Transitive closure of the class-level strict relation; classes reaching each
  // other lie on a cycle.
  std::vector<std::vector<bool>> reach = beats;
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t a = 0; a < k; ++a) {
      if (!reach[a][m]) continue;
      for (std::size_t b = 0; b < k; ++b) {
        if (reach[m][b]) reach[a][b] = true;
      }
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (!(reach[a][b] && reach[b][a])) continue;
      for (std::size_t i : classes[a]) {
        for (std::size_t j : classes[b]) {
          if (rel[i][j] == Ordering3::strict_first || rel[i][j] == Ordering3::strict_second) {
            add_issue(i, j, PairIssue::Kind::cyclic);
          }
        }
      }
    }
  }

  std::sort(result.issues.begin(), result.issues.end(), [](const PairIssue& x, const PairIssue& y) {
    return std::tie(x.first, x.second, x.kind) < std::tie(y.first, y.second, y.kind);
  });
  result.issues.erase(std::unique(result.issues.begin(), result.issues.end()), result.issues.end());

  if (result.issues.empty()) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> wins(k, 0);
    for (std::size_t a = 0; a < k; ++a) wins[a] = static_cast<std::size_t>(std::count(beats[a].begin(), beats[a].end(), true));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return wins[a] > wins[b]; });
    std::vector<std::vector<std::size_t>> strata;
    for (std::size_t a : order) strata.push_back(classes[a]);
    result.strata = std::move(strata);
  }

  for (std::size_t j = 0; j < n; ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < n && !dominated; ++i) dominated = rel[i][j] == Ordering3::strict_first;
    if (!dominated) result.undominated.push_back(j);
  }
  return result;
}

}  // namespace paso
