#include "paso/interpretation.hpp"

#include <algorithm>

namespace paso {

namespace {

auto key_less = [](const PInterpretation::Entry& e, const GroundLiteral& l) { return e.first < l; };

}  // namespace

PInterpretation::PInterpretation(std::vector<Entry> entries) {
  for (auto& [lit, value] : entries) assign(lit, std::move(value));
}

void PInterpretation::assign(GroundLiteral literal, ProbInterval value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), literal, key_less);
  if (it != entries_.end() && it->first == literal) {
    it->second = std::move(value);
  } else {
    entries_.insert(it, {literal, std::move(value)});
  }
}

void PInterpretation::erase(GroundLiteral literal) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), literal, key_less);
  if (it != entries_.end() && it->first == literal) entries_.erase(it);
}

const ProbInterval* PInterpretation::find(GroundLiteral literal) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), literal, key_less);
  if (it != entries_.end() && it->first == literal) return &it->second;
  return nullptr;
}

ProbInterval PInterpretation::read(GroundLiteral literal) const {
  const ProbInterval* v = find(literal);
  return v ? *v : ProbInterval::zero();
}

std::optional<ProbInterval> value_of(const PInterpretation& h, const GroundFormula& formula) {
  if (formula.connective == Connective::single) {
    const ProbInterval* v = h.find(formula.parts.front());
    if (!v) return std::nullopt;
    return *v;
  }
  bool any_defined = false;
  std::vector<ProbInterval> values;
  values.reserve(formula.parts.size());
  for (const auto& part : formula.parts) {
    const ProbInterval* v = h.find(part);
    any_defined = any_defined || v != nullptr;
    values.push_back(v ? *v : ProbInterval::zero());
  }
  if (!any_defined) return std::nullopt;
  return compose(*formula.strategy, values);
}

ProbInterval read_value(const PInterpretation& h, const GroundFormula& formula) {
  return value_of(h, formula).value_or(ProbInterval::zero());
}

bool pointwise_leq(const PInterpretation& a, const PInterpretation& b) {
  for (const auto& [lit, value] : a.entries()) {
    if (!truth_leq(value, b.read(lit))) return false;
  }
  return true;
}

PInterpretation normalized(const PInterpretation& h) {
  std::vector<PInterpretation::Entry> kept;
  for (const auto& e : h.entries()) {
    if (e.second != ProbInterval::zero()) kept.push_back(e);
  }
  return PInterpretation(std::move(kept));
}

bool interpretation_less(const PInterpretation& a, const PInterpretation& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].first != eb[i].first) {
      // The side holding the smaller key is defined where the other is not.
      return eb[i].first < ea[i].first;
    }
    if (ea[i].second != eb[i].second) return IntervalLexLess{}(ea[i].second, eb[i].second);
  }
  return ea.size() < eb.size();
}

std::string format_interpretation(const PInterpretation& h, const AtomTable& atoms) {
  std::string out = "{";
  bool first = true;
  for (const auto& [lit, value] : h.entries()) {
    if (!first) out += ", ";
    first = false;
    out += format_ground_literal(lit, atoms) + ":" + format_interval(value);
  }
  return out + "}";
}

}  // namespace paso
