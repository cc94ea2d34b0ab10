#include "paso/annotation.hpp"

#include "paso/error.hpp"

#include <array>
#include <utility>

namespace paso {
namespace {

constexpr std::array<std::pair<std::string_view, AnnotationFunction>, 6> kFunctions{{
    {"min", AnnotationFunction::min},
    {"max", AnnotationFunction::max},
    {"prod", AnnotationFunction::prod},
    {"bsum", AnnotationFunction::bsum},
    {"bdiff", AnnotationFunction::bdiff},
    {"avg", AnnotationFunction::avg},
}};

enum class Endpoint { lower, upper };

Rational apply_function(AnnotationFunction fn, const std::vector<Rational>& xs) {
  Rational acc = xs.front();
  switch (fn) {
    case AnnotationFunction::min:
      for (const auto& x : xs) acc = std::min(acc, x);
      return acc;
    case AnnotationFunction::max:
      for (const auto& x : xs) acc = std::max(acc, x);
      return acc;
    case AnnotationFunction::prod:
      for (std::size_t i = 1; i < xs.size(); ++i) acc *= xs[i];
      return acc;
    case AnnotationFunction::bsum:
      for (std::size_t i = 1; i < xs.size(); ++i) acc += xs[i];
      return acc > 1 ? Rational(1) : acc;
    case AnnotationFunction::bdiff:
      for (std::size_t i = 1; i < xs.size(); ++i) acc -= xs[i];
      return acc < 0 ? Rational(0) : acc;
    case AnnotationFunction::avg:
      for (std::size_t i = 1; i < xs.size(); ++i) acc += xs[i];
      return acc / static_cast<long>(xs.size());
  }
  return acc;
}

Rational eval_item(const AnnotationItem& item, const Bindings& bindings, Endpoint end) {
  switch (item.kind) {
    case AnnotationItem::Kind::constant:
      return item.value;
    case AnnotationItem::Kind::variable: {
      auto it = bindings.find(item.variable);
      if (it == bindings.end()) throw EvalError("unbound annotation variable " + item.variable);
      return end == Endpoint::lower ? it->second.lower() : it->second.upper();
    }
    case AnnotationItem::Kind::function: {
      if (item.args.empty()) throw EvalError("annotation function without arguments");
      std::vector<Rational> xs;
      xs.reserve(item.args.size());
      for (const auto& arg : item.args) xs.push_back(eval_item(arg, bindings, end));
      return apply_function(item.function, xs);
    }
  }
  return {};
}

AnnotationItem fold_item(const AnnotationItem& item) {
  if (item.kind != AnnotationItem::Kind::function) return item;
  if (item.is_ground()) return AnnotationItem::constant(eval_item(item, {}, Endpoint::lower));
  std::vector<AnnotationItem> args;
  for (const auto& arg : item.args) args.push_back(fold_item(arg));
  return AnnotationItem::apply(item.function, std::move(args));
}

}  // namespace

std::optional<AnnotationFunction> find_annotation_function(std::string_view name) {
  for (const auto& [n, fn] : kFunctions) {
    if (n == name) return fn;
  }
  return std::nullopt;
}

std::string_view function_name(AnnotationFunction fn) {
  for (const auto& [n, f] : kFunctions) {
    if (f == fn) return n;
  }
  return "?";
}

AnnotationItem AnnotationItem::constant(Rational value) {
  AnnotationItem item;
  item.kind = Kind::constant;
  item.value = std::move(value);
  return item;
}

AnnotationItem AnnotationItem::var(std::string name) {
  AnnotationItem item;
  item.kind = Kind::variable;
  item.variable = std::move(name);
  return item;
}

AnnotationItem AnnotationItem::apply(AnnotationFunction fn, std::vector<AnnotationItem> args) {
  AnnotationItem item;
  item.kind = Kind::function;
  item.function = fn;
  item.args = std::move(args);
  return item;
}

bool AnnotationItem::is_ground() const {
  switch (kind) {
    case Kind::constant:
      return true;
    case Kind::variable:
      return false;
    case Kind::function:
      for (const auto& a : args) {
        if (!a.is_ground()) return false;
      }
      return true;
  }
  return true;
}

void AnnotationItem::collect_variables(std::set<std::string>& out) const {
  if (kind == Kind::variable) out.insert(variable);
  for (const auto& a : args) a.collect_variables(out);
}

Annotation Annotation::of(const ProbInterval& interval) {
  return {AnnotationItem::constant(interval.lower()), AnnotationItem::constant(interval.upper())};
}

std::optional<std::string> Annotation::binder_variable() const {
  if (lower.kind == AnnotationItem::Kind::variable && lower == upper) return lower.variable;
  return std::nullopt;
}

void Annotation::collect_variables(std::set<std::string>& out) const {
  lower.collect_variables(out);
  upper.collect_variables(out);
}

ProbInterval eval_annotation(const Annotation& annotation, const Bindings& bindings) {
  return ProbInterval(eval_item(annotation.lower, bindings, Endpoint::lower),
                      eval_item(annotation.upper, bindings, Endpoint::upper));
}

Annotation fold_constants(const Annotation& annotation) {
  return {fold_item(annotation.lower), fold_item(annotation.upper)};
}

std::string format_annotation_item(const AnnotationItem& item) {
  switch (item.kind) {
    case AnnotationItem::Kind::constant:
      return format_rational(item.value);
    case AnnotationItem::Kind::variable:
      return item.variable;
    case AnnotationItem::Kind::function: {
      std::string out(function_name(item.function));
      out += "(";
      for (std::size_t i = 0; i < item.args.size(); ++i) {
        if (i) out += ",";
        out += format_annotation_item(item.args[i]);
      }
      return out + ")";
    }
  }
  return {};
}

std::string format_annotation(const Annotation& annotation) {
  if (annotation.is_point()) return format_annotation_item(annotation.lower);
  return "[" + format_annotation_item(annotation.lower) + "," +
         format_annotation_item(annotation.upper) + "]";
}

}  // namespace paso
