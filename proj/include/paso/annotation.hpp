#pragma once

#include "paso/interval.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace paso {

enum class AnnotationFunction { min, max, prod, bsum, bdiff, avg };

std::optional<AnnotationFunction> find_annotation_function(std::string_view name);
std::string_view function_name(AnnotationFunction fn);

/// A constant in [0,1], an annotation variable, or a built-in function applied to items.
struct AnnotationItem {
  enum class Kind { constant, variable, function };

  Kind kind = Kind::constant;
  Rational value{0};
  std::string variable;
  AnnotationFunction function = AnnotationFunction::min;
  std::vector<AnnotationItem> args;

  static AnnotationItem constant(Rational value);
  static AnnotationItem var(std::string name);
  static AnnotationItem apply(AnnotationFunction fn, std::vector<AnnotationItem> args);

  bool is_ground() const;
  void collect_variables(std::set<std::string>& out) const;

  friend bool operator==(const AnnotationItem&, const AnnotationItem&) = default;
};

/// Annotation variables bind to intervals. A variable in the lower position reads the
/// bound lower endpoint; in the upper position it reads the upper endpoint.
using Bindings = std::map<std::string, ProbInterval, std::less<>>;

struct Annotation {
  AnnotationItem lower;
  AnnotationItem upper;

  static Annotation point(const AnnotationItem& item) { return {item, item}; }
  static Annotation of(const ProbInterval& interval);
  /// The implicit annotation of unannotated formulas.
  static Annotation one() { return of(ProbInterval::one()); }

  bool is_ground() const { return lower.is_ground() && upper.is_ground(); }
  bool is_point() const { return lower == upper; }

  /// The variable name if this annotation is a bare variable (`:V`), the binding form.
  std::optional<std::string> binder_variable() const;

  void collect_variables(std::set<std::string>& out) const;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

/// Evaluates to an interval. Throws EvalError on unbound variables or when the
/// endpoints do not form an element of C[0,1].
ProbInterval eval_annotation(const Annotation& annotation, const Bindings& bindings = {});

/// Replaces every variable-free function application by its value.
Annotation fold_constants(const Annotation& annotation);

std::string format_annotation_item(const AnnotationItem& item);
std::string format_annotation(const Annotation& annotation);

}  // namespace paso
