#include "paso/parser.hpp"

#include "paso/error.hpp"

#include <cctype>
#include <set>

namespace paso {
namespace {

enum class Tok {
  lower_ident,  // predicates, constants, function names, `not`, `vsid`
  variable,
  number,
  lparen,
  rparen,
  lbracket,
  rbracket,
  lbrace,
  rbrace,
  comma,
  dot,
  colon,
  if_,      // :-
  bar,      // |
  oror,     // ||
  andand,   // &&
  prefer,   // >>
  caret,    // ^
  minus,    // -
  assign,   // =
  eq,       // ==
  ne,       // !=
  hash_strategy,
  hash_domain,
  hash_prefer,
  end,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      int line = line_;
      int col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", line, col});
        return out;
      }
      char c = src_[pos_];
      auto push = [&](Tok k, std::size_t len) {
        out.push_back({k, std::string(src_.substr(pos_, len)), line, col});
        advance(len);
      };
      if (std::islower(static_cast<unsigned char>(c))) {
        push(Tok::lower_ident, ident_length());
      } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t len = ident_length();
        while (pos_ + len < src_.size() && src_[pos_ + len] == '\'') ++len;
        push(Tok::variable, len);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        push(Tok::number, number_length());
      } else if (c == '#') {
        std::size_t len = 1;
        while (pos_ + len < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_ + len])))
          ++len;
        auto word = src_.substr(pos_, len);
        if (word == "#strategy") {
          push(Tok::hash_strategy, len);
        } else if (word == "#domain") {
          push(Tok::hash_domain, len);
        } else if (word == "#prefer") {
          push(Tok::hash_prefer, len);
        } else {
          throw ParseError(line, col, "unknown directive '" + std::string(word) + "'");
        }
      } else if (starts_with(":-")) {
        push(Tok::if_, 2);
      } else if (starts_with("||")) {
        push(Tok::oror, 2);
      } else if (starts_with("&&")) {
        push(Tok::andand, 2);
      } else if (starts_with(">>")) {
        push(Tok::prefer, 2);
      } else if (starts_with("==")) {
        push(Tok::eq, 2);
      } else if (starts_with("!=")) {
        push(Tok::ne, 2);
      } else {
        switch (c) {
          case '(': push(Tok::lparen, 1); break;
          case ')': push(Tok::rparen, 1); break;
          case '[': push(Tok::lbracket, 1); break;
          case ']': push(Tok::rbracket, 1); break;
          case '{': push(Tok::lbrace, 1); break;
          case '}': push(Tok::rbrace, 1); break;
          case ',': push(Tok::comma, 1); break;
          case '.': push(Tok::dot, 1); break;
          case ':': push(Tok::colon, 1); break;
          case '|': push(Tok::bar, 1); break;
          case '^': push(Tok::caret, 1); break;
          case '-': push(Tok::minus, 1); break;
          case '=': push(Tok::assign, 1); break;
          default:
            throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
      }
    }
  }

 private:
  bool starts_with(std::string_view s) const { return src_.substr(pos_, s.size()) == s; }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        break;
      }
    }
  }

  std::size_t ident_length() const {
    std::size_t len = 1;
    while (pos_ + len < src_.size()) {
      char c = src_[pos_ + len];
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') break;
      ++len;
    }
    return len;
  }

  std::size_t number_length() const {
    auto digits_from = [&](std::size_t at) {
      std::size_t n = 0;
      while (at + n < src_.size() && std::isdigit(static_cast<unsigned char>(src_[at + n]))) ++n;
      return n;
    };
    std::size_t len = digits_from(pos_);
    if (pos_ + len + 1 < src_.size() && src_[pos_ + len] == '.') {
      std::size_t frac = digits_from(pos_ + len + 1);
      if (frac > 0) len += 1 + frac;
    } else if (pos_ + len + 1 < src_.size() && src_[pos_ + len] == '/') {
      std::size_t den = digits_from(pos_ + len + 1);
      if (den > 0) len += 1 + den;
    }
    return len;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_integer_text(const std::string& s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return !s.empty();
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program run() {
    Program program;
    while (peek().kind != Tok::end) statement(program);
    return program;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::lower_ident) && peek().text == w; }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }

  const Token& expect(Tok k, const char* what) {
    if (!at(k)) {
      fail(peek(), std::string("expected ") + what +
                       (at(Tok::end) ? " but reached end of input" : " near '" + peek().text + "'"));
    }
    return take();
  }

  static SourceLocation loc_of(const Token& t) { return {t.line, t.column}; }

  void statement(Program& program) {
    if (at(Tok::hash_strategy)) return strategy_directive(program);
    if (at(Tok::hash_domain)) return domain_directive(program);
    if (at(Tok::hash_prefer) || looks_like_preference()) {
      program.preferences.push_back(preference_rule());
    } else {
      program.generators.push_back(generator_rule());
    }
  }

  void strategy_directive(Program& program) {
    SourceLocation loc = loc_of(take());
    const Token& pred = expect(Tok::lower_ident, "predicate name");
    expect(Tok::assign, "'='");
    const Token& sid = expect(Tok::lower_ident, "strategy id");
    const PStrategy* s = find_strategy(sid.text, StrategyKind::disjunctive);
    if (!s) {
      if (find_strategy(sid.text, StrategyKind::conjunctive)) {
        fail(sid, "strategy '" + sid.text + "' is conjunctive; #strategy requires a disjunctive strategy");
      }
      fail(sid, "unknown strategy '" + sid.text + "'");
    }
    expect(Tok::dot, "'.'");
    program.strategies.push_back({pred.text, s, loc});
  }

  void domain_directive(Program& program) {
    SourceLocation loc = loc_of(take());
    const Token& var = expect(Tok::variable, "variable");
    expect(Tok::assign, "'='");
    expect(Tok::lbrace, "'{'");
    DomainDecl decl{var.text, {}, loc};
    for (;;) {
      decl.constants.push_back(constant_name());
      if (!at(Tok::comma)) break;
      take();
    }
    expect(Tok::rbrace, "'}'");
    expect(Tok::dot, "'.'");
    program.domains.push_back(std::move(decl));
  }

  std::string constant_name() {
    if (at(Tok::lower_ident)) return take().text;
    if (at(Tok::number) && is_integer_text(peek().text)) return take().text;
    fail(peek(), "expected constant near '" + peek().text + "'");
  }

  // A statement is a preference rule when its head uses a preference-only construct.
  bool looks_like_preference() const {
    int depth = 0;
    for (std::size_t i = pos_; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      switch (t.kind) {
        case Tok::lparen:
        case Tok::lbracket:
          ++depth;
          break;
        case Tok::rparen:
        case Tok::rbracket:
          --depth;
          break;
        case Tok::prefer:
        case Tok::oror:
        case Tok::andand:
          return true;
        case Tok::minus:
          return true;
        case Tok::lower_ident:
          if (t.text == "not") return true;
          break;
        case Tok::if_:
        case Tok::dot:
        case Tok::end:
          if (depth == 0) return false;
          break;
        default:
          break;
      }
    }
    return false;
  }

  // Terms and literals.

  Term term() {
    if (at(Tok::variable)) return Term::var(take().text);
    if (at(Tok::lower_ident)) return Term::constant(take().text);
    if (at(Tok::number) && is_integer_text(peek().text)) return Term::constant(take().text);
    fail(peek(), "expected term near '" + peek().text + "'");
  }

  Literal literal(bool allow_negation) {
    Literal lit;
    if (at(Tok::minus)) {
      const Token& m = take();
      if (!allow_negation) fail(m, "classical negation is only allowed in preference rules");
      lit.negated = true;
    }
    const Token& name = expect(Tok::lower_ident, "predicate name");
    if (name.text == "not") fail(name, "'not' cannot be used as a predicate name");
    lit.predicate = name.text;
    if (at(Tok::lparen)) {
      take();
      for (;;) {
        lit.terms.push_back(term());
        if (!at(Tok::comma)) break;
        take();
      }
      expect(Tok::rparen, "')'");
    }
    return lit;
  }

  bool at_literal_start() const {
    return at(Tok::minus) || (at(Tok::lower_ident) && peek().text != "not");
  }

  // Compound operator after a literal inside parentheses: `^sid` or `vsid`.
  struct CompoundOp {
    Connective connective;
    const PStrategy* strategy;
  };

  std::optional<CompoundOp> compound_op() {
    if (at(Tok::caret)) {
      take();
      const Token& sid = expect(Tok::lower_ident, "conjunctive strategy id");
      const PStrategy* s = find_strategy(sid.text, StrategyKind::conjunctive);
      if (!s) fail(sid, "unknown conjunctive strategy '" + sid.text + "'");
      return CompoundOp{Connective::conj, s};
    }
    if (at(Tok::lower_ident) && peek().text.size() > 1 && peek().text[0] == 'v') {
      const Token& t = take();
      const PStrategy* s = find_strategy(std::string_view(t.text).substr(1), StrategyKind::disjunctive);
      if (!s) fail(t, "unknown disjunctive strategy '" + t.text.substr(1) + "'");
      return CompoundOp{Connective::disj, s};
    }
    return std::nullopt;
  }

  // True when the parenthesis at the cursor opens a compound hybrid formula.
  bool at_compound_formula() {
    if (!at(Tok::lparen)) return false;
    std::size_t saved = pos_;
    bool result = false;
    take();
    if (at_literal_start()) {
      try {
        literal(true);
        result = at(Tok::caret) ||
                 (at(Tok::lower_ident) && peek().text.size() > 1 && peek().text[0] == 'v');
      } catch (const ParseError&) {
        result = false;
      }
    }
    pos_ = saved;
    return result;
  }

  HybridFormula formula(bool allow_negation) {
    if (!at(Tok::lparen)) return HybridFormula::single(literal(allow_negation));
    const Token& open = take();
    HybridFormula f;
    f.parts.push_back(literal(allow_negation));
    auto first = compound_op();
    if (!first) fail(peek(), "expected '^sid' or 'vsid' in compound formula");
    f.connective = first->connective;
    f.strategy = first->strategy;
    for (;;) {
      f.parts.push_back(literal(allow_negation));
      if (at(Tok::rparen)) break;
      const Token& op_tok = peek();
      auto op = compound_op();
      if (!op) fail(peek(), "expected ')' or compound operator");
      if (op->connective != f.connective || op->strategy != f.strategy) {
        fail(op_tok, "a compound formula must use a single connective and strategy");
      }
    }
    expect(Tok::rparen, "')'");
    std::set<std::string> seen;
    for (const auto& p : f.parts) {
      if (!seen.insert(format_literal(p)).second) {
        fail(open, "compound formula repeats literal " + format_literal(p));
      }
    }
    return f;
  }

  // Annotations.

  AnnotationItem annotation_item() {
    if (at(Tok::number)) {
      const Token& t = take();
      auto value = parse_rational(t.text);
      if (!value) fail(t, "malformed number '" + t.text + "'");
      if (*value > 1) fail(t, "annotation constant " + t.text + " is outside [0,1]");
      return AnnotationItem::constant(*value);
    }
    if (at(Tok::variable)) return AnnotationItem::var(take().text);
    if (at(Tok::lower_ident) && peek(1).kind == Tok::lparen) {
      const Token& name = take();
      auto fn = find_annotation_function(name.text);
      if (!fn) fail(name, "unknown annotation function '" + name.text + "'");
      take();
      std::vector<AnnotationItem> args;
      for (;;) {
        args.push_back(annotation_item());
        if (!at(Tok::comma)) break;
        take();
      }
      expect(Tok::rparen, "')'");
      return AnnotationItem::apply(*fn, std::move(args));
    }
    fail(peek(), "expected annotation near '" + peek().text + "'");
  }

  Annotation annotation() {
    const Token& start = peek();
    Annotation a;
    if (at(Tok::lbracket)) {
      take();
      a.lower = annotation_item();
      expect(Tok::comma, "','");
      a.upper = annotation_item();
      expect(Tok::rbracket, "']'");
    } else {
      a = Annotation::point(annotation_item());
    }
    if (a.is_ground()) {
      try {
        eval_annotation(a);
      } catch (const EvalError& e) {
        fail(start, e.what());
      }
    }
    return a;
  }

  Annotation optional_annotation() {
    if (!at(Tok::colon)) return Annotation::one();
    take();
    return annotation();
  }

  AnnotatedFormula annotated_formula(bool allow_negation) {
    HybridFormula f = formula(allow_negation);
    return {std::move(f), optional_annotation()};
  }

  // Bodies.

  template <class Rule>
  void body(Rule& rule, bool allow_negation) {
    if (!at(Tok::if_)) return;
    take();
    if (at(Tok::dot)) return;
    for (;;) {
      body_item(rule, allow_negation);
      if (!at(Tok::comma)) break;
      take();
    }
  }

  template <class Rule>
  void body_item(Rule& rule, bool allow_negation) {
    if (at_word("not")) {
      take();
      rule.naf.push_back(annotated_formula(allow_negation));
      return;
    }
    Tok next = peek(1).kind;
    if (at(Tok::variable) || at(Tok::number) ||
        (at(Tok::lower_ident) && (next == Tok::eq || next == Tok::ne))) {
      Comparison c;
      c.lhs = term();
      if (at(Tok::eq)) {
        c.op = Comparison::Op::eq;
      } else if (at(Tok::ne)) {
        c.op = Comparison::Op::ne;
      } else {
        fail(peek(), "expected '==' or '!='");
      }
      take();
      c.rhs = term();
      rule.comparisons.push_back(std::move(c));
      return;
    }
    rule.positive.push_back(annotated_formula(allow_negation));
  }

  GeneratorRule generator_rule() {
    GeneratorRule rule;
    rule.loc = loc_of(peek());
    for (;;) {
      if (at(Tok::lparen)) fail(peek(), "rule heads must be atoms");
      Literal atom = literal(false);
      rule.head.push_back({std::move(atom), optional_annotation()});
      if (!at(Tok::bar)) break;
      take();
    }
    body(rule, false);
    expect(Tok::dot, "'.'");
    return rule;
  }

  // Combinations.

  BooleanCombination combination() {
    BooleanCombination lhs = conjunction();
    while (at(Tok::oror)) {
      take();
      lhs = BooleanCombination::make_node(BooleanCombination::Kind::disj, std::move(lhs), conjunction());
    }
    return lhs;
  }

  BooleanCombination conjunction() {
    BooleanCombination lhs = combination_atom();
    while (at(Tok::andand)) {
      take();
      lhs = BooleanCombination::make_node(BooleanCombination::Kind::conj, std::move(lhs),
                                          combination_atom());
    }
    return lhs;
  }

  BooleanCombination combination_atom() {
    if (at_word("not")) {
      const Token& n = take();
      if (at(Tok::lparen) && !at_compound_formula()) {
        fail(n, "negation as failure applies only to annotated hybrid literals, not to combinations");
      }
      return BooleanCombination::make_leaf(annotated_formula(true), true);
    }
    if (at(Tok::lparen) && !at_compound_formula()) {
      take();
      BooleanCombination inner = combination();
      expect(Tok::rparen, "')'");
      return inner;
    }
    return BooleanCombination::make_leaf(annotated_formula(true), false);
  }

  PreferenceRule preference_rule() {
    PreferenceRule rule;
    if (at(Tok::hash_prefer)) take();
    rule.loc = loc_of(peek());
    for (;;) {
      rule.head.push_back(combination());
      if (!at(Tok::prefer)) break;
      take();
    }
    body(rule, true);
    expect(Tok::dot, "'.'");
    return rule;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Formatting.

std::string format_annotated(const AnnotatedFormula& f) {
  std::string out = format_formula(f.formula);
  if (f.annotation != Annotation::one()) out += ":" + format_annotation(f.annotation);
  return out;
}

template <class Rule>
std::string format_body(const Rule& rule) {
  std::vector<std::string> items;
  for (const auto& f : rule.positive) items.push_back(format_annotated(f));
  for (const auto& f : rule.naf) items.push_back("not " + format_annotated(f));
  for (const auto& c : rule.comparisons) {
    items.push_back(format_term(c.lhs) + (c.op == Comparison::Op::eq ? " == " : " != ") +
                    format_term(c.rhs));
  }
  if (items.empty()) return "";
  std::string out = " :- ";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

BooleanCombination BooleanCombination::make_leaf(AnnotatedFormula f, bool naf) {
  BooleanCombination c;
  c.kind = Kind::leaf;
  c.leaf = std::move(f);
  c.naf = naf;
  return c;
}

BooleanCombination BooleanCombination::make_node(Kind kind, BooleanCombination lhs,
                                                 BooleanCombination rhs) {
  BooleanCombination c;
  c.kind = kind;
  c.children.push_back(std::move(lhs));
  c.children.push_back(std::move(rhs));
  return c;
}

Program parse_program(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

std::string format_combination(const BooleanCombination& c) {
  if (c.kind == BooleanCombination::Kind::leaf) {
    return (c.naf ? "not " : "") + format_annotated(c.leaf);
  }
  auto child = [&](const BooleanCombination& sub, bool left) {
    std::string s = format_combination(sub);
    bool bare = sub.kind == BooleanCombination::Kind::leaf || (left && sub.kind == c.kind);
    return bare ? s : "(" + s + ")";
  };
  const char* op = c.kind == BooleanCombination::Kind::conj ? " && " : " || ";
  return child(c.children[0], true) + op + child(c.children[1], false);
}

std::string format_generator_rule(const GeneratorRule& rule) {
  std::string out;
  for (std::size_t i = 0; i < rule.head.size(); ++i) {
    if (i) out += " | ";
    out += format_literal(rule.head[i].atom);
    if (rule.head[i].annotation != Annotation::one()) {
      out += ":" + format_annotation(rule.head[i].annotation);
    }
  }
  return out + format_body(rule) + ".";
}

std::string format_preference_rule(const PreferenceRule& rule) {
  std::string out = rule.head.size() == 1 ? "#prefer " : "";
  for (std::size_t i = 0; i < rule.head.size(); ++i) {
    if (i) out += " >> ";
    out += format_combination(rule.head[i]);
  }
  return out + format_body(rule) + ".";
}

std::string format_program(const Program& program) {
  std::string out;
  for (const auto& s : program.strategies) {
    out += "#strategy " + s.predicate + " = " + std::string(s.strategy->id) + ".\n";
  }
  for (const auto& d : program.domains) {
    out += "#domain " + d.variable + " = {";
    for (std::size_t i = 0; i < d.constants.size(); ++i) {
      if (i) out += ", ";
      out += d.constants[i];
    }
    out += "}.\n";
  }
  for (const auto& r : program.generators) out += format_generator_rule(r) + "\n";
  for (const auto& r : program.preferences) out += format_preference_rule(r) + "\n";
  return out;
}

}  // namespace paso
