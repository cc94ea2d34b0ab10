#include "doctest.h"
#include "test_util.hpp"

#include "paso/error.hpp"
#include "paso/grounder.hpp"

#include <algorithm>

using namespace paso;
using namespace paso::test;

TEST_SUITE("grounder") {
  TEST_CASE("nurse corpus grounds to the four shift facts plus constraint instances") {
    GroundProgram g = ground_fixture("nurse_example2.paso");
    std::size_t facts = 0;
    std::size_t head_atoms = 0;
    for (const auto& r : g.rules) {
      if (r.positive.empty() && r.naf.empty()) {
        ++facts;
        head_atoms += r.head.size();
      }
    }
    CHECK(facts == 4);
    CHECK(head_atoms == 8);
    // A, A', S, D range over 9 constants; instances with A == A' are dropped.
    CHECK(g.rules.size() == 4 + (9 * 9 * 9 * 9 - 9 * 9 * 9));
    CHECK(g.preferences.size() == 4);
    for (AtomId a = 0; a < g.atoms.size(); ++a) CHECK(&g.strategy_for(a) == &default_disjunctive_strategy());
  }

  TEST_CASE("head atoms are interned first in source order") {
    GroundProgram g = ground_fixture("nurse_example2.paso");
    CHECK(format_atom(g.atoms[0]) == "service(lily,day,sat)");
    CHECK(format_atom(g.atoms[7]) == "service(jeen,day,sat)");
    CHECK(format_atom(g.atoms[8]) == "inconsistent");
  }

  TEST_CASE("safety of the nurse constraint") {
    Program p = parse_program(read_fixture("nurse_example2.paso"));
    CHECK(check_safety(p).empty());
  }

  TEST_CASE("unsafe object variable") {
    auto d = check_safety(parse_program("p(X) :- not q(X)."));
    REQUIRE(d.size() == 1);
    CHECK(d[0].message.find("X") != std::string::npos);
    CHECK(d[0].loc.line == 1);
    CHECK_THROWS_AS(ground(parse_program("p(X) :- not q(X).")), SemanticError);
    CHECK(check_safety(parse_program("#domain X = {a}. p(X) :- not q(X).")).empty());
  }

  TEST_CASE("annotation variable only in a naf item") {
    auto d = check_safety(parse_program("p :- q, not r:V."));
    REQUIRE(d.size() == 1);
    CHECK(d[0].message.find("V") != std::string::npos);
  }

  TEST_CASE("annotation variables in heads are rejected") {
    CHECK_FALSE(check_safety(parse_program("p:V :- q:V.")).empty());
  }

  TEST_CASE("equality propagates bindings") {
    CHECK(check_safety(parse_program("p(Y) :- q(X), Y == X.")).empty());
    GroundProgram g = ground_text("q(a). q(b). p(Y) :- q(X), Y == X.");
    CHECK(g.rules.size() == 4);
  }

  TEST_CASE("domain expansion duplicates disjunctive facts") {
    GroundProgram g = ground_fixture("multishift.paso");
    std::vector<std::string> facts;
    for (const auto& r : g.rules) {
      if (!r.positive.empty()) continue;
      std::string text;
      for (const auto& h : r.head) text += format_atom(g.atoms[h.atom]) + " ";
      facts.push_back(text);
    }
    REQUIRE(facts.size() == 2);
    CHECK(facts[0] == "service(a,s1,d,x) service(a,s2,d,x) ");
    CHECK(facts[1] == "service(a,s1,d,y) service(a,s2,d,y) ");
  }

  TEST_CASE("instance count is the product of domains minus filtered instances") {
    // Universe {a,b,c}: 3^2 = 9 substitutions, 3 with X == Y.
    GroundProgram ne = ground_text("q(a). q(b). q(c). p :- q(X), q(Y), X != Y.");
    CHECK(ne.rules.size() == 3 + 6);
    GroundProgram eq = ground_text("q(a). q(b). q(c). p :- q(X), q(Y), X == Y.");
    CHECK(eq.rules.size() == 3 + 3);
    for (const auto& r : ne.rules) {
      if (r.positive.size() == 2) CHECK(r.positive[0].formula != r.positive[1].formula);
    }
  }

  TEST_CASE("grounding is idempotent") {
    for (const char* name : {"intro.paso", "nurse_example2.paso", "multishift.paso", "cycle.paso", "neutral.paso"}) {
      CAPTURE(name);
      GroundProgram g = ground_fixture(name);
      std::string text = format_ground(g);
      GroundProgram again = ground_text(text);
      CHECK(again.rules == g.rules);
      CHECK(again.preferences == g.preferences);
      CHECK(format_ground(again) == text);
    }
  }

  TEST_CASE("strategy directives set tau per predicate") {
    GroundProgram g = ground_text("#strategy p = ind.\np(a):0.5. p(b):0.5. q:0.5.");
    const PStrategy* ind = find_strategy("ind", StrategyKind::disjunctive);
    CHECK(&g.strategy_for(atom_id(g, "p(a)")) == ind);
    CHECK(&g.strategy_for(atom_id(g, "p(b)")) == ind);
    CHECK(&g.strategy_for(atom_id(g, "q")) == &default_disjunctive_strategy());
    CHECK_THROWS_AS(ground_text("#strategy p = ind.\n#strategy p = me.\np."), SemanticError);
    CHECK_NOTHROW(ground_text("#strategy p = ind.\n#strategy p = ind.\np."));
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(ground_text("#domain X = {a}.\n#domain X = {b}.\np(X)."), SemanticError);
  }

  TEST_CASE("ground annotation functions are pre-evaluated") {
    GroundProgram g = ground_text("a:[min(0.3,0.8),bsum(0.6,0.6)].");
    CHECK(g.rules.at(0).head.at(0).annotation == iv("0.3", "1"));
  }

  TEST_CASE("instance cap") {
    GroundOptions options;
    options.max_instances = 5;
    CHECK_THROWS_AS(ground(parse_program("q(a). q(b). q(c). p :- q(X), q(Y)."), options), ResourceError);
  }

  TEST_CASE("preference rules are grounded with their bodies") {
    GroundProgram g = ground_text("q(a). q(b). r(X):0.5 | s(X):0.5 :- q(X). r(X) >> s(X) :- q(X).");
    CHECK(g.preferences.size() == 2);
  }
}
