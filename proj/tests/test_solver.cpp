#include "doctest.h"
#include "test_util.hpp"

#include "paso/error.hpp"
#include "paso/oracle.hpp"
#include "paso/solver.hpp"

#include <algorithm>

using namespace paso;
using namespace paso::test;

namespace {

std::vector<std::string> shown(const GroundProgram& g, const std::vector<PInterpretation>& sets) {
  std::vector<std::string> out;
  for (const auto& h : sets) out.push_back(format_interpretation(h, g.atoms));
  return out;
}

// Atom-order independent rendering of a list of answer sets.
std::vector<std::string> canonical(const GroundProgram& g, const std::vector<PInterpretation>& sets) {
  std::vector<std::string> out;
  for (const auto& h : sets) {
    std::vector<std::string> entries;
    for (const auto& [lit, value] : h.entries()) {
      entries.push_back(format_ground_literal(lit, g.atoms) + ":" + format_interval(value));
    }
    std::sort(entries.begin(), entries.end());
    std::string joined;
    for (const auto& e : entries) joined += e + " ";
    out.push_back(joined);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("reduct") {
    GroundProgram intro = ground_fixture("intro.paso");
    PInterpretation empty;
    CHECK(compute_reduct(intro, empty).rules == intro.rules);

    GroundProgram g = ground_text("inconsistent:1 :- not inconsistent:1, a:0.5. a:0.5.");
    Reduct r = compute_reduct(g, empty);
    REQUIRE(r.rules.size() == 2);
    CHECK(r.rules[0].naf.empty());
    CHECK(r.rules[0].positive == g.rules[0].positive);

    PInterpretation with = interp(g, {{"inconsistent", pt("1")}});
    CHECK(compute_reduct(g, with).rules.size() == 1);
  }

  TEST_CASE("naf-free programs are their own reduct") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      GroundProgram g = ground_text("a:0.5 | b:0.3. c:0.7 :- a:0.2, (a vind b):0.4. b :- c.");
      std::mt19937_64 rng(seed);
      PInterpretation h;
      for (AtomId id = 0; id < g.atoms.size(); ++id) {
        if (rng() % 2) h.assign({id, false}, random_interval(rng));
      }
      CHECK(compute_reduct(g, h).rules == g.rules);
    }
  }

  TEST_CASE("rule satisfaction") {
    GroundProgram intro = ground_fixture("intro.paso");
    const GroundRule& rule = intro.rules.at(0);
    CHECK(satisfies_rule(interp(intro, {{"service(a,s1,d)", pt("0.7")}}), rule));
    CHECK_FALSE(satisfies_rule(interp(intro, {{"service(a,s1,d)", pt("0.6")}}), rule));

    GroundProgram body = ground_text("h :- a:0.3. a:0.1.");
    PInterpretation empty;
    CHECK(satisfies_rule(empty, body.rules.at(0)));

    GroundProgram fact = ground_text("a:0.7 :- .");
    CHECK_FALSE(satisfies_rule(interp(fact, {{"a", pt("0.5")}}), fact.rules.at(0)));
  }

  TEST_CASE("p-model examples") {
    GroundProgram intro = ground_fixture("intro.paso");
    CHECK(is_p_model(interp(intro, {{"service(a,s1,d)", pt("0.7")}}), intro));
    CHECK_FALSE(is_p_model(interp(intro, {{"service(a,s1,d)", pt("0.6")}}), intro));
    GroundProgram empty_program;
    CHECK(is_p_model(PInterpretation{}, empty_program));
  }

  TEST_CASE("head aggregation uses tau") {
    GroundProgram g = ground_text("#strategy a = ind.\na:0.5. a:0.5 :- b. b.");
    CHECK(is_p_model(interp(g, {{"a", pt("0.75")}, {"b", pt("1")}}), g));
    CHECK_FALSE(is_p_model(interp(g, {{"a", pt("0.5")}, {"b", pt("1")}}), g));
    GroundProgram unsupported = ground_text("#strategy a = ind.\na:0.5. a:0.5 :- b.");
    CHECK(is_p_model(interp(unsupported, {{"a", pt("0.5")}}), unsupported));
  }

  TEST_CASE("binders need a defined formula and agree across occurrences") {
    GroundProgram g = ground_text("h :- a:V, b:V. a:0.5. b:0.5. c:0.3.");
    const GroundRule& r = g.rules.at(0);
    CHECK(body_satisfied(interp(g, {{"a", pt("0.5")}, {"b", pt("0.5")}}), r));
    CHECK_FALSE(body_satisfied(interp(g, {{"a", pt("0.5")}, {"b", pt("0.3")}}), r));
    CHECK_FALSE(body_satisfied(interp(g, {{"a", pt("0.5")}}), r));
    auto b = bind_annotation_variables(interp(g, {{"a", pt("0.5")}}), std::span(r.positive).first(1));
    REQUIRE(b.has_value());
    CHECK(b->at("V") == pt("0.5"));
  }

  TEST_CASE("lattice cells are closed under tau") {
    GroundProgram g = ground_text("a:0.3. a:0.4 :- b. b.");
    CandidateLattice lattice = build_lattice(g);
    const auto* cell = lattice.cell(atom_id(g, "a"));
    REQUIRE(cell != nullptr);
    CHECK(*cell == std::vector<ProbInterval>{pt("0.3"), pt("0.4")});

    GroundProgram ind = ground_text("#strategy a = ind.\na:0.5. a:0.5 :- b. b.");
    CHECK(*build_lattice(ind).cell(atom_id(ind, "a")) == std::vector<ProbInterval>{pt("0.5"), pt("0.75")});

    GroundProgram zero = ground_text("a:0.");
    CHECK(build_lattice(zero).atoms.empty());
  }

  TEST_CASE("candidate enumeration") {
    GroundProgram intro = ground_fixture("intro.paso");
    auto all = enumerate_candidates(intro);
    CHECK(all.size() == 4);
    CHECK(all.front().empty());
    CHECK(std::is_sorted(all.begin(), all.end(), interpretation_less));
    CHECK(enumerate_candidates(ground_text("a:0.5.")).size() == 2);
    CHECK_THROWS_AS(enumerate_candidates(intro, 3), ResourceError);
  }

  TEST_CASE("intro program has two answer sets") {
    GroundProgram g = ground_fixture("intro.paso");
    auto sets = answer_sets(g);
    CHECK(sorted(shown(g, sets)) == std::vector<std::string>{"{service(a,s1,d):0.7}", "{service(a,s2,d):0.4}"});
  }

  TEST_CASE("nurse corpus has the eight answer sets") {
    GroundProgram g = ground_fixture("nurse_example2.paso");
    auto sets = answer_sets(g);
    std::vector<std::string> expected{
        "{service(lily,late,sat):0.2, service(lucci,night,sat):0.7, service(lucci,early,sun):0.5, service(jeen,day,sat):0.4}",
        "{service(lily,late,sat):0.2, service(lucci,night,sat):0.7, service(lucci,early,sun):0.5, service(jeen,early,sat):0.8}",
        "{service(lily,late,sat):0.2, service(lucci,night,sat):0.7, service(lucci,night,sun):0.7, service(jeen,day,sat):0.4}",
        "{service(lily,late,sat):0.2, service(lucci,night,sat):0.7, service(lucci,night,sun):0.7, service(jeen,early,sat):0.8}",
        "{service(lily,day,sat):0.6, service(lucci,late,sat):0.3, service(lucci,early,sun):0.5, service(jeen,early,sat):0.8}",
        "{service(lily,day,sat):0.6, service(lucci,late,sat):0.3, service(lucci,night,sun):0.7, service(jeen,early,sat):0.8}",
        "{service(lily,day,sat):0.6, service(lucci,night,sat):0.7, service(lucci,early,sun):0.5, service(jeen,early,sat):0.8}",
        "{service(lily,day,sat):0.6, service(lucci,night,sat):0.7, service(lucci,night,sun):0.7, service(jeen,early,sat):0.8}",
    };
    CHECK(shown(g, sets) == expected);
  }

  TEST_CASE("odd loop through naf has no answer set") {
    GroundProgram g = ground_text("a:0.5 :- not a:0.5.");
    CHECK(answer_sets(g).empty());
    CHECK(oracle::brute_answer_sets(g).empty());
  }

  TEST_CASE("constraint that rejects every guess") {
    CHECK(answer_sets(ground_fixture("unsat.paso")).empty());
  }

  TEST_CASE("multi-shift assignment") {
    GroundProgram g = ground_fixture("multishift.paso");
    CHECK(sorted(shown(g, answer_sets(g))) ==
          std::vector<std::string>{"{service(a,s1,d,x):0.6, service(a,s2,d,y):0.4}",
                                   "{service(a,s2,d,x):0.4, service(a,s1,d,y):0.6}"});
  }

  TEST_CASE("returned sets are minimal p-models of the program and their reduct") {
    for (const char* name : {"intro.paso", "nurse_example2.paso", "multishift.paso", "neutral.paso"}) {
      CAPTURE(name);
      GroundProgram g = ground_fixture(name);
      auto candidates = enumerate_candidates(g);
      for (const auto& h : answer_sets(g)) {
        Reduct r = compute_reduct(g, h);
        CHECK(is_p_model(h, g));
        CHECK(is_p_model(h, r));
        for (const auto& lower : candidates) {
          if (lower != h && pointwise_leq(lower, h)) CHECK_FALSE(is_p_model(lower, r));
        }
        CHECK(normalized(h) == h);
      }
    }
  }

  TEST_CASE("worker count does not change the result") {
    for (const char* name : {"nurse_example2.paso", "multishift.paso"}) {
      GroundProgram g = ground_fixture(name);
      auto one = answer_sets(g);
      for (unsigned w : {2u, 3u, 8u}) {
        SolveOptions options;
        options.workers = w;
        CHECK(answer_sets(g, options) == one);
      }
    }
  }

  TEST_CASE("answer sets do not depend on rule order") {
    Program p = parse_program(read_fixture("nurse_example2.paso"));
    GroundProgram g = ground(p);
    auto expected = canonical(g, answer_sets(g));
    std::reverse(p.generators.begin(), p.generators.end());
    GroundProgram reversed = ground(p);
    CHECK(canonical(reversed, answer_sets(reversed)) == expected);
  }

  TEST_CASE("candidate cap is reported, never truncated") {
    GroundProgram g = ground_fixture("nurse_example2.paso");
    SolveOptions options;
    options.max_candidates = 100;
    CHECK_THROWS_AS(answer_sets(g, options), ResourceError);
  }
}
