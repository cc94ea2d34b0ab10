#include "paso/error.hpp"
#include "paso/grounder.hpp"
#include "paso/parser.hpp"
#include "paso/prefs.hpp"
#include "paso/report.hpp"
#include "paso/solver.hpp"
#include "paso/strategy.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

paso::Rational to_rational(const std::string& text) {
  auto r = paso::parse_rational(text);
  if (!r) throw py::value_error("not a rational in [0,1]: " + text);
  return *r;
}

std::string run(const std::string& source, bool explain, std::optional<std::string> mode, std::uint64_t max_candidates,
                unsigned jobs) {
  paso::GroundProgram g = paso::ground(paso::parse_program(source));
  paso::SolveOptions options;
  options.max_candidates = max_candidates;
  options.workers = jobs;
  std::vector<paso::PInterpretation> sets;
  {
    py::gil_scoped_release release;
    sets = paso::answer_sets(g, options);
  }
  paso::OutputDocument doc = paso::make_document(g, sets);
  if (!sets.empty()) {
    if (explain) paso::add_satisfaction(doc, g, sets);
    if (mode) {
      auto m = paso::parse_rank_mode(*mode);
      if (!m) throw py::value_error("mode must be 'pareto' or 'maximal'");
      paso::add_ranking(doc, paso::rank(sets, g.preferences, *m, jobs));
    }
  }
  return paso::emit(doc, paso::OutputFormat::json);
}

}  // namespace

PYBIND11_MODULE(_paso, m) {
  m.doc() = "Probabilistic answer set optimization solver";

  static py::exception<paso::Error> error(m, "Error");
  static py::exception<paso::ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<paso::SemanticError> semantic_error(m, "SemanticError", error.ptr());
  static py::exception<paso::ResourceError> resource_error(m, "ResourceError", error.ptr());
  static py::exception<paso::EvalError> eval_error(m, "EvalError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const paso::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const paso::SemanticError& e) {
      py::set_error(semantic_error, e.what());
    } catch (const paso::ResourceError& e) {
      py::set_error(resource_error, e.what());
    } catch (const paso::EvalError& e) {
      py::set_error(eval_error, e.what());
    }
  });

  py::class_<paso::ProbInterval>(m, "ProbInterval")
      .def(py::init([](const std::string& lo, const std::string& hi) {
             return paso::ProbInterval(to_rational(lo), to_rational(hi));
           }),
           py::arg("lower"), py::arg("upper"))
      .def_static("point", [](const std::string& v) { return paso::ProbInterval::point(to_rational(v)); })
      .def_property_readonly("lower", [](const paso::ProbInterval& i) { return paso::format_rational(i.lower()); })
      .def_property_readonly("upper", [](const paso::ProbInterval& i) { return paso::format_rational(i.upper()); })
      .def("__eq__", [](const paso::ProbInterval& a, const paso::ProbInterval& b) { return a == b; })
      .def("__hash__", [](const paso::ProbInterval& i) { return py::hash(py::str(paso::format_interval(i))); })
      .def("__str__", &paso::format_interval)
      .def("__repr__", [](const paso::ProbInterval& i) {
        return "ProbInterval('" + paso::format_rational(i.lower()) + "', '" + paso::format_rational(i.upper()) + "')";
      });

  m.def("truth_leq", &paso::truth_leq, py::arg("a"), py::arg("b"));
  m.def("truth_lt", &paso::truth_lt, py::arg("a"), py::arg("b"));
  m.def(
      "compose",
      [](const std::string& id, const std::string& kind, const std::vector<paso::ProbInterval>& values) {
        auto k = kind == "conjunctive" ? paso::StrategyKind::conjunctive : paso::StrategyKind::disjunctive;
        if (kind != "conjunctive" && kind != "disjunctive") throw py::value_error("kind must be conjunctive or disjunctive");
        const paso::PStrategy* s = paso::find_strategy(id, k);
        if (!s) throw py::value_error("unknown " + kind + " strategy '" + id + "'");
        return paso::compose(*s, values);
      },
      py::arg("strategy"), py::arg("kind"), py::arg("values"));

  m.def(
      "check",
      [](const std::string& source) {
        std::vector<std::string> out;
        for (const auto& d : paso::check_safety(paso::parse_program(source))) out.push_back(paso::format_diagnostic(d));
        return out;
      },
      py::arg("source"));
  m.def("format_program", [](const std::string& source) { return paso::format_program(paso::parse_program(source)); },
        py::arg("source"));
  m.def("dump_ground", [](const std::string& source) { return paso::format_ground(paso::ground(paso::parse_program(source))); },
        py::arg("source"));
  m.def(
      "solve_json",
      [](const std::string& source, std::uint64_t max_candidates, unsigned jobs) {
        return run(source, false, std::nullopt, max_candidates, jobs);
      },
      py::arg("source"), py::arg("max_candidates") = paso::kDefaultMaxCandidates, py::arg("jobs") = 1);
  m.def(
      "rank_json",
      [](const std::string& source, const std::string& mode, std::uint64_t max_candidates, unsigned jobs) {
        return run(source, false, mode, max_candidates, jobs);
      },
      py::arg("source"), py::arg("mode") = "maximal", py::arg("max_candidates") = paso::kDefaultMaxCandidates,
      py::arg("jobs") = 1);
  m.def(
      "explain_json",
      [](const std::string& source, std::uint64_t max_candidates, unsigned jobs) {
        return run(source, true, std::nullopt, max_candidates, jobs);
      },
      py::arg("source"), py::arg("max_candidates") = paso::kDefaultMaxCandidates, py::arg("jobs") = 1);
}
