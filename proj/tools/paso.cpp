// paso: solve and rank probabilistic answer set optimization programs.

#include "paso/error.hpp"
#include "paso/grounder.hpp"
#include "paso/oracle.hpp"
#include "paso/parser.hpp"
#include "paso/prefs.hpp"
#include "paso/report.hpp"
#include "paso/solver.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kSemantic = 3, kNoAnswerSets = 4, kResource = 5 };

struct Options {
  std::string file;
  std::string format = "text";
  std::string mode = "maximal";
  bool dump_ground = false;
  std::uint64_t max_candidates = 0;
  unsigned jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t candidate_cap(const Options& o) {
  if (o.max_candidates > 0) return o.max_candidates;
  if (const char* env = std::getenv("PASO_MAX_CANDIDATES")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("PASO_MAX_CANDIDATES is not a positive integer: ") + env);
  }
  return paso::kDefaultMaxCandidates;
}

paso::OutputFormat output_format(const Options& o) {
  return o.format == "json" ? paso::OutputFormat::json : paso::OutputFormat::text;
}

int run_check(const Options& o) {
  paso::Program program = paso::parse_program(read_file(o.file));
  auto diagnostics = paso::check_safety(program);
  if (!diagnostics.empty()) {
    for (const auto& d : diagnostics) std::cerr << o.file << ":" << paso::format_diagnostic(d) << "\n";
    return kSemantic;
  }
  paso::GroundProgram g = paso::ground(program);
  if (o.dump_ground) {
    std::cout << paso::format_ground(g);
    return kOk;
  }
  for (const auto& rule : g.rules) {
    auto wide = std::find_if(rule.head.begin(), rule.head.end(), [](const auto& h) { return !h.annotation.is_point(); });
    if (wide == rule.head.end()) continue;
    std::cerr << o.file << ": note: interval head annotation on " << paso::format_atom(g.atoms[wide->atom])
              << "; only values composed from head annotations are searched\n";
    break;
  }
  std::cout << "ok: " << program.generators.size() << " generator rules, " << program.preferences.size()
            << " preference rules, " << g.rules.size() << " ground rules\n";
  return kOk;
}

int run_solver(const Options& o, bool explain, bool ranked) {
  paso::GroundProgram g = paso::ground(paso::parse_program(read_file(o.file)));
  if (o.dump_ground) {
    std::cout << paso::format_ground(g);
    return kOk;
  }
  paso::SolveOptions so;
  so.max_candidates = candidate_cap(o);
  so.workers = o.jobs;
  auto sets = paso::answer_sets(g, so);
  paso::OutputDocument doc = paso::make_document(g, sets);
  if (!sets.empty()) {
    if (explain) paso::add_satisfaction(doc, g, sets);
    if (ranked) {
      auto mode = paso::parse_rank_mode(o.mode).value_or(paso::RankMode::maximal);
      paso::add_ranking(doc, paso::rank(sets, g.preferences, mode, o.jobs));
    }
  }
  std::cout << paso::emit(doc, output_format(o));
  if (sets.empty()) {
    std::cerr << o.file << ": no answer sets\n";
    return kNoAnswerSets;
  }
  return kOk;
}

struct OracleOptions {
  std::string file;
  bool classical = false;
  std::int64_t seed = -1;
  unsigned atoms = 3;
  unsigned rules = 4;
  unsigned prefs = 2;
};

int run_oracle(const OracleOptions& o) {
  if (o.seed >= 0) {
    std::cout << paso::oracle::gen_random_text(static_cast<std::uint64_t>(o.seed),
                                               {o.atoms, o.rules, o.prefs, o.classical});
    return kOk;
  }
  if (o.file.empty()) throw UsageError("oracle needs FILE or --generate SEED");
  paso::Program program = paso::parse_program(read_file(o.file));
  if (o.classical) {
    auto ranking = paso::oracle::classical_rank(paso::oracle::to_classical(program));
    for (std::size_t i = 0; i < ranking.sets.size(); ++i) {
      std::cout << paso::set_id(i) << " = {";
      std::size_t k = 0;
      for (const auto& a : ranking.sets[i]) std::cout << (k++ ? ", " : "") << a;
      std::cout << "}\n";
    }
    for (std::size_t i = 0; i < ranking.sets.size(); ++i) {
      for (std::size_t j = i + 1; j < ranking.sets.size(); ++j) {
        std::cout << paso::set_id(i) << " " << paso::set_id(j) << " "
                  << paso::ordering_name(ranking.relation[i][j]) << "\n";
      }
    }
    return ranking.sets.empty() ? kNoAnswerSets : kOk;
  }
  paso::GroundProgram g = paso::ground(program);
  auto sets = paso::oracle::brute_answer_sets(g);
  std::cout << paso::emit(paso::make_document(g, sets), paso::OutputFormat::text);
  return sets.empty() ? kNoAnswerSets : kOk;
}

void add_common(CLI::App* cmd, Options& o, bool solving) {
  cmd->add_option("FILE", o.file, "program file (.paso)")->required();
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--dump-ground", o.dump_ground, "print the ground program and exit");
  if (solving) {
    cmd->add_option("--max-candidates", o.max_candidates,
                    "candidate cap (default: $PASO_MAX_CANDIDATES or 10000000)");
    cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve and rank probabilistic answer set optimization programs"};
  app.require_subcommand(1);

  Options options;
  OracleOptions oracle;
  auto* check = app.add_subcommand("check", "parse the program and report safety diagnostics");
  add_common(check, options, false);
  auto* solve = app.add_subcommand("solve", "print the answer sets");
  add_common(solve, options, true);
  auto* rank = app.add_subcommand("rank", "print the answer sets and their preference ranking");
  add_common(rank, options, true);
  rank->add_option("--mode", options.mode, "preference relation")->check(CLI::IsMember({"pareto", "maximal"}));
  auto* explain = app.add_subcommand("explain", "print the satisfaction index of every answer set per preference rule");
  add_common(explain, options, true);

  auto* orc = app.add_subcommand("oracle", "");
  orc->group("");
  orc->add_option("FILE", oracle.file);
  orc->add_flag("--classical", oracle.classical);
  orc->add_option("--generate", oracle.seed);
  orc->add_option("--atoms", oracle.atoms);
  orc->add_option("--rules", oracle.rules);
  orc->add_option("--prefs", oracle.prefs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string& file = orc->parsed() ? oracle.file : options.file;
  try {
    if (check->parsed()) return run_check(options);
    if (solve->parsed()) return run_solver(options, false, false);
    if (rank->parsed()) return run_solver(options, false, true);
    if (explain->parsed()) return run_solver(options, true, false);
    return run_oracle(oracle);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const paso::ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kParse;
  } catch (const paso::SemanticError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kSemantic;
  } catch (const paso::EvalError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kSemantic;
  } catch (const paso::ResourceError& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return kResource;
  }
}
