#include "paso/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paso {
namespace {

using Json = nlohmann::ordered_json;

std::string entry_text(const EntryDoc& e) {
  if (e.lower == e.upper) return e.formula + ":" + e.lower;
  return e.formula + ":[" + e.lower + "," + e.upper + "]";
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

void emit_text(const OutputDocument& doc, std::ostream& out) {
  if (doc.answer_sets.empty()) {
    out << "no answer sets\n";
    return;
  }
  for (const auto& set : doc.answer_sets) {
    std::vector<std::string> parts;
    for (const auto& e : set.entries) parts.push_back(entry_text(e));
    out << set.id << " = {" << join(parts, ", ") << "}\n";
  }
  if (doc.satisfaction && doc.rule_count == 0) out << "\nno preference rules\n";
  if (doc.satisfaction && doc.rule_count > 0) {
    std::size_t width = 4;
    for (const auto& s : *doc.satisfaction) width = std::max(width, s.index.size() + 2);
    auto row = [&](const std::string& head, auto cell) {
      std::string line = head;
      for (std::size_t r = 0; r < doc.rule_count; ++r) {
        line.resize(std::max(line.size() + 1, width * (r + 1)), ' ');
        line += cell(r);
      }
      out << line << "\n";
    };
    out << "\n";
    row("", [](std::size_t r) { return rule_id(r); });
    for (std::size_t i = 0; i < doc.answer_sets.size(); ++i) {
      row(doc.answer_sets[i].id, [&](std::size_t r) { return (*doc.satisfaction)[i * doc.rule_count + r].index; });
    }
  }
  if (doc.ranking) {
    out << "\nranking (" << doc.ranking->mode << ")";
    if (doc.ranking->strata) {
      out << ":\n";
      for (const auto& stratum : *doc.ranking->strata) out << join(stratum, " = ") << "\n";
    } else {
      out << ": no total order\n";
      for (const auto& p : doc.incomparable_pairs) out << p.first << " " << p.second << " " << p.kind << "\n";
      out << "undominated: " << join(doc.ranking->top, " ") << "\n";
    }
  }
}

Json to_json(const OutputDocument& doc) {
  Json j = Json::object();
  Json sets = Json::array();
  for (const auto& set : doc.answer_sets) {
    Json entries = Json::array();
    for (const auto& e : set.entries) {
      entries.push_back(Json{{"formula", e.formula}, {"interval", Json::array({e.lower, e.upper})}});
    }
    sets.push_back(Json{{"id", set.id}, {"entries", entries}});
  }
  j["answer_sets"] = sets;
  if (doc.satisfaction) {
    Json table = Json::array();
    for (const auto& s : *doc.satisfaction) {
      Json index = s.index == "irr" ? Json("irr") : Json(std::stoul(s.index));
      table.push_back(Json{{"set", s.set}, {"rule", s.rule}, {"index", index}});
    }
    j["satisfaction"] = table;
  }
  if (doc.ranking) {
    Json r = Json::object();
    r["mode"] = doc.ranking->mode;
    if (doc.ranking->strata) r["strata"] = *doc.ranking->strata;
    r["top"] = doc.ranking->top;
    j["ranking"] = r;
    Json pairs = Json::array();
    for (const auto& p : doc.incomparable_pairs) {
      pairs.push_back(Json{{"first", p.first}, {"second", p.second}, {"kind", p.kind}});
    }
    j["incomparable_pairs"] = pairs;
  }
  return j;
}

}  // namespace

std::string set_id(std::size_t index) { return "h" + std::to_string(index + 1); }
std::string rule_id(std::size_t index) { return "r" + std::to_string(index + 1); }

OutputDocument make_document(const GroundProgram& program, std::span<const PInterpretation> sets) {
  OutputDocument doc;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    AnswerSetDoc set{set_id(i), {}};
    for (const auto& [literal, value] : sets[i].entries()) {
      set.entries.push_back(
          {format_ground_literal(literal, program.atoms), format_rational(value.lower()), format_rational(value.upper())});
    }
    doc.answer_sets.push_back(std::move(set));
  }
  return doc;
}

void add_satisfaction(OutputDocument& doc, const GroundProgram& program, std::span<const PInterpretation> sets) {
  std::vector<SatisfactionDoc> table;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t r = 0; r < program.preferences.size(); ++r) {
      table.push_back({set_id(i), rule_id(r), format_index(pref_rule_index(sets[i], program.preferences[r]))});
    }
  }
  doc.rule_count = program.preferences.size();
  doc.satisfaction = std::move(table);
}

void add_ranking(OutputDocument& doc, const RankingResult& ranking) {
  RankingDoc r;
  r.mode = std::string(rank_mode_name(ranking.mode));
  if (ranking.strata) {
    std::vector<std::vector<std::string>> strata;
    for (const auto& stratum : *ranking.strata) {
      std::vector<std::string> ids;
      for (std::size_t i : stratum) ids.push_back(set_id(i));
      strata.push_back(std::move(ids));
    }
    r.strata = std::move(strata);
  }
  for (std::size_t i : ranking.undominated) r.top.push_back(set_id(i));
  doc.ranking = std::move(r);
  doc.incomparable_pairs.clear();
  for (const auto& issue : ranking.issues) {
    doc.incomparable_pairs.push_back(
        {set_id(issue.first), set_id(issue.second), std::string(issue_kind_name(issue.kind))});
  }
}

std::string emit(const OutputDocument& doc, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(doc).dump(2) + "\n";
  std::ostringstream out;
  emit_text(doc, out);
  return out.str();
}

OutputDocument document_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
    OutputDocument doc;
    for (const auto& set : j.at("answer_sets")) {
      AnswerSetDoc s{set.at("id").get<std::string>(), {}};
      for (const auto& e : set.at("entries")) {
        const auto& iv = e.at("interval");
        s.entries.push_back({e.at("formula").get<std::string>(), iv.at(0).get<std::string>(),
                             iv.at(1).get<std::string>()});
      }
      doc.answer_sets.push_back(std::move(s));
    }
    if (j.contains("satisfaction")) {
      std::vector<SatisfactionDoc> table;
      std::vector<std::string> rules;
      for (const auto& s : j.at("satisfaction")) {
        const auto& index = s.at("index");
        std::string rule = s.at("rule").get<std::string>();
        if (std::find(rules.begin(), rules.end(), rule) == rules.end()) rules.push_back(rule);
        table.push_back({s.at("set").get<std::string>(), rule,
                         index.is_string() ? index.get<std::string>() : std::to_string(index.get<unsigned long>())});
      }
      doc.rule_count = rules.size();
      doc.satisfaction = std::move(table);
    }
    if (j.contains("ranking")) {
      const auto& r = j.at("ranking");
      RankingDoc rd;
      rd.mode = r.at("mode").get<std::string>();
      if (r.contains("strata")) rd.strata = r.at("strata").get<std::vector<std::vector<std::string>>>();
      rd.top = r.at("top").get<std::vector<std::string>>();
      doc.ranking = std::move(rd);
      for (const auto& p : j.at("incomparable_pairs")) {
        doc.incomparable_pairs.push_back(
            {p.at("first").get<std::string>(), p.at("second").get<std::string>(), p.at("kind").get<std::string>()});
      }
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed output document: ") + e.what());
  }
}

}  // namespace paso
