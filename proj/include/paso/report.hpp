#pragma once

#include "paso/grounder.hpp"
#include "paso/interpretation.hpp"
#include "paso/prefs.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace paso {

struct EntryDoc {
  std::string formula;
  std::string lower;  // exact decimal, or p/q
  std::string upper;

  friend bool operator==(const EntryDoc&, const EntryDoc&) = default;
};

struct AnswerSetDoc {
  std::string id;  // h1, h2, ... in solver order
  std::vector<EntryDoc> entries;

  friend bool operator==(const AnswerSetDoc&, const AnswerSetDoc&) = default;
};

struct SatisfactionDoc {
  std::string set;
  std::string rule;   // r1, r2, ...
  std::string index;  // "1", "2", ... or "irr"

  friend bool operator==(const SatisfactionDoc&, const SatisfactionDoc&) = default;
};

struct RankingDoc {
  std::string mode;
  std::optional<std::vector<std::vector<std::string>>> strata;
  std::vector<std::string> top;

  friend bool operator==(const RankingDoc&, const RankingDoc&) = default;
};

struct PairDoc {
  std::string first;
  std::string second;
  std::string kind;

  friend bool operator==(const PairDoc&, const PairDoc&) = default;
};

struct OutputDocument {
  std::vector<AnswerSetDoc> answer_sets;
  std::size_t rule_count = 0;
  std::optional<std::vector<SatisfactionDoc>> satisfaction;
  std::optional<RankingDoc> ranking;
  std::vector<PairDoc> incomparable_pairs;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

enum class OutputFormat { text, json };

std::string set_id(std::size_t index);
std::string rule_id(std::size_t index);

OutputDocument make_document(const GroundProgram& program, std::span<const PInterpretation> sets);
void add_satisfaction(OutputDocument& doc, const GroundProgram& program, std::span<const PInterpretation> sets);
void add_ranking(OutputDocument& doc, const RankingResult& ranking);

std::string emit(const OutputDocument& doc, OutputFormat format);

/// Inverse of emit(doc, OutputFormat::json). Throws std::invalid_argument on malformed input.
OutputDocument document_from_json(std::string_view text);

}  // namespace paso
