// JSON-lines corpus store: one object per problem, carrying the parsed
// polynomials plus labeling state.  Serialization is canonical (sorted
// keys, one line per entry) so rewrites are reproducible.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cadorder/labeling.hpp"
#include "cadorder/problem.hpp"

namespace cadorder {

struct CorpusEntry {
  std::string id;
  int vars = kDefaultNumVars;
  std::vector<std::string> polynomials;  // plain-format strings
  std::string status = "unlabeled";      // "unlabeled" | "labeled"
  std::optional<TimingRecord> timings;
  std::optional<std::vector<int>> target_set;
  std::optional<int> target;

  bool labeled() const { return status == "labeled"; }

  Problem to_problem() const;
  static CorpusEntry from_problem(const Problem& problem);
  static CorpusEntry from_labeled(const LabeledProblem& lp);

  nlohmann::json to_json() const;
  static CorpusEntry from_json(const nlohmann::json& j);
};

std::vector<CorpusEntry> read_corpus(const std::string& path);
void write_corpus(const std::string& path, const std::vector<CorpusEntry>& entries);

}  // namespace cadorder
