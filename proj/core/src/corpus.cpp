#include "cadorder/corpus.hpp"

#include <fstream>
#include <stdexcept>

#include "cadorder/parse.hpp"

namespace cadorder {

using nlohmann::json;

Problem CorpusEntry::to_problem() const {
  std::vector<Polynomial> polys;
  for (const auto& s : polynomials) polys.push_back(parse_polynomial_plain(s, vars));
  return make_problem(id, vars, std::move(polys));
}

CorpusEntry CorpusEntry::from_problem(const Problem& problem) {
  CorpusEntry e;
  e.id = problem.id;
  e.vars = problem.num_vars;
  for (const auto& p : problem.polynomials) e.polynomials.push_back(p.to_string());
  return e;
}

CorpusEntry CorpusEntry::from_labeled(const LabeledProblem& lp) {
  CorpusEntry e = from_problem(lp.problem);
  e.status = "labeled";
  e.timings = lp.timings;
  e.target_set = lp.target_set.indices();
  e.target = lp.target.index();
  return e;
}

json CorpusEntry::to_json() const {
  json j;
  j["id"] = id;
  j["vars"] = vars;
  j["polynomials"] = polynomials;
  j["status"] = status;
  if (timings) {
    json entries = json::array();
    for (int o = 0; o < kNumOrderings; ++o) {
      const auto& t = timings->times[static_cast<size_t>(o)];
      json e{{"ordering", o}};
      if (t)
        e["seconds"] = *t;
      else
        e["seconds"] = "timeout";
      entries.push_back(e);
    }
    j["timings"] = {{"limit", timings->limit_used}, {"entries", entries}};
  }
  if (target_set) j["target_set"] = *target_set;
  if (target) j["target"] = *target;
  return j;
}

CorpusEntry CorpusEntry::from_json(const json& j) {
  CorpusEntry e;
  e.id = j.at("id").get<std::string>();
  e.vars = j.at("vars").get<int>();
  e.polynomials = j.at("polynomials").get<std::vector<std::string>>();
  e.status = j.at("status").get<std::string>();
  if (j.contains("timings")) {
    TimingRecord r;
    r.problem_id = e.id;
    r.limit_used = j.at("timings").at("limit").get<double>();
    for (const auto& entry : j.at("timings").at("entries")) {
      int o = entry.at("ordering").get<int>();
      if (o < 0 || o >= kNumOrderings) throw std::invalid_argument("corpus: bad ordering index");
      const json& s = entry.at("seconds");
      if (s.is_string()) {
        if (s.get<std::string>() != "timeout")
          throw std::invalid_argument("corpus: bad seconds value");
      } else {
        r.times[static_cast<size_t>(o)] = s.get<double>();
      }
    }
    e.timings = std::move(r);
  }
  if (j.contains("target_set")) e.target_set = j.at("target_set").get<std::vector<int>>();
  if (j.contains("target")) e.target = j.at("target").get<int>();
  return e;
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus: " + path);
  std::vector<CorpusEntry> entries;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      entries.push_back(CorpusEntry::from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return entries;
}

void write_corpus(const std::string& path, const std::vector<CorpusEntry>& entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write corpus: " + path);
  for (const auto& e : entries) out << e.to_json().dump() << "\n";
}

}  // namespace cadorder
