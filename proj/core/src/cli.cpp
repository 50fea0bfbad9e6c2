#include "cadorder/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cadorder/corpus.hpp"
#include "cadorder/cv.hpp"
#include "cadorder/evaluation.hpp"
#include "cadorder/heuristics.hpp"
#include "cadorder/model.hpp"
#include "cadorder/parse.hpp"

namespace cadorder {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBackend = 3;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string metadata_header(uint64_t seed, const std::string& input_path) {
  std::ostringstream os;
  os << "# " << kToolVersion << "\n";
  os << "# seed=" << seed << "\n";
  os << "# input=" << input_path << " hash=" << file_hash(input_path) << "\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  out << contents;
}

std::string backend_descriptor(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("CADORDER_BACKEND")) return env;
  throw BackendError("no backend configured; pass --backend or set CADORDER_BACKEND");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---- ingest ---------------------------------------------------------------

struct IngestArgs {
  std::vector<std::string> inputs;
  std::string format = "plain";
  std::string output;
};

int cmd_ingest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
  ProblemFormat format = format_from_string(a.format);
  std::vector<CorpusEntry> entries;
  size_t warnings = 0;
  for (const auto& path : a.inputs) {
    try {
      Problem p = parse_problem(read_text(path), format, fs::path(path).stem().string());
      entries.push_back(CorpusEntry::from_problem(p));
    } catch (const std::exception& e) {
      err << "warning: skipping " << path << ": " << e.what() << "\n";
      ++warnings;
    }
  }
  if (entries.empty()) throw DataError("no problems parsed successfully");
  write_corpus(a.output, entries);
  out << "ingested " << entries.size() << " problems (" << warnings << " skipped) into " << a.output
      << "\n";
  return kExitOk;
}

// ---- label ----------------------------------------------------------------

struct LabelArgs {
  std::string corpus;
  std::string backend;
  double initial_limit = kDefaultInitialLimit;
  double max_limit = kDefaultMaxLimit;
  bool test_mode = false;
  double test_limit = kDefaultMaxLimit;
  int jobs = 1;
};

int cmd_label(const LabelArgs& a, std::ostream& out, std::ostream& err) {
  std::string descriptor = backend_descriptor(a.backend);
  make_backend(descriptor);  // validate the spec before any work
  auto entries = read_corpus(a.corpus);

  std::vector<size_t> todo;
  for (size_t i = 0; i < entries.size(); ++i)
    if (!entries[i].labeled()) todo.push_back(i);

  size_t labeled = 0, unlabeled = 0;
  std::mutex mu;
  std::atomic<size_t> cursor{0};
  std::string backend_failure;

  auto worker = [&]() {
    auto backend = make_backend(descriptor);
    for (;;) {
      size_t slot = cursor.fetch_add(1);
      if (slot >= todo.size()) return;
      size_t i = todo[slot];
      Problem problem = entries[i].to_problem();
      if (a.test_mode) {
        TimingRecord record = time_all_test(*backend, problem, a.test_limit);
        auto targets = argmin_orderings(record);
        std::lock_guard<std::mutex> lock(mu);
        if (targets) {
          entries[i].status = "labeled";
          entries[i].timings = std::move(record);
          entries[i].target_set = targets->indices();
          entries[i].target = targets->lowest();
          ++labeled;
        } else {
          ++unlabeled;
        }
      } else {
        std::optional<LabeledProblem> lp;
        try {
          lp = label_problem(*backend, problem, a.initial_limit, a.max_limit);
        } catch (const BackendError& e) {
          std::lock_guard<std::mutex> lock(mu);
          if (backend_failure.empty()) backend_failure = e.what();
          return;
        }
        std::lock_guard<std::mutex> lock(mu);
        if (lp) {
          CorpusEntry updated = CorpusEntry::from_labeled(*lp);
          updated.id = entries[i].id;
          entries[i] = std::move(updated);
          ++labeled;
        } else {
          ++unlabeled;
        }
      }
    }
  };

  int jobs = std::max(1, a.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!backend_failure.empty()) throw BackendError(backend_failure);

  // Single-writer rewrite; already-labeled lines pass through untouched.
  std::string tmp = a.corpus + ".tmp";
  write_corpus(tmp, entries);
  fs::rename(tmp, a.corpus);
  out << "labeled " << labeled << " problems, " << unlabeled << " left unlabeled, "
      << entries.size() - todo.size() << " already labeled\n";
  if (unlabeled > 0) err << "warning: " << unlabeled << " problems exceeded the limit\n";
  return kExitOk;
}

// ---- train ----------------------------------------------------------------

struct TrainArgs {
  std::string corpus;
  std::string kind = "dt";
  std::string grid_file;
  int folds = 5;
  uint64_t seed = 0;
  std::string model_out = "model.json";
  std::string cv_out = "cv.csv";
};

Dataset labeled_dataset(const std::vector<CorpusEntry>& entries) {
  Dataset d;
  for (const auto& e : entries) {
    if (!e.labeled() || !e.target) continue;
    d.features.push_back(extract_features(e.to_problem()));
    d.labels.push_back(*e.target);
  }
  if (d.features.empty()) throw DataError("corpus has no labeled problems");
  return d;
}

ParamGrid grid_from_json(const json& j) {
  ParamGrid grid;
  for (auto it = j.begin(); it != j.end(); ++it)
    grid[it.key()] = std::vector<json>(it.value().begin(), it.value().end());
  return grid;
}

int cmd_train(const TrainArgs& a, std::ostream& out, std::ostream& err) {
  ModelKind kind = model_kind_from_string(a.kind);
  auto entries = read_corpus(a.corpus);
  Dataset raw = labeled_dataset(entries);

  Standardizer st = fit_standardizer(raw.features);
  Dataset data;
  data.features = transform_all(st, raw.features);
  data.labels = raw.labels;

  ParamGrid grid = a.grid_file.empty() ? default_grid(kind)
                                       : grid_from_json(json::parse(read_text(a.grid_file)));
  GridSearchResult cv = grid_search(kind, grid, data, a.folds, a.seed);
  for (const auto& w : cv.boundary_warnings) err << "warning: " << w << "\n";

  TrainedModel model = TrainedModel::fit(kind, cv.best_params, data, st, a.seed);
  model.save(a.model_out);
  write_file(a.cv_out, metadata_header(a.seed, a.corpus) + cv.table_csv());
  if (!model.converged()) err << "warning: model did not converge within its iteration budget\n";

  out << "trained " << a.kind << " on " << data.size() << " problems\n";
  out << "best params: " << cv.best_params.dump() << " (cv accuracy "
      << 100.0 * cv.best_accuracy << "%)\n";
  out << "model: " << a.model_out << "\ncv table: " << a.cv_out << "\n";
  return kExitOk;
}

// ---- evaluate / bounds ----------------------------------------------------

struct EvaluateArgs {
  std::string corpus;
  std::vector<std::string> models;
  std::vector<std::string> heuristic_methods;  // brown, sotd, random
  double cap = kDefaultTimeCap;
  double bin_percent = 1.0;
  uint64_t seed = 0;
  std::string out_dir = ".";
};

struct TestSet {
  std::vector<Problem> problems;
  std::vector<OrderingSet> targets;
  std::vector<TimingRecord> timings;
};

TestSet load_test_set(const std::string& corpus_path) {
  TestSet ts;
  for (const auto& e : read_corpus(corpus_path)) {
    if (!e.timings) continue;
    ts.problems.push_back(e.to_problem());
    ts.timings.push_back(*e.timings);
    if (e.target_set) {
      ts.targets.push_back(OrderingSet(*e.target_set));
    } else {
      auto targets = argmin_orderings(*e.timings);
      if (!targets) throw DataError("problem " + e.id + " has no finite timing");
      ts.targets.push_back(*targets);
    }
  }
  if (ts.problems.empty()) throw DataError("corpus has no problems with timing records");
  return ts;
}

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out, std::ostream& err) {
  TestSet ts = load_test_set(a.corpus);
  std::vector<MethodPrediction> methods;

  for (const auto& path : a.models) {
    TrainedModel model = TrainedModel::load(path);
    MethodPrediction mp;
    mp.name = to_string(model.kind());
    for (const auto& p : ts.problems)
      mp.predictions.push_back(OrderingSet({model.predict(extract_features(p))}));
    methods.push_back(std::move(mp));
  }
  for (const auto& name : a.heuristic_methods) {
    MethodPrediction mp;
    mp.name = name;
    for (const auto& p : ts.problems) {
      if (name == "brown")
        mp.predictions.push_back(brown(p));
      else if (name == "sotd")
        mp.predictions.push_back(sotd(p));
      else if (name == "random")
        mp.predictions.push_back(OrderingSet({random_choice(p, a.seed).index()}));
      else
        throw DataError("unknown method: " + name);
    }
    methods.push_back(std::move(mp));
  }
  if (methods.empty()) throw DataError("no methods requested; pass --model or --methods");

  EvaluationReport report = make_report(methods, ts.targets, ts.timings, a.cap, a.bin_percent);
  std::string header = metadata_header(a.seed, a.corpus);
  fs::create_directories(a.out_dir);
  write_file((fs::path(a.out_dir) / "report.csv").string(), header + report.to_csv());
  write_file((fs::path(a.out_dir) / "report.md").string(), report.to_markdown());
  write_file((fs::path(a.out_dir) / "histogram.csv").string(), header + report.histogram_csv());
  for (const auto& h : report.histograms)
    if (h.skipped > 0) err << "warning: " << h.skipped << " zero-minimum problems skipped\n";

  out << report.to_markdown();
  out << "reports written to " << a.out_dir << "\n";
  return kExitOk;
}

struct BoundsArgs {
  std::string corpus;
  double cap = kDefaultTimeCap;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream&) {
  TestSet ts = load_test_set(a.corpus);
  Bounds b = bounds(ts.timings, a.cap);
  out << "problems: " << ts.timings.size() << "\n";
  out << "min_total_seconds: " << b.min_total << "\n";
  out << "max_total_seconds: " << b.max_total << "\n";
  out << "random_total_seconds: " << b.random_total << "\n";
  return kExitOk;
}

// ---- predict --------------------------------------------------------------

struct PredictArgs {
  std::string model;
  std::string heuristic;
  std::string problem_file;
  std::string format = "plain";
  uint64_t seed = 0;
};

int cmd_predict(const PredictArgs& a, std::ostream& out, std::ostream&) {
  Problem p = parse_problem(read_text(a.problem_file), format_from_string(a.format),
                            fs::path(a.problem_file).stem().string());
  int index;
  if (!a.model.empty()) {
    index = TrainedModel::load(a.model).predict(extract_features(p));
  } else if (a.heuristic == "brown") {
    index = brown(p).lowest();
  } else if (a.heuristic == "sotd") {
    index = sotd(p).lowest();
  } else if (a.heuristic == "random") {
    index = random_choice(p, a.seed).index();
  } else {
    throw DataError("pass --model or --heuristic brown|sotd|random");
  }
  OrderingId ordering(index);
  out << ordering.to_string() << " " << ordering.index() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variable ordering selection for 3-variable CAD problems"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ci = app.add_subcommand("ingest", "Parse problem files into a JSONL corpus");
  ci->add_option("inputs", ingest.inputs, "Problem files")->required();
  ci->add_option("--format", ingest.format, "plain or smtlib");
  ci->add_option("--output", ingest.output, "Corpus path")->required();

  LabelArgs label;
  auto* cl = app.add_subcommand("label", "Time orderings through the backend and label problems");
  cl->add_option("--corpus", label.corpus, "Corpus path")->required();
  cl->add_option("--backend", label.backend, "Backend command template or mock:fixture.json");
  cl->add_option("--initial-limit", label.initial_limit, "Starting time limit in seconds");
  cl->add_option("--max-limit", label.max_limit, "Largest time limit in seconds");
  cl->add_flag("--test", label.test_mode, "Single fixed-limit pass for the test corpus");
  cl->add_option("--test-limit", label.test_limit, "Fixed limit for --test mode");
  cl->add_option("--jobs", label.jobs, "Parallel labeling workers");

  TrainArgs train;
  auto* ct = app.add_subcommand("train", "Grid-search cross-validate and fit a model");
  ct->add_option("--corpus", train.corpus, "Labeled training corpus")->required();
  ct->add_option("--kind", train.kind, "knn, dt, mlp or svm")->required();
  ct->add_option("--grid", train.grid_file, "JSON hyperparameter grid");
  ct->add_option("--folds", train.folds, "Cross-validation folds");
  ct->add_option("--seed", train.seed, "Random seed");
  ct->add_option("--model-out", train.model_out, "Model file path");
  ct->add_option("--cv-out", train.cv_out, "CV table CSV path");

  EvaluateArgs evaluate;
  auto* ce = app.add_subcommand("evaluate", "Score methods on a timed test corpus");
  ce->add_option("--corpus", evaluate.corpus, "Test corpus with timing records")->required();
  ce->add_option("--model", evaluate.models, "Trained model file (repeatable)");
  ce->add_option("--methods", evaluate.heuristic_methods, "brown, sotd and/or random")
      ->delimiter(',');
  ce->add_option("--cap", evaluate.cap, "Timeout value in seconds");
  ce->add_option("--bin-percent", evaluate.bin_percent, "Histogram bin width");
  ce->add_option("--seed", evaluate.seed, "Random baseline seed");
  ce->add_option("--out-dir", evaluate.out_dir, "Report output directory");

  PredictArgs predict;
  auto* cp = app.add_subcommand("predict", "Predict the ordering for one problem");
  cp->add_option("--model", predict.model, "Trained model file");
  cp->add_option("--heuristic", predict.heuristic, "brown, sotd or random");
  cp->add_option("--problem", predict.problem_file, "Problem file")->required();
  cp->add_option("--format", predict.format, "plain or smtlib");
  cp->add_option("--seed", predict.seed, "Random heuristic seed");

  BoundsArgs bounds_args;
  auto* cb = app.add_subcommand("bounds", "Print min/max/random time totals for a corpus");
  cb->add_option("--corpus", bounds_args.corpus, "Corpus with timing records")->required();
  cb->add_option("--cap", bounds_args.cap, "Timeout value in seconds");

  std::vector<const char*> argv;
  argv.push_back("cadorder");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (ci->parsed()) return cmd_ingest(ingest, out, err);
    if (cl->parsed()) return cmd_label(label, out, err);
    if (ct->parsed()) return cmd_train(train, out, err);
    if (ce->parsed()) return cmd_evaluate(evaluate, out, err);
    if (cp->parsed()) return cmd_predict(predict, out, err);
    if (cb->parsed()) return cmd_bounds(bounds_args, out, err);
  } catch (const BackendError& e) {
    err << "backend error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace cadorder
