#include "cadorder/labeling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cadorder/rng.hpp"

namespace cadorder {

namespace {

TimingRecord run_all(CadBackend& backend, const Problem& problem, double limit) {
  TimingRecord record;
  record.problem_id = problem.id;
  record.limit_used = limit;
  for (int o = 0; o < kNumOrderings; ++o) {
    BackendResult r = backend.run(problem, OrderingId(o), limit);
    switch (r.status) {
      case BackendResult::Status::Ok:
        record.times[static_cast<size_t>(o)] = r.seconds;
        break;
      case BackendResult::Status::Timeout:
        break;
      case BackendResult::Status::Crash:
        throw BackendError("problem " + problem.id + ", ordering " + OrderingId(o).to_string() +
                           ": " + r.detail);
    }
  }
  return record;
}

}  // namespace

std::optional<OrderingSet> argmin_orderings(const TimingRecord& record) {
  double best = 0;
  bool any = false;
  for (const auto& t : record.times) {
    if (!t) continue;
    if (!any || *t < best) best = *t;
    any = true;
  }
  if (!any) return std::nullopt;
  std::vector<int> winners;
  for (int o = 0; o < kNumOrderings; ++o)
    if (record.times[static_cast<size_t>(o)] && *record.times[static_cast<size_t>(o)] == best)
      winners.push_back(o);
  return OrderingSet(winners);
}

std::optional<LabeledProblem> label_problem(CadBackend& backend, const Problem& problem,
                                            double initial_limit, double max_limit,
                                            std::vector<double>* limits_tried) {
  if (initial_limit <= 0) throw std::invalid_argument("labeling: initial_limit must be positive");
  if (limits_tried) limits_tried->clear();
  for (double limit = initial_limit; limit <= max_limit; limit *= 2) {
    if (limits_tried) limits_tried->push_back(limit);
    TimingRecord record = run_all(backend, problem, limit);
    auto targets = argmin_orderings(record);
    if (!targets) continue;
    LabeledProblem out;
    out.problem = problem;
    out.features = extract_features(problem);
    out.target_set = *targets;
    out.target = OrderingId(targets->lowest());
    out.timings = std::move(record);
    return out;
  }
  return std::nullopt;
}

TimingRecord time_all_test(CadBackend& backend, const Problem& problem, double limit) {
  return run_all(backend, problem, limit);
}

std::pair<std::vector<size_t>, std::vector<size_t>> split_indices(size_t n, double ratio,
                                                                  uint64_t seed) {
  if (n < 2) throw std::invalid_argument("split: need at least 2 problems");
  if (ratio <= 0 || ratio >= 1) throw std::invalid_argument("split: ratio must be in (0, 1)");
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  Rng rng(seed);
  rng.shuffle(idx);
  size_t train_size = static_cast<size_t>(std::llround(ratio * static_cast<double>(n)));
  train_size = std::clamp<size_t>(train_size, 1, n - 1);
  std::vector<size_t> train(idx.begin(), idx.begin() + static_cast<long>(train_size));
  std::vector<size_t> test(idx.begin() + static_cast<long>(train_size), idx.end());
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  return {std::move(train), std::move(test)};
}

}  // namespace cadorder
