#include "cadorder/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace cadorder {

double accuracy(const std::vector<OrderingSet>& predictions, const std::vector<OrderingSet>& targets) {
  if (predictions.size() != targets.size() || predictions.empty())
    throw std::invalid_argument("accuracy: prediction/target misalignment");
  double sum = 0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    size_t hits = 0;
    for (int o : predictions[i].indices())
      if (targets[i].contains(o)) ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(predictions[i].size());
  }
  return 100.0 * sum / static_cast<double>(predictions.size());
}

double timing_value(const TimingRecord& record, int ordering, double cap) {
  const auto& t = record.times[static_cast<size_t>(ordering)];
  return t ? *t : cap;
}

double method_time(const std::vector<OrderingSet>& predictions,
                   const std::vector<TimingRecord>& timings, double cap) {
  if (predictions.size() != timings.size() || predictions.empty())
    throw std::invalid_argument("method_time: prediction/timing misalignment");
  double total = 0;
  for (size_t i = 0; i < predictions.size(); ++i) {
    double sum = 0;
    for (int o : predictions[i].indices()) sum += timing_value(timings[i], o, cap);
    total += sum / static_cast<double>(predictions[i].size());
  }
  return total;
}

Bounds bounds(const std::vector<TimingRecord>& timings, double cap) {
  Bounds b;
  for (const auto& record : timings) {
    double lo = timing_value(record, 0, cap), hi = lo, sum = 0;
    for (int o = 0; o < kNumOrderings; ++o) {
      double t = timing_value(record, o, cap);
      lo = std::min(lo, t);
      hi = std::max(hi, t);
      sum += t;
    }
    b.min_total += lo;
    b.max_total += hi;
    b.random_total += sum / kNumOrderings;
  }
  return b;
}

Histogram over_min_histogram(const std::vector<OrderingSet>& predictions,
                             const std::vector<TimingRecord>& timings, double bin_percent,
                             double cap) {
  if (predictions.size() != timings.size())
    throw std::invalid_argument("histogram: prediction/timing misalignment");
  if (bin_percent <= 0) throw std::invalid_argument("histogram: bin size must be positive");
  Histogram h;
  h.bin_percent = bin_percent;
  for (size_t i = 0; i < predictions.size(); ++i) {
    double lo = timing_value(timings[i], 0, cap);
    for (int o = 1; o < kNumOrderings; ++o) lo = std::min(lo, timing_value(timings[i], o, cap));
    if (lo <= 0) {
      ++h.skipped;
      continue;
    }
    double sum = 0;
    for (int o : predictions[i].indices()) sum += timing_value(timings[i], o, cap);
    double t = sum / static_cast<double>(predictions[i].size());
    double over = 100.0 * (t - lo) / lo;
    ++h.counts[static_cast<int>(std::floor(over / bin_percent))];
  }
  return h;
}

namespace {

int method_rank(const std::string& name) {
  static const std::vector<std::string> canonical = {"dt",    "knn",  "mlp",   "svm",
                                                     "brown", "sotd", "random"};
  for (size_t i = 0; i < canonical.size(); ++i)
    if (name == canonical[i]) return static_cast<int>(i);
  return static_cast<int>(canonical.size());
}

}  // namespace

EvaluationReport make_report(const std::vector<MethodPrediction>& methods,
                             const std::vector<OrderingSet>& targets,
                             const std::vector<TimingRecord>& timings, double cap,
                             double bin_percent) {
  if (methods.empty()) throw std::invalid_argument("report: need at least one method");
  std::vector<size_t> order(methods.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return method_rank(methods[a].name) < method_rank(methods[b].name);
  });

  EvaluationReport report;
  report.time_bounds = bounds(timings, cap);
  for (size_t i : order) {
    const auto& m = methods[i];
    report.methods.push_back(m.name);
    report.accuracy_percent.push_back(accuracy(m.predictions, targets));
    report.total_time.push_back(method_time(m.predictions, timings, cap));
    report.histograms.push_back(over_min_histogram(m.predictions, timings, bin_percent, cap));
  }
  return report;
}

std::string EvaluationReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "metric";
  for (const auto& m : methods) os << "," << m;
  os << "\naccuracy_percent";
  for (double a : accuracy_percent) os << "," << a;
  os << "\ntotal_time_seconds";
  for (double t : total_time) os << "," << t;
  os << "\n";
  os << "bounds_min_total," << time_bounds.min_total << "\n";
  os << "bounds_max_total," << time_bounds.max_total << "\n";
  os << "bounds_random_total," << time_bounds.random_total << "\n";
  return os.str();
}

std::string EvaluationReport::to_markdown() const {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1);
  os << "| Metric |";
  for (const auto& m : methods) os << " " << m << " |";
  os << "\n|---|";
  for (size_t i = 0; i < methods.size(); ++i) os << "---|";
  os << "\n| Accuracy (%) |";
  for (double a : accuracy_percent) os << " " << a << " |";
  os << "\n| Computation Time (s) |";
  for (double t : total_time) os << " " << t << " |";
  os << "\n\nBounds: minimum " << time_bounds.min_total << " s, maximum " << time_bounds.max_total
     << " s, random " << time_bounds.random_total << " s\n";
  return os.str();
}

std::string EvaluationReport::histogram_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "bin_lower_percent";
  for (const auto& m : methods) os << "," << m;
  os << "\n";
  std::vector<int> bins;
  for (const auto& h : histograms)
    for (const auto& [bin, count] : h.counts) bins.push_back(bin);
  std::sort(bins.begin(), bins.end());
  bins.erase(std::unique(bins.begin(), bins.end()), bins.end());
  double width = histograms.empty() ? 1.0 : histograms.front().bin_percent;
  for (int bin : bins) {
    os << bin * width;
    for (const auto& h : histograms) {
      auto it = h.counts.find(bin);
      os << "," << (it == h.counts.end() ? 0 : it->second);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cadorder
