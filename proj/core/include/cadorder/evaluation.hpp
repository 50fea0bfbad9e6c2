// Tie-aware accuracy and computing-time metrics, totals bounds, the
// percentage-over-minimum histogram, and rendered comparison tables.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cadorder/labeling.hpp"
#include "cadorder/ordering.hpp"

namespace cadorder {

inline constexpr double kDefaultTimeCap = 128.0;

struct MethodPrediction {
  std::string name;
  std::vector<OrderingSet> predictions;  // one per problem, aligned with targets
};

// Mean over problems of |prediction ∩ target| / |prediction|, as a percent.
double accuracy(const std::vector<OrderingSet>& predictions, const std::vector<OrderingSet>& targets);

// Timeout entries are valued at the cap.
double timing_value(const TimingRecord& record, int ordering, double cap = kDefaultTimeCap);

// Per problem, mean capped time over the predicted orderings; summed.
double method_time(const std::vector<OrderingSet>& predictions,
                   const std::vector<TimingRecord>& timings, double cap = kDefaultTimeCap);

struct Bounds {
  double min_total = 0;     // optimal ordering every time
  double max_total = 0;     // worst ordering every time
  double random_total = 0;  // expectation of a uniform random choice
};

Bounds bounds(const std::vector<TimingRecord>& timings, double cap = kDefaultTimeCap);

struct Histogram {
  double bin_percent = 1.0;
  std::map<int, size_t> counts;  // bin index -> problem count
  size_t skipped = 0;            // zero-minimum problems, reported and excluded
};

Histogram over_min_histogram(const std::vector<OrderingSet>& predictions,
                             const std::vector<TimingRecord>& timings, double bin_percent = 1.0,
                             double cap = kDefaultTimeCap);

struct EvaluationReport {
  std::vector<std::string> methods;  // canonical column order
  std::vector<double> accuracy_percent;
  std::vector<double> total_time;
  Bounds time_bounds;
  std::vector<Histogram> histograms;  // aligned with methods

  std::string to_csv() const;       // full precision
  std::string to_markdown() const;  // one decimal place
  std::string histogram_csv() const;
};

// Columns sorted canonically: DT, KNN, MLP, SVM, Brown, sotd, random, then
// extras in the given order.
EvaluationReport make_report(const std::vector<MethodPrediction>& methods,
                             const std::vector<OrderingSet>& targets,
                             const std::vector<TimingRecord>& timings, double cap = kDefaultTimeCap,
                             double bin_percent = 1.0);

}  // namespace cadorder
