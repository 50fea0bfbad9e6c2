// The doubling-time-limit labeling protocol: run all 6 orderings at the
// current limit, double and repeat while everything times out, stop at the
// first limit where at least one ordering completes.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cadorder/backend.hpp"
#include "cadorder/features.hpp"
#include "cadorder/ordering.hpp"
#include "cadorder/problem.hpp"

namespace cadorder {

struct TimingRecord {
  std::string problem_id;
  // One entry per ordering index; nullopt records a TIMEOUT.
  std::array<std::optional<double>, kNumOrderings> times{};
  double limit_used = 0;

  bool has_finite() const {
    for (const auto& t : times)
      if (t) return true;
    return false;
  }
};

struct LabeledProblem {
  Problem problem;
  FeatureVector features{};
  OrderingSet target_set{std::vector<int>{0}};  // all time-minimizing orderings
  OrderingId target{0};                         // lowest index in target_set
  TimingRecord timings;
};

inline constexpr double kDefaultInitialLimit = 4.0;
inline constexpr double kDefaultMaxLimit = 128.0;

// Returns nullopt (UNLABELED) when every ordering still times out at the
// largest limit <= max_limit.  limits_tried, when given, receives the
// doubling schedule actually visited.  Backend crashes throw BackendError.
std::optional<LabeledProblem> label_problem(CadBackend& backend, const Problem& problem,
                                            double initial_limit = kDefaultInitialLimit,
                                            double max_limit = kDefaultMaxLimit,
                                            std::vector<double>* limits_tried = nullptr);

// Test-side protocol: every ordering once at one fixed limit.
TimingRecord time_all_test(CadBackend& backend, const Problem& problem,
                           double limit = kDefaultMaxLimit);

// Time-minimizing orderings among the finite entries; empty optional when
// everything timed out.
std::optional<OrderingSet> argmin_orderings(const TimingRecord& record);

// Seeded shuffle then cut; train size = round(ratio * n).  Both halves are
// returned in ascending index order.
std::pair<std::vector<size_t>, std::vector<size_t>> split_indices(size_t n, double ratio,
                                                                  uint64_t seed);

}  // namespace cadorder
