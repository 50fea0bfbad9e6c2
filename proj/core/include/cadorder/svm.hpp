// Soft-margin SVM with RBF kernel K(x,l) = exp(-gamma*||x-l||^2), trained
// by sequential minimal optimization on each binary dual subproblem and
// combined one-vs-one with vote counting.

#pragma once

#include <vector>

#include "cadorder/dataset.hpp"

namespace cadorder {

struct SVMConfig {
  double C = 316.0;
  double gamma = 0.08;
  double tol = 0.0316;  // KKT violation stopping threshold
  int max_passes = 200;
};

double rbf_kernel(double gamma, const FeatureVector& a, const FeatureVector& b);

// One binary subproblem: labels in {-1,+1}, dual variables bounded by C.
struct BinarySvm {
  std::vector<double> alpha;  // one per training point, in [0, C]
  double bias = 0;
  bool converged = false;
  // Only points with alpha > 0 are kept for prediction.
  std::vector<FeatureVector> support_vectors;
  std::vector<double> support_coef;  // alpha_i * y_i

  double decision(double gamma, const FeatureVector& x) const;
};

BinarySvm train_binary_svm(const SVMConfig& config, const std::vector<FeatureVector>& x,
                           const std::vector<int>& y);

// Largest KKT violation of the dual solution; the trained model satisfies
// violation <= tol.
double max_kkt_violation(const SVMConfig& config, const std::vector<FeatureVector>& x,
                         const std::vector<int>& y, const BinarySvm& svm);

class SVMModel {
 public:
  struct Pair {
    int class_lo = 0;
    int class_hi = 0;
    BinarySvm svm;
  };

  SVMModel() = default;
  static SVMModel fit(const SVMConfig& config, const Dataset& data);

  // One-vs-one vote count; ties break to the lowest label.
  int predict(const FeatureVector& v) const;

  bool converged() const { return converged_; }
  const SVMConfig& config() const { return config_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  void set_state(SVMConfig config, std::vector<Pair> pairs, bool converged);

 private:
  SVMConfig config_;
  std::vector<Pair> pairs_;
  bool converged_ = true;
};

}  // namespace cadorder
