// One-hidden-layer perceptron classifier trained full-batch by L-BFGS on
// softmax cross-entropy with L2 weight decay.

#pragma once

#include <cstdint>
#include <vector>

#include "cadorder/dataset.hpp"

namespace cadorder {

struct MLPConfig {
  int hidden_size = 18;
  enum class Activation { Identity, Logistic, Tanh, Relu } activation = Activation::Tanh;
  double alpha = 5e-5;  // L2 regularization weight
  int max_iter = 400;
  double tol = 1e-8;  // relative loss-decrease stopping threshold
};

class MLPModel {
 public:
  MLPModel() = default;

  // Weight init is uniform in +-1/sqrt(fan_in), drawn deterministically
  // from the seed.
  static MLPModel fit(const MLPConfig& config, const Dataset& data, uint64_t seed);

  int predict(const FeatureVector& v) const;
  std::array<double, kNumOrderings> scores(const FeatureVector& v) const;

  bool converged() const { return converged_; }
  const MLPConfig& config() const { return config_; }
  const std::vector<double>& params() const { return params_; }
  void set_state(MLPConfig config, std::vector<double> params, bool converged);

  // Regularized loss and its analytic gradient at an arbitrary parameter
  // point; the finite-difference check drives this directly.
  static double loss_and_grad(const MLPConfig& config, const Dataset& data,
                              const std::vector<double>& params, std::vector<double>* grad);
  static size_t param_count(const MLPConfig& config);
  static std::vector<double> initial_params(const MLPConfig& config, uint64_t seed);

 private:
  MLPConfig config_;
  std::vector<double> params_;  // [W1 (H x F), b1 (H), W2 (C x H), b2 (C)]
  bool converged_ = false;
};

}  // namespace cadorder
