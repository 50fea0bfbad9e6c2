#include "cadorder/svm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cadorder {

double rbf_kernel(double gamma, const FeatureVector& a, const FeatureVector& b) {
  return std::exp(-gamma * squared_distance(a, b));
}

double BinarySvm::decision(double gamma, const FeatureVector& x) const {
  double f = bias;
  for (size_t i = 0; i < support_vectors.size(); ++i)
    f += support_coef[i] * rbf_kernel(gamma, support_vectors[i], x);
  return f;
}

namespace {

// Platt-style SMO over a precomputed kernel matrix.
struct Smo {
  const SVMConfig& cfg;
  const std::vector<FeatureVector>& x;
  const std::vector<int>& y;
  size_t n;
  std::vector<double> kernel;  // n x n
  std::vector<double> alpha;
  std::vector<double> error;  // f(x_i) - y_i
  double bias = 0;

  Smo(const SVMConfig& cfg, const std::vector<FeatureVector>& x, const std::vector<int>& y)
      : cfg(cfg), x(x), y(y), n(x.size()), alpha(n, 0.0), error(n) {
    kernel.resize(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i; j < n; ++j)
        kernel[i * n + j] = kernel[j * n + i] = rbf_kernel(cfg.gamma, x[i], x[j]);
    for (size_t i = 0; i < n; ++i) error[i] = -static_cast<double>(y[i]);  // f = 0 initially
  }

  double k(size_t i, size_t j) const { return kernel[i * n + j]; }

  bool take_step(size_t i1, size_t i2) {
    if (i1 == i2) return false;
    double a1 = alpha[i1], a2 = alpha[i2];
    double y1 = y[i1], y2 = y[i2];
    double e1 = error[i1], e2 = error[i2];
    double s = y1 * y2;
    double lo, hi;
    if (s < 0) {
      lo = std::max(0.0, a2 - a1);
      hi = std::min(cfg.C, cfg.C + a2 - a1);
    } else {
      lo = std::max(0.0, a1 + a2 - cfg.C);
      hi = std::min(cfg.C, a1 + a2);
    }
    if (lo >= hi) return false;
    // RBF kernels are PSD, so eta >= 0; eta == 0 means duplicate points.
    double eta = k(i1, i1) + k(i2, i2) - 2 * k(i1, i2);
    if (eta <= 0) return false;
    double a2_new = std::clamp(a2 + y2 * (e1 - e2) / eta, lo, hi);
    if (std::abs(a2_new - a2) < 1e-12 * (a2_new + a2 + 1e-12)) return false;
    double a1_new = std::clamp(a1 + s * (a2 - a2_new), 0.0, cfg.C);

    double b1 = bias - e1 - y1 * (a1_new - a1) * k(i1, i1) - y2 * (a2_new - a2) * k(i1, i2);
    double b2 = bias - e2 - y1 * (a1_new - a1) * k(i1, i2) - y2 * (a2_new - a2) * k(i2, i2);
    double b_new;
    if (a1_new > 0 && a1_new < cfg.C)
      b_new = b1;
    else if (a2_new > 0 && a2_new < cfg.C)
      b_new = b2;
    else
      b_new = (b1 + b2) / 2;

    double db = b_new - bias;
    for (size_t i = 0; i < n; ++i)
      error[i] += y1 * (a1_new - a1) * k(i1, i) + y2 * (a2_new - a2) * k(i2, i) + db;
    alpha[i1] = a1_new;
    alpha[i2] = a2_new;
    bias = b_new;
    return true;
  }

  bool examine(size_t i2) {
    double y2 = y[i2];
    double a2 = alpha[i2];
    double e2 = error[i2];
    double r2 = e2 * y2;
    if (!((r2 < -cfg.tol && a2 < cfg.C) || (r2 > cfg.tol && a2 > 0))) return false;

    // Second-choice heuristic: largest |e1 - e2| among non-bound points.
    size_t best = n;
    double best_gap = -1;
    for (size_t i = 0; i < n; ++i) {
      if (alpha[i] <= 0 || alpha[i] >= cfg.C) continue;
      double gap = std::abs(error[i] - e2);
      if (gap > best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    if (best < n && take_step(best, i2)) return true;
    for (size_t i = 0; i < n; ++i) {
      if (alpha[i] <= 0 || alpha[i] >= cfg.C) continue;
      if (take_step(i, i2)) return true;
    }
    for (size_t i = 0; i < n; ++i)
      if (take_step(i, i2)) return true;
    return false;
  }

  bool run() {
    int passes = 0;
    bool examine_all = true;
    int changed = 0;
    while (passes < cfg.max_passes) {
      changed = 0;
      if (examine_all) {
        for (size_t i = 0; i < n; ++i) changed += examine(i) ? 1 : 0;
      } else {
        for (size_t i = 0; i < n; ++i) {
          if (alpha[i] <= 0 || alpha[i] >= cfg.C) continue;
          changed += examine(i) ? 1 : 0;
        }
      }
      ++passes;
      if (examine_all) {
        if (changed == 0) return true;  // full sweep with no KKT violations
        examine_all = false;
      } else if (changed == 0) {
        examine_all = true;
      }
    }
    return false;
  }
};

}  // namespace

BinarySvm train_binary_svm(const SVMConfig& config, const std::vector<FeatureVector>& x,
                           const std::vector<int>& y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("svm: bad binary subproblem");
  if (config.C <= 0 || config.gamma <= 0 || config.tol <= 0)
    throw std::invalid_argument("svm: C, gamma, tol must be positive");
  Smo smo(config, x, y);
  bool ok = smo.run();
  BinarySvm out;
  out.alpha = smo.alpha;
  out.bias = smo.bias;
  out.converged = ok;
  for (size_t i = 0; i < x.size(); ++i) {
    if (smo.alpha[i] <= 0) continue;
    out.support_vectors.push_back(x[i]);
    out.support_coef.push_back(smo.alpha[i] * y[i]);
  }
  return out;
}

double max_kkt_violation(const SVMConfig& config, const std::vector<FeatureVector>& x,
                         const std::vector<int>& y, const BinarySvm& svm) {
  double worst = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double r = y[i] * svm.decision(config.gamma, x[i]) - 1.0;
    if (svm.alpha[i] < config.C) worst = std::max(worst, -r);  // should have margin >= 1
    if (svm.alpha[i] > 0) worst = std::max(worst, r);          // should sit on the margin or inside
  }
  return worst;
}

SVMModel SVMModel::fit(const SVMConfig& config, const Dataset& data) {
  data.validate();
  SVMModel model;
  model.config_ = config;
  model.converged_ = true;
  for (int lo = 0; lo < kNumOrderings; ++lo) {
    for (int hi = lo + 1; hi < kNumOrderings; ++hi) {
      std::vector<FeatureVector> x;
      std::vector<int> y;
      for (size_t i = 0; i < data.size(); ++i) {
        if (data.labels[i] == lo) {
          x.push_back(data.features[i]);
          y.push_back(+1);
        } else if (data.labels[i] == hi) {
          x.push_back(data.features[i]);
          y.push_back(-1);
        }
      }
      if (x.empty()) continue;
      bool has_pos = std::find(y.begin(), y.end(), +1) != y.end();
      bool has_neg = std::find(y.begin(), y.end(), -1) != y.end();
      if (!has_pos || !has_neg) continue;  // vote handled by remaining pairs
      Pair p;
      p.class_lo = lo;
      p.class_hi = hi;
      p.svm = train_binary_svm(config, x, y);
      model.converged_ = model.converged_ && p.svm.converged;
      model.pairs_.push_back(std::move(p));
    }
  }
  return model;
}

int SVMModel::predict(const FeatureVector& v) const {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("svm: non-finite feature");
  std::array<int, kNumOrderings> votes{};
  for (const auto& p : pairs_) {
    double d = p.svm.decision(config_.gamma, v);
    ++votes[static_cast<size_t>(d >= 0 ? p.class_lo : p.class_hi)];
  }
  int best = 0;
  for (int c = 1; c < kNumOrderings; ++c)
    if (votes[static_cast<size_t>(c)] > votes[static_cast<size_t>(best)]) best = c;
  return best;
}

void SVMModel::set_state(SVMConfig config, std::vector<Pair> pairs, bool converged) {
  config_ = config;
  pairs_ = std::move(pairs);
  converged_ = converged;
}

}  // namespace cadorder
