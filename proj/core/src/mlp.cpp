#include "cadorder/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "cadorder/rng.hpp"

namespace cadorder {

namespace {

constexpr int kIn = kNumFeatures;
constexpr int kOut = kNumOrderings;

double activate(MLPConfig::Activation a, double z) {
  switch (a) {
    case MLPConfig::Activation::Identity: return z;
    case MLPConfig::Activation::Logistic: return 1.0 / (1.0 + std::exp(-z));
    case MLPConfig::Activation::Tanh: return std::tanh(z);
    case MLPConfig::Activation::Relu: return z > 0 ? z : 0;
  }
  return z;
}

// Derivative in terms of the activation output.
double activate_grad(MLPConfig::Activation a, double out, double z) {
  switch (a) {
    case MLPConfig::Activation::Identity: return 1.0;
    case MLPConfig::Activation::Logistic: return out * (1.0 - out);
    case MLPConfig::Activation::Tanh: return 1.0 - out * out;
    case MLPConfig::Activation::Relu: return z > 0 ? 1.0 : 0.0;
  }
  return 1.0;
}

struct ParamView {
  // Offsets into the flat parameter vector.
  int hidden;
  size_t w1, b1, w2, b2, total;
  explicit ParamView(int h)
      : hidden(h),
        w1(0),
        b1(static_cast<size_t>(h) * kIn),
        w2(b1 + static_cast<size_t>(h)),
        b2(w2 + static_cast<size_t>(kOut) * static_cast<size_t>(h)),
        total(b2 + kOut) {}
};

}  // namespace

size_t MLPModel::param_count(const MLPConfig& config) { return ParamView(config.hidden_size).total; }

std::vector<double> MLPModel::initial_params(const MLPConfig& config, uint64_t seed) {
  ParamView pv(config.hidden_size);
  std::vector<double> p(pv.total, 0.0);
  Rng rng(seed);
  double s1 = 1.0 / std::sqrt(static_cast<double>(kIn));
  double s2 = 1.0 / std::sqrt(static_cast<double>(config.hidden_size));
  for (size_t i = pv.w1; i < pv.b1; ++i) p[i] = rng.uniform(-s1, s1);
  for (size_t i = pv.w2; i < pv.b2; ++i) p[i] = rng.uniform(-s2, s2);
  return p;
}

double MLPModel::loss_and_grad(const MLPConfig& config, const Dataset& data,
                               const std::vector<double>& params, std::vector<double>* grad) {
  const int H = config.hidden_size;
  ParamView pv(H);
  if (params.size() != pv.total) throw std::invalid_argument("mlp: parameter size mismatch");
  if (grad) grad->assign(pv.total, 0.0);

  const double n = static_cast<double>(data.size());
  double loss = 0;
  std::vector<double> z(static_cast<size_t>(H)), h(static_cast<size_t>(H));
  std::array<double, kOut> logits{}, prob{};

  for (size_t row = 0; row < data.size(); ++row) {
    const FeatureVector& x = data.features[row];
    const int y = data.labels[row];

    for (int j = 0; j < H; ++j) {
      double acc = params[pv.b1 + static_cast<size_t>(j)];
      const size_t base = pv.w1 + static_cast<size_t>(j) * kIn;
      for (int i = 0; i < kIn; ++i) acc += params[base + static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
      z[static_cast<size_t>(j)] = acc;
      h[static_cast<size_t>(j)] = activate(config.activation, acc);
    }
    for (int c = 0; c < kOut; ++c) {
      double acc = params[pv.b2 + static_cast<size_t>(c)];
      const size_t base = pv.w2 + static_cast<size_t>(c) * static_cast<size_t>(H);
      for (int j = 0; j < H; ++j) acc += params[base + static_cast<size_t>(j)] * h[static_cast<size_t>(j)];
      logits[static_cast<size_t>(c)] = acc;
    }
    double zmax = *std::max_element(logits.begin(), logits.end());
    double zsum = 0;
    for (int c = 0; c < kOut; ++c) {
      prob[static_cast<size_t>(c)] = std::exp(logits[static_cast<size_t>(c)] - zmax);
      zsum += prob[static_cast<size_t>(c)];
    }
    for (auto& p : prob) p /= zsum;
    loss -= std::log(std::max(prob[static_cast<size_t>(y)], 1e-300)) / n;

    if (!grad) continue;
    std::array<double, kOut> dlogit = prob;
    dlogit[static_cast<size_t>(y)] -= 1.0;
    for (auto& d : dlogit) d /= n;

    std::vector<double> dh(static_cast<size_t>(H), 0.0);
    for (int c = 0; c < kOut; ++c) {
      const size_t base = pv.w2 + static_cast<size_t>(c) * static_cast<size_t>(H);
      (*grad)[pv.b2 + static_cast<size_t>(c)] += dlogit[static_cast<size_t>(c)];
      for (int j = 0; j < H; ++j) {
        (*grad)[base + static_cast<size_t>(j)] += dlogit[static_cast<size_t>(c)] * h[static_cast<size_t>(j)];
        dh[static_cast<size_t>(j)] += dlogit[static_cast<size_t>(c)] * params[base + static_cast<size_t>(j)];
      }
    }
    for (int j = 0; j < H; ++j) {
      double dz = dh[static_cast<size_t>(j)] *
                  activate_grad(config.activation, h[static_cast<size_t>(j)], z[static_cast<size_t>(j)]);
      (*grad)[pv.b1 + static_cast<size_t>(j)] += dz;
      const size_t base = pv.w1 + static_cast<size_t>(j) * kIn;
      for (int i = 0; i < kIn; ++i) (*grad)[base + static_cast<size_t>(i)] += dz * x[static_cast<size_t>(i)];
    }
  }

  // L2 on weights (not biases).
  auto reg_block = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      loss += 0.5 * config.alpha * params[i] * params[i];
      if (grad) (*grad)[i] += config.alpha * params[i];
    }
  };
  reg_block(pv.w1, pv.b1);
  reg_block(pv.w2, pv.b2);
  return loss;
}

MLPModel MLPModel::fit(const MLPConfig& config, const Dataset& data, uint64_t seed) {
  data.validate();
  for (const auto& row : data.features)
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("mlp: non-finite feature");
  if (config.hidden_size < 1) throw std::invalid_argument("mlp: hidden_size must be >= 1");
  if (config.alpha < 0) throw std::invalid_argument("mlp: alpha must be >= 0");

  std::vector<double> x = initial_params(config, seed);
  const size_t dim = x.size();
  std::vector<double> g;
  double fx = loss_and_grad(config, data, x, &g);

  // L-BFGS two-loop recursion, memory 10, Armijo backtracking.
  const size_t memory = 10;
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;
  bool converged = false;

  for (int iter = 0; iter < config.max_iter; ++iter) {
    double gnorm = 0;
    for (double v : g) gnorm = std::max(gnorm, std::abs(v));
    if (gnorm < 1e-10) {
      converged = true;
      break;
    }

    // Search direction from gradient history.
    std::vector<double> q = g;
    std::vector<double> alpha_coef(s_hist.size());
    for (size_t i = s_hist.size(); i-- > 0;) {
      double a = 0;
      for (size_t j = 0; j < dim; ++j) a += s_hist[i][j] * q[j];
      a *= rho_hist[i];
      alpha_coef[i] = a;
      for (size_t j = 0; j < dim; ++j) q[j] -= a * y_hist[i][j];
    }
    if (!s_hist.empty()) {
      double sy = 1.0 / rho_hist.back();
      double yy = 0;
      for (size_t j = 0; j < dim; ++j) yy += y_hist.back()[j] * y_hist.back()[j];
      double scale = sy / yy;
      for (auto& v : q) v *= scale;
    }
    for (size_t i = 0; i < s_hist.size(); ++i) {
      double b = 0;
      for (size_t j = 0; j < dim; ++j) b += y_hist[i][j] * q[j];
      b *= rho_hist[i];
      for (size_t j = 0; j < dim; ++j) q[j] += s_hist[i][j] * (alpha_coef[i] - b);
    }
    // q is now an ascent-direction estimate; step along -q.
    double dir_dot_grad = 0;
    for (size_t j = 0; j < dim; ++j) dir_dot_grad -= q[j] * g[j];
    if (dir_dot_grad >= 0) {  // not a descent direction; fall back to -g
      q = g;
      dir_dot_grad = 0;
      for (size_t j = 0; j < dim; ++j) dir_dot_grad -= g[j] * g[j];
    }

    double step = 1.0;
    std::vector<double> x_new(dim), g_new;
    double fx_new = fx;
    bool accepted = false;
    for (int ls = 0; ls < 50; ++ls) {
      for (size_t j = 0; j < dim; ++j) x_new[j] = x[j] - step * q[j];
      fx_new = loss_and_grad(config, data, x_new, nullptr);
      if (fx_new <= fx + 1e-4 * step * dir_dot_grad) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no acceptable step; flagged below via tolerance

    g_new.clear();
    loss_and_grad(config, data, x_new, &g_new);

    std::vector<double> s(dim), yv(dim);
    double sy = 0;
    for (size_t j = 0; j < dim; ++j) {
      s[j] = x_new[j] - x[j];
      yv[j] = g_new[j] - g[j];
      sy += s[j] * yv[j];
    }
    if (sy > 1e-12) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(yv));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }

    double decrease = fx - fx_new;
    x = std::move(x_new);
    g = std::move(g_new);
    fx = fx_new;
    if (decrease <= config.tol * std::max(1.0, std::abs(fx))) {
      converged = true;
      break;
    }
  }

  MLPModel model;
  model.config_ = config;
  model.params_ = std::move(x);
  model.converged_ = converged;
  return model;
}

std::array<double, kNumOrderings> MLPModel::scores(const FeatureVector& v) const {
  const int H = config_.hidden_size;
  ParamView pv(H);
  std::array<double, kNumOrderings> out{};
  std::vector<double> h(static_cast<size_t>(H));
  for (int j = 0; j < H; ++j) {
    double acc = params_[pv.b1 + static_cast<size_t>(j)];
    const size_t base = pv.w1 + static_cast<size_t>(j) * kIn;
    for (int i = 0; i < kIn; ++i) acc += params_[base + static_cast<size_t>(i)] * v[static_cast<size_t>(i)];
    h[static_cast<size_t>(j)] = activate(config_.activation, acc);
  }
  for (int c = 0; c < kOut; ++c) {
    double acc = params_[pv.b2 + static_cast<size_t>(c)];
    const size_t base = pv.w2 + static_cast<size_t>(c) * static_cast<size_t>(H);
    for (int j = 0; j < H; ++j) acc += params_[base + static_cast<size_t>(j)] * h[static_cast<size_t>(j)];
    out[static_cast<size_t>(c)] = acc;
  }
  return out;
}

int MLPModel::predict(const FeatureVector& v) const {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("mlp: non-finite feature");
  auto sc = scores(v);
  int best = 0;
  for (int c = 1; c < kOut; ++c)
    if (sc[static_cast<size_t>(c)] > sc[static_cast<size_t>(best)]) best = c;
  return best;
}

void MLPModel::set_state(MLPConfig config, std::vector<double> params, bool converged) {
  if (params.size() != param_count(config)) throw std::invalid_argument("mlp: parameter size mismatch");
  config_ = config;
  params_ = std::move(params);
  converged_ = converged;
}

}  // namespace cadorder
