#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cadorder/features.hpp"
#include "cadorder/heuristics.hpp"
#include "cadorder/knn.hpp"
#include "cadorder/poly.hpp"
#include "cadorder/problem.hpp"
#include "cadorder/projection.hpp"

namespace {

using namespace cadorder;

Polynomial random_poly(std::mt19937_64& gen, int max_terms, int max_td) {
  std::vector<Monomial> terms;
  int n = 1 + static_cast<int>(gen() % static_cast<uint64_t>(max_terms));
  for (int i = 0; i < n; ++i) {
    Monomial m;
    m.exponents.assign(3, 0);
    int budget = static_cast<int>(gen() % static_cast<uint64_t>(max_td + 1));
    for (auto& e : m.exponents) {
      e = static_cast<int>(gen() % static_cast<uint64_t>(budget + 1));
      budget -= e;
    }
    int c = static_cast<int>(gen() % 9) - 4;
    m.coeff = c == 0 ? 1 : c;
    terms.push_back(m);
  }
  return Polynomial(3, terms);
}

Problem random_problem(std::mt19937_64& gen, int max_polys, int max_terms, int max_td) {
  std::vector<Polynomial> polys;
  int n = 1 + static_cast<int>(gen() % static_cast<uint64_t>(max_polys));
  for (int i = 0; i < n; ++i) {
    Polynomial p = random_poly(gen, max_terms, max_td);
    if (!p.is_zero()) polys.push_back(p);
  }
  if (polys.empty()) polys.push_back(Polynomial::variable(0));
  return make_problem("bench", 3, std::move(polys));
}

void BM_Projection(benchmark::State& state) {
  std::mt19937_64 gen(1);
  Problem pr = random_problem(gen, 4, 4, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(projection_levels(pr, OrderingId(0)));
}
BENCHMARK(BM_Projection)->Arg(2)->Arg(3)->Arg(4);

void BM_Sotd(benchmark::State& state) {
  std::mt19937_64 gen(2);
  Problem pr = random_problem(gen, 4, 4, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sotd(pr));
}
BENCHMARK(BM_Sotd)->Arg(2)->Arg(3);

void BM_Brown(benchmark::State& state) {
  std::mt19937_64 gen(3);
  Problem pr = random_problem(gen, 5, 5, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(brown(pr));
}
BENCHMARK(BM_Brown);

void BM_Features(benchmark::State& state) {
  std::mt19937_64 gen(4);
  Problem pr = random_problem(gen, 5, 5, 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(extract_features(pr));
}
BENCHMARK(BM_Features);

Dataset random_dataset(size_t n, uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> coord(-3, 3);
  Dataset d;
  for (size_t i = 0; i < n; ++i) {
    FeatureVector v{};
    for (auto& x : v) x = coord(gen);
    d.features.push_back(v);
    d.labels.push_back(static_cast<int>(gen() % kNumOrderings));
  }
  return d;
}

void bench_knn(benchmark::State& state, KNNConfig::Algorithm algo) {
  Dataset d = random_dataset(static_cast<size_t>(state.range(0)), 5);
  KNNConfig cfg;
  cfg.k = 5;
  cfg.algorithm = algo;
  KNNModel model(cfg, d);
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> coord(-3, 3);
  FeatureVector q{};
  for (auto _ : state) {
    for (auto& x : q) x = coord(gen);
    benchmark::DoNotOptimize(model.predict(q));
  }
}

void BM_KnnBrute(benchmark::State& state) { bench_knn(state, KNNConfig::Algorithm::Brute); }
void BM_KnnBallTree(benchmark::State& state) { bench_knn(state, KNNConfig::Algorithm::BallTree); }
BENCHMARK(BM_KnnBrute)->Arg(1000)->Arg(5000);
BENCHMARK(BM_KnnBallTree)->Arg(1000)->Arg(5000);

void BM_Resultant(benchmark::State& state) {
  std::mt19937_64 gen(7);
  Polynomial p = random_poly(gen, 4, static_cast<int>(state.range(0)));
  Polynomial q = random_poly(gen, 4, static_cast<int>(state.range(0)));
  if (p.degree_in(0) < 1) p = p * Polynomial::variable(0);
  if (q.degree_in(0) < 1) q = q * Polynomial::variable(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(resultant(p, q, 0));
}
BENCHMARK(BM_Resultant)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
