#include "cadorder/heuristics.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <tuple>

namespace cadorder {

namespace {

// (overall degree, max total degree of containing terms, containing term count)
using BrownKey = std::tuple<int, int, long>;

BrownKey brown_key(const Problem& problem, int var) {
  int overall_degree = 0;
  int max_term_td = 0;
  long term_count = 0;
  for (const auto& p : problem.polynomials) {
    overall_degree = std::max(overall_degree, p.degree_in(var));
    for (const auto& t : p.terms()) {
      if (!t.contains(var)) continue;
      max_term_td = std::max(max_term_td, t.total_degree());
      ++term_count;
    }
  }
  return {overall_degree, max_term_td, term_count};
}

void brown_branch(const std::array<BrownKey, 3>& keys, std::vector<int>& remaining,
                  std::array<int, 3>& prefix, int depth, std::vector<int>& out) {
  if (remaining.empty()) {
    out.push_back(OrderingId::from_permutation(prefix).index());
    return;
  }
  BrownKey best = keys[static_cast<size_t>(remaining[0])];
  for (int v : remaining) best = std::min(best, keys[static_cast<size_t>(v)]);
  for (size_t i = 0; i < remaining.size(); ++i) {
    int v = remaining[i];
    if (keys[static_cast<size_t>(v)] != best) continue;
    prefix[static_cast<size_t>(depth)] = v;
    std::vector<int> rest = remaining;
    rest.erase(rest.begin() + static_cast<long>(i));
    brown_branch(keys, rest, prefix, depth + 1, out);
  }
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

OrderingSet brown(const Problem& problem) {
  std::array<BrownKey, 3> keys;
  for (int v = 0; v < 3; ++v) keys[static_cast<size_t>(v)] = brown_key(problem, v);
  std::vector<int> remaining = {0, 1, 2};
  std::array<int, 3> prefix{};
  std::vector<int> out;
  brown_branch(keys, remaining, prefix, 0, out);
  return OrderingSet(std::move(out));
}

long sotd_value(const Problem& problem, OrderingId ordering) {
  long sum = 0;
  for (const auto& level : projection_levels(problem, ordering).levels)
    for (const auto& p : level)
      for (const auto& t : p.terms()) sum += t.total_degree();
  return sum;
}

OrderingSet sotd(const Problem& problem) {
  std::array<long, kNumOrderings> values{};
  long best = std::numeric_limits<long>::max();
  for (int o = 0; o < kNumOrderings; ++o) {
    values[static_cast<size_t>(o)] = sotd_value(problem, OrderingId(o));
    best = std::min(best, values[static_cast<size_t>(o)]);
  }
  std::vector<int> argmin;
  for (int o = 0; o < kNumOrderings; ++o)
    if (values[static_cast<size_t>(o)] == best) argmin.push_back(o);
  return OrderingSet(std::move(argmin));
}

OrderingId random_choice(const Problem& problem, uint64_t seed) {
  uint64_t h = splitmix64(fnv1a(problem.id) ^ splitmix64(seed));
  return OrderingId(static_cast<int>(h % kNumOrderings));
}

}  // namespace cadorder
