// Brute-force reference oracles used only by the tests. They share no code
// path with the solvers they check.
#ifndef BCPP_TESTS_ORACLES_HPP
#define BCPP_TESTS_ORACLES_HPP

#include "bcpp/core.hpp"
#include "bcpp/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace bcpp::testing {

/// Maximum matching size by recursion on the lowest unmatched vertex.
inline std::size_t brute_force_matching(const CompatibilityGraph& g) {
  const std::size_t n = g.vertex_count();
  std::map<std::uint32_t, std::size_t> memo;
  auto best = [&](auto&& self, std::uint32_t free) -> std::size_t {
    if (free == 0) return 0;
    if (auto it = memo.find(free); it != memo.end()) return it->second;
    std::size_t v = 0;
    while (!(free >> v & 1)) ++v;
    const std::uint32_t rest = free & ~(1u << v);
    std::size_t result = self(self, rest);
    for (std::size_t u = 0; u < n; ++u)
      if ((rest >> u & 1) && g.has_edge(v, u))
        result = std::max(result, 1 + self(self, rest & ~(1u << u)));
    memo[free] = result;
    return result;
  };
  return best(best, (std::uint32_t{1} << n) - 1);
}

/// Bins holding each bar, recomputed by listing bar heights bin by bin.
inline std::map<int, std::vector<Rational>> materialize_bins(const Instance& instance,
                                                             const Packing& packing) {
  std::map<int, std::vector<Rational>> bins;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    bins[packing[i]].push_back(instance[i].a);
    bins[packing[i] + 1].push_back(instance[i].b);
  }
  return bins;
}

inline bool materialized_feasible(const Instance& instance, const Packing& packing) {
  for (const auto& [bin, bars] : materialize_bins(instance, packing)) {
    Rational total = 0;
    for (const auto& h : bars) total += h;
    if (total > 1) return false;
  }
  return true;
}

/// Minimum length over every assignment p: charts -> [1, 2n-1], enumerated
/// chart by chart on heights scaled to a common integer denominator.
/// Usable up to n = 6.
inline std::size_t enumerate_opt(const Instance& instance) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt scale = 1;
  for (const auto& c : instance.charts())
    scale = boost::multiprecision::lcm(boost::multiprecision::lcm(scale, denominator(c.a)),
                                       denominator(c.b));
  std::vector<BigInt> a;
  std::vector<BigInt> b;
  for (const auto& c : instance.charts()) {
    a.push_back(numerator(c.a) * (scale / denominator(c.a)));
    b.push_back(numerator(c.b) * (scale / denominator(c.b)));
  }
  const bool small = scale < BigInt(std::int64_t{1} << 50);
  std::vector<std::int64_t> a64;
  std::vector<std::int64_t> b64;
  if (small) {
    for (const auto& v : a) a64.push_back(v.convert_to<std::int64_t>());
    for (const auto& v : b) b64.push_back(v.convert_to<std::int64_t>());
  }

  const int n = static_cast<int>(instance.size());
  const int bins = 2 * n;
  std::vector<BigInt> load(static_cast<std::size_t>(bins + 2), BigInt(0));
  std::vector<std::int64_t> load64(static_cast<std::size_t>(bins + 2), 0);
  std::vector<int> count(static_cast<std::size_t>(bins + 2), 0);
  const std::int64_t cap64 = small ? scale.convert_to<std::int64_t>() : 0;
  std::size_t best = 2 * instance.size();

  auto place = [&](int i, int k, int sign) {
    const auto u = static_cast<std::size_t>(i);
    if (small) {
      load64[k] += sign * a64[u];
      load64[k + 1] += sign * b64[u];
    } else {
      load[k] += sign * a[u];
      load[k + 1] += sign * b[u];
    }
  };
  auto fits = [&](int k) {
    if (small) return load64[k] <= cap64 && load64[k + 1] <= cap64;
    return load[k] <= scale && load[k + 1] <= scale;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::size_t used = 0;
      for (int k = 1; k <= bins; ++k) used += count[k] > 0;
      best = std::min(best, used);
      return;
    }
    for (int k = 1; k <= 2 * n - 1; ++k) {
      place(i, k, 1);
      if (fits(k)) {
        ++count[k];
        ++count[k + 1];
        self(self, i + 1);
        --count[k];
        --count[k + 1];
      }
      place(i, k, -1);
    }
  };
  rec(rec, 0);
  return best;
}

/// Fewest chains over all n! orderings (n <= 8).
inline std::size_t permutation_chain_opt(const Instance& instance) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::size_t best = instance.size();
  do {
    std::size_t chains = 1;
    for (std::size_t k = 1; k < order.size(); ++k)
      if (instance[order[k - 1]].b + instance[order[k]].a > 1) ++chains;
    best = std::min(best, chains);
  } while (std::next_permutation(order.begin(), order.end()));
  return instance.size() + best;
}

inline Instance make_instance(std::initializer_list<std::pair<const char*, const char*>> heights) {
  std::vector<BarChart> charts;
  for (const auto& [a, b] : heights) charts.push_back({parse_rational(a), parse_rational(b)});
  return Instance(std::move(charts));
}

}  // namespace bcpp::testing

#endif  // BCPP_TESTS_ORACLES_HPP
