#ifndef BCPP_VERIFY_HPP
#define BCPP_VERIFY_HPP

#include "bcpp/core.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bcpp {

/// Load of every occupied bin. A bin is occupied when at least one bar
/// falls into it, even a bar of height 0.
struct BinLoadReport {
  std::map<int, Rational> loads;

  std::size_t used_bins() const { return loads.size(); }
};

struct BinViolation {
  int bin;
  Rational load;
};

struct FeasibilityReport {
  BinLoadReport report;
  std::vector<BinViolation> violations;

  bool feasible() const { return violations.empty(); }
};

namespace detail {

inline void check_assignment_shape(const Instance& instance, const Packing& packing) {
  if (packing.size() != instance.size())
    throw PreconditionError("packing has " + std::to_string(packing.size()) +
                            " entries for " + std::to_string(instance.size()) + " charts");
  const int max_bin = 2 * static_cast<int>(instance.size()) - 1;
  for (std::size_t i = 0; i < packing.size(); ++i) {
    if (packing[i] < 1 || packing[i] > max_bin)
      throw PreconditionError("chart " + std::to_string(i) + " starts in bin " +
                              std::to_string(packing[i]) + ", outside [1, " +
                              std::to_string(max_bin) + "]");
  }
}

inline void check_chart_index(const Instance& instance, std::size_t i) {
  if (i >= instance.size())
    throw PreconditionError("chart index " + std::to_string(i) + " out of range");
}

}  // namespace detail

/// Sums every bin's bars exactly and lists each bin whose load exceeds 1.
inline FeasibilityReport check_feasible(const Instance& instance, const Packing& packing) {
  detail::check_assignment_shape(instance, packing);
  FeasibilityReport out;
  auto& loads = out.report.loads;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    loads[packing[i]] += instance[i].a;
    loads[packing[i] + 1] += instance[i].b;
  }
  for (const auto& [bin, load] : loads)
    if (load > 1) out.violations.push_back({bin, load});
  return out;
}

/// Number of occupied bins. Empty gap bins are not counted.
inline std::size_t packing_length(const Instance& instance, const Packing& packing) {
  detail::check_assignment_shape(instance, packing);
  std::set<int> used;
  for (int start : packing.assignment) {
    used.insert(start);
    used.insert(start + 1);
  }
  return used.size();
}

/// True when no two charts share a start bin.
inline bool is_linearly_ordered(const Packing& packing) {
  std::set<int> starts(packing.assignment.begin(), packing.assignment.end());
  return starts.size() == packing.size();
}

/// Every pair of charts sharing a start bin, as (smaller, larger) index.
inline std::vector<std::pair<std::size_t, std::size_t>> shared_starts(const Packing& packing) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < packing.size(); ++i)
    for (std::size_t j = i + 1; j < packing.size(); ++j)
      if (packing[i] == packing[j]) out.emplace_back(i, j);
  return out;
}

/// Splits a linearly ordered packing into maximal runs of charts starting
/// in consecutive bins.
inline ChainDecomposition chain_decomposition(const Instance& instance, const Packing& packing) {
  detail::check_assignment_shape(instance, packing);
  if (!is_linearly_ordered(packing))
    throw PreconditionError("packing is not linearly ordered");

  std::vector<std::size_t> order(packing.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return packing[x] < packing[y]; });

  ChainDecomposition out;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t chart = order[pos];
    if (pos == 0 || packing[order[pos - 1]] + 1 != packing[chart])
      out.chains.emplace_back();
    out.chains.back().push_back(chart);
  }
  return out;
}

/// Turns the pair {i, j} sharing bin k into a staircase: the chart with the
/// big first bar keeps bin k, the other starts at k + 1, and every chart
/// starting at k + 1 or later moves one bin to the right. Length grows by
/// exactly one.
inline Packing split_pair(const Instance& instance, const Packing& packing, std::size_t i,
                          std::size_t j) {
  detail::check_assignment_shape(instance, packing);
  detail::check_chart_index(instance, i);
  detail::check_chart_index(instance, j);
  if (i == j || packing[i] != packing[j])
    throw PreconditionError("charts " + std::to_string(i) + " and " + std::to_string(j) +
                            " do not form a pair");
  const int bin = packing[i];
  for (std::size_t x = 0; x < packing.size(); ++x)
    if (x != i && x != j && packing[x] == bin)
      throw PreconditionError("bin " + std::to_string(bin) + " is shared by more than two charts");

  if (!(instance[i].a > one_half() && instance[j].b > one_half())) std::swap(i, j);
  if (!(instance[i].a > one_half() && instance[j].b > one_half()))
    throw PreconditionError("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") has no big-first/big-second orientation");

  Packing out = packing;
  for (auto& start : out.assignment)
    if (start > bin) ++start;
  out.assignment[j] = bin + 1;
  detail::check_assignment_shape(instance, out);
  return out;
}

enum class Bound { opt_plus_one, four_thirds };

/// opt_plus_one: length <= opt + 1. four_thirds: 3 * length <= 4 * opt + 2.
inline bool check_bound(std::int64_t length, std::int64_t opt, Bound bound) {
  switch (bound) {
    case Bound::opt_plus_one: return length <= opt + 1;
    case Bound::four_thirds: return 3 * length <= 4 * opt + 2;
  }
  return false;
}

}  // namespace bcpp

#endif  // BCPP_VERIFY_HPP
