#ifndef BCPP_EXACT_HPP
#define BCPP_EXACT_HPP

#include "bcpp/core.hpp"
#include "bcpp/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bcpp {

inline constexpr std::size_t kDefaultExactLimit = 10;
inline constexpr std::size_t kDefaultLinearLimit = 12;

/// Optimal packing with the pair counts of its witness: k2 bins start two
/// charts, k1 = n - 2 * k2 charts start alone.
struct ExactResult {
  std::size_t opt_length = 0;
  Packing witness;
  std::size_t k2 = 0;
  std::size_t k1 = 0;
};

/// Optimal linearly ordered packing; length = n + number of chains.
struct LinearResult {
  std::size_t length = 0;
  ChainDecomposition chains;
  Packing witness;
};

namespace detail {

/// Heights scaled to integers by the lcm of their denominators, when that
/// lcm is small enough for every subset sum to fit in 64 bits.
struct IntegerHeights {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::int64_t capacity = 0;
};

inline std::optional<IntegerHeights> integer_heights(const Instance& instance) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt scale = 1;
  for (const auto& c : instance.charts())
    for (const Rational* h : {&c.a, &c.b}) scale = boost::multiprecision::lcm(scale, denominator(*h));
  if (scale > BigInt(std::int64_t{1} << 40)) return std::nullopt;
  IntegerHeights out;
  out.capacity = scale.convert_to<std::int64_t>();
  for (const auto& c : instance.charts()) {
    out.a.push_back((numerator(c.a) * (scale / denominator(c.a))).convert_to<std::int64_t>());
    out.b.push_back((numerator(c.b) * (scale / denominator(c.b))).convert_to<std::int64_t>());
  }
  return out;
}

// Builds bins left to right. The state before filling a bin is the set of
// charts not yet started plus the set started in the previous bin (whose
// second bars sit in this bin); feasibility of later bins depends on
// nothing else. Values are memoized as exact results or as lower bounds
// proven by a failed budgeted search.
template <typename Weight>
class BinSearch {
 public:
  BinSearch(std::vector<Weight> a, std::vector<Weight> b, Weight capacity, std::vector<int> big_bars,
            std::vector<char> big_second)
      : a_(std::move(a)), b_(std::move(b)), capacity_(std::move(capacity)),
        big_bars_(std::move(big_bars)), big_second_(std::move(big_second)), n_(a_.size()) {}

  ExactResult solve() {
    const Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    const int value = search(all, 0, static_cast<int>(2 * n_ + 1));

    ExactResult out;
    out.opt_length = static_cast<std::size_t>(value);
    out.witness.assignment.assign(n_, 0);
    Mask unplaced = all;
    Mask carried = 0;
    int bin = 1;
    while (unplaced != 0) {
      const Mask chosen = memo_.at(key(unplaced, carried)).choice;
      if (std::popcount(chosen) >= 2) ++out.k2;
      for (std::size_t i = 0; i < n_; ++i)
        if (chosen >> i & 1) out.witness.assignment[i] = bin;
      unplaced &= ~chosen;
      carried = chosen;
      ++bin;
    }
    out.k1 = n_ - 2 * out.k2;
    return out;
  }

 private:
  using Mask = std::uint64_t;

  struct Entry {
    int value;
    bool exact;
    Mask choice;
  };

  static std::uint64_t key(Mask unplaced, Mask carried) { return unplaced << 32 | carried; }

  // No bin holds two bars above 1/2, and every unstarted chart needs two bins.
  int lower_bound(Mask unplaced, Mask carried) const {
    int big = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (unplaced >> i & 1) big += big_bars_[i];
      if (carried >> i & 1) big += big_second_[i];
    }
    if (unplaced != 0) big = std::max(big, 2);
    return big;
  }

  // Groups that can start in the current bin: first bars fit beside the
  // carried load, and second bars fit together in the next bin.
  void subsets(Mask unplaced, std::size_t from, Mask current, const Weight& first_load,
               const Weight& second_load, std::vector<Mask>& out) const {
    out.push_back(current);
    for (std::size_t i = from; i < n_; ++i) {
      if (!(unplaced >> i & 1)) continue;
      Weight first = first_load + a_[i];
      Weight second = second_load + b_[i];
      if (first <= capacity_ && second <= capacity_)
        subsets(unplaced, i + 1, current | Mask{1} << i, first, second, out);
    }
  }

  int search(Mask unplaced, Mask carried, int budget) {
    if (unplaced == 0) return carried != 0 ? 1 : 0;
    const auto k = key(unplaced, carried);
    if (auto it = memo_.find(k); it != memo_.end()) {
      if (it->second.exact || it->second.value >= budget) return it->second.value;
    }
    const int lb = lower_bound(unplaced, carried);
    if (lb >= budget) return lb;

    Weight carried_load = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (carried >> i & 1) carried_load += b_[i];
    std::vector<Mask> options;
    subsets(unplaced, 0, 0, carried_load, Weight(0), options);
    // larger groups first tends to find short packings early
    std::stable_sort(options.begin(), options.end(),
                     [](Mask x, Mask y) { return std::popcount(x) > std::popcount(y); });

    int best = budget;
    Mask choice = 0;
    for (Mask chosen : options) {
      if (chosen == 0 && carried == 0) continue;
      const int rest = search(unplaced & ~chosen, chosen, best - 1);
      if (1 + rest < best) {
        best = 1 + rest;
        choice = chosen;
        if (best == lb) break;
      }
    }
    if (best < budget)
      memo_[k] = Entry{best, true, choice};
    else
      memo_[k] = Entry{budget, false, 0};
    return best;
  }

  std::vector<Weight> a_;
  std::vector<Weight> b_;
  Weight capacity_;
  std::vector<int> big_bars_;
  std::vector<char> big_second_;
  std::size_t n_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

}  // namespace detail

/// Minimum packing length over all feasible packings of an all-big
/// instance, with an optimal witness.
inline ExactResult exact_opt(const Instance& instance, std::size_t limit = kDefaultExactLimit) {
  if (instance.size() > limit)
    throw PreconditionError("exact search limited to " + std::to_string(limit) + " charts, got " +
                            std::to_string(instance.size()));
  if (instance.size() > 32) throw PreconditionError("exact search supports at most 32 charts");
  require_all_big(instance, "exact search");

  std::vector<int> big_bars;
  std::vector<char> big_second;
  for (const auto& c : instance.charts()) {
    big_bars.push_back((c.a > one_half()) + (c.b > one_half()));
    big_second.push_back(c.b > one_half());
  }
  if (auto scaled = detail::integer_heights(instance)) {
    return detail::BinSearch<std::int64_t>(scaled->a, scaled->b, scaled->capacity, big_bars,
                                           big_second)
        .solve();
  }
  std::vector<Rational> a;
  std::vector<Rational> b;
  for (const auto& c : instance.charts()) {
    a.push_back(c.a);
    b.push_back(c.b);
  }
  return detail::BinSearch<Rational>(a, b, Rational(1), big_bars, big_second).solve();
}

/// Places chains one after another, each starting in the bin after the
/// previous chain's last second bar.
inline Packing layout_chains(std::size_t n, const ChainDecomposition& chains) {
  Packing packing{std::vector<int>(n, 0)};
  int bin = 1;
  for (const auto& chain : chains.chains) {
    for (auto chart : chain) packing.assignment[chart] = bin++;
    ++bin;
  }
  return packing;
}

/// Fewest chains over all orderings of the charts, where y may follow x in
/// a chain when b_x + a_y <= 1. Subset DP over (covered set, last chart).
inline LinearResult linearly_ordered_opt(const Instance& instance,
                                         std::size_t limit = kDefaultLinearLimit) {
  const std::size_t n = instance.size();
  if (n > limit)
    throw PreconditionError("linearly ordered search limited to " + std::to_string(limit) +
                            " charts, got " + std::to_string(n));
  if (n > 30) throw PreconditionError("linearly ordered search supports at most 30 charts");

  std::vector<std::vector<char>> follows(n, std::vector<char>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      follows[x][y] = x != y && instance[x].b + instance[y].a <= 1;

  const std::size_t full = (std::size_t{1} << n) - 1;
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> chains((full + 1) * n, kUnreached);
  std::vector<int> previous((full + 1) * n, -1);
  auto at = [n](std::size_t set, std::size_t last) { return set * n + last; };

  for (std::size_t x = 0; x < n; ++x) chains[at(std::size_t{1} << x, x)] = 1;
  for (std::size_t set = 1; set <= full; ++set) {
    for (std::size_t last = 0; last < n; ++last) {
      const int here = chains[at(set, last)];
      if (here == kUnreached) continue;
      for (std::size_t next = 0; next < n; ++next) {
        if (set >> next & 1) continue;
        const int cost = here + (follows[last][next] ? 0 : 1);
        auto& slot = chains[at(set | std::size_t{1} << next, next)];
        if (cost < slot) {
          slot = cost;
          previous[at(set | std::size_t{1} << next, next)] = static_cast<int>(last);
        }
      }
    }
  }

  std::size_t last = 0;
  for (std::size_t x = 1; x < n; ++x)
    if (chains[at(full, x)] < chains[at(full, last)]) last = x;

  std::vector<std::size_t> sequence;
  std::size_t set = full;
  for (int cur = static_cast<int>(last); cur != -1;) {
    sequence.push_back(static_cast<std::size_t>(cur));
    const int prev = previous[at(set, static_cast<std::size_t>(cur))];
    set &= ~(std::size_t{1} << cur);
    cur = prev;
  }
  std::reverse(sequence.begin(), sequence.end());

  LinearResult out;
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    if (pos == 0 || !follows[sequence[pos - 1]][sequence[pos]]) out.chains.chains.emplace_back();
    out.chains.chains.back().push_back(sequence[pos]);
  }
  out.length = n + out.chains.lambda();
  out.witness = layout_chains(n, out.chains);
  return out;
}

}  // namespace bcpp

#endif  // BCPP_EXACT_HPP
