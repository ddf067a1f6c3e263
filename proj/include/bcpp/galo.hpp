#ifndef BCPP_GALO_HPP
#define BCPP_GALO_HPP

#include "bcpp/core.hpp"

#include <algorithm>
#include <list>
#include <numeric>
#include <vector>

namespace bcpp {

/// Sort key for the greedy. `first_then_second` orders by (a, b); the
/// `larger_then_smaller` variant orders by (max(a,b), min(a,b)) and carries
/// no approximation guarantee.
enum class LexKey { first_then_second, larger_then_smaller };

/// Chart indices in non-increasing lexicographic order of their heights;
/// ties keep ascending index.
inline std::vector<std::size_t> lex_sort(const Instance& instance,
                                         LexKey key = LexKey::first_then_second) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto key_of = [&](std::size_t i) -> std::pair<const Rational&, const Rational&> {
    const auto& c = instance[i];
    if (key == LexKey::first_then_second) return {c.a, c.b};
    return c.a >= c.b ? std::pair<const Rational&, const Rational&>{c.a, c.b}
                      : std::pair<const Rational&, const Rational&>{c.b, c.a};
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto kx = key_of(x);
    auto ky = key_of(y);
    if (kx.first != ky.first) return kx.first > ky.first;
    return kx.second > ky.second;
  });
  return order;
}

/// Greedy with lexicographic ordering. Walks bins left to right; in each
/// bin it starts the first remaining chart (in sorted order) whose first bar
/// fits next to the second bar carried over from the previous bin, or
/// starts nothing if none fits. The result is always linearly ordered.
inline Packing galo_pack(const Instance& instance, LexKey key = LexKey::first_then_second) {
  const auto order = lex_sort(instance, key);
  std::list<std::size_t> remaining(order.begin(), order.end());
  Packing packing{std::vector<int>(instance.size(), 0)};

  int bin = 1;
  Rational carried = 0;
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(),
                           [&](std::size_t i) { return instance[i].a + carried <= 1; });
    if (it != remaining.end()) {
      packing.assignment[*it] = bin;
      carried = instance[*it].b;
      remaining.erase(it);
    } else {
      carried = 0;
    }
    ++bin;
  }
  return packing;
}

}  // namespace bcpp

#endif  // BCPP_GALO_HPP
