#ifndef BCPP_MATCHING_HPP
#define BCPP_MATCHING_HPP

#include "bcpp/core.hpp"

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

namespace bcpp {

/// Undirected graph on chart indices. Two charts are adjacent when they can
/// start in the same bin: a_i + a_j <= 1 and b_i + b_j <= 1.
class CompatibilityGraph {
 public:
  explicit CompatibilityGraph(std::size_t n) : adjacency_(n) {}

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j || has_edge(i, j)) return;
    adjacency_[i].insert(std::upper_bound(adjacency_[i].begin(), adjacency_[i].end(), j), j);
    adjacency_[j].insert(std::upper_bound(adjacency_[j].begin(), adjacency_[j].end(), i), i);
    ++edge_count_;
  }

  bool has_edge(std::size_t i, std::size_t j) const {
    return std::binary_search(adjacency_[i].begin(), adjacency_[i].end(), j);
  }

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_[v]; }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < adjacency_.size(); ++i)
      for (std::size_t j : adjacency_[i])
        if (i < j) out.emplace_back(i, j);
    return out;
  }

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline bool compatible(const BarChart& x, const BarChart& y) {
  return x.a + y.a <= 1 && x.b + y.b <= 1;
}

inline CompatibilityGraph build_graph(const Instance& instance) {
  CompatibilityGraph g(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i)
    for (std::size_t j = i + 1; j < instance.size(); ++j)
      if (compatible(instance[i], instance[j])) g.add_edge(i, j);
  return g;
}

/// Vertex-disjoint pairs, each stored (smaller, larger) and sorted.
struct MatchingResult {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  std::size_t mu() const { return pairs.size(); }
};

namespace detail {

// Edmonds' blossom algorithm with explicit base tracking, O(V^3).
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const CompatibilityGraph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, kNone), parent_(n_), base_(n_),
        in_queue_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] != kNone) continue;
      int v = augmenting_path_end(root);
      while (v != kNone) {
        const int pv = parent_[v];
        const int next = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = next;
      }
    }
    return match_;
  }

 private:
  static constexpr int kNone = -1;

  int lowest_common_base(int a, int b) const {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int augmenting_path_end(int root) {
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (int i = 0; i < n_; ++i) base_[i] = i;

    std::queue<int> queue;
    in_queue_[root] = 1;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (std::size_t to_index : g_.neighbours(static_cast<std::size_t>(v))) {
        const int to = static_cast<int>(to_index);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          // odd cycle: contract the blossom onto its base
          const int cur = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!in_queue_[i]) {
              in_queue_[i] = 1;
              queue.push(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          in_queue_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return kNone;
  }

  const CompatibilityGraph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> in_queue_;
  std::vector<char> in_blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching on a general graph.
inline MatchingResult max_matching(const CompatibilityGraph& graph) {
  const auto mate = detail::BlossomMatcher(graph).run();
  MatchingResult out;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] > static_cast<int>(v)) out.pairs.emplace_back(v, static_cast<std::size_t>(mate[v]));
  return out;
}

/// Lays out matched pairs as consecutive two-bin blocks (ordered by smaller
/// index), then every unmatched chart in its own two-bin block in index
/// order. With `compact`, a block slides one bin left whenever its first-bar
/// load fits beside the previous block's second-bar load.
inline Packing matching_pack(const Instance& instance, const MatchingResult& matching,
                             bool compact = false) {
  const std::size_t n = instance.size();
  std::vector<char> used(n, 0);
  std::vector<std::vector<std::size_t>> blocks;

  auto pairs = matching.pairs;
  for (auto& [i, j] : pairs)
    if (i > j) std::swap(i, j);
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [i, j] : pairs) {
    if (i >= n || j >= n || i == j || used[i] || used[j])
      throw PreconditionError("matching is not a set of disjoint chart pairs");
    if (!compatible(instance[i], instance[j]))
      throw PreconditionError("charts " + std::to_string(i) + " and " + std::to_string(j) +
                              " cannot share a bin");
    used[i] = used[j] = 1;
    blocks.push_back({i, j});
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) blocks.push_back({i});

  Packing packing{std::vector<int>(n, 0)};
  int start = 1;
  Rational trailing = 0;
  for (std::size_t t = 0; t < blocks.size(); ++t) {
    Rational leading = 0;
    for (auto c : blocks[t]) leading += instance[c].a;
    if (t > 0) start += (compact && trailing + leading <= 1) ? 1 : 2;
    trailing = 0;
    for (auto c : blocks[t]) {
      packing.assignment[c] = start;
      trailing += instance[c].b;
    }
  }
  return packing;
}

}  // namespace bcpp

#endif  // BCPP_MATCHING_HPP
