#ifndef BCPP_REDUCTION_HPP
#define BCPP_REDUCTION_HPP

#include "bcpp/core.hpp"
#include "bcpp/exact.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

namespace bcpp {

inline constexpr std::size_t kDefaultNdmLimit = 6;

/// Numerical 3-dimensional matching instance: can X, Y, Z be split into r
/// triples, one element from each list, every triple summing to `target`?
/// Construction enforces positive elements and sum(X + Y + Z) = r * target.
class NdmInstance {
 public:
  NdmInstance(std::vector<std::int64_t> x, std::vector<std::int64_t> y, std::vector<std::int64_t> z,
              std::int64_t target)
      : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), target_(target) {
    if (x_.empty() || x_.size() != y_.size() || x_.size() != z_.size())
      throw PreconditionError("NDM lists must be non-empty and of equal length");
    if (target_ <= 0) throw PreconditionError("NDM target must be positive");
    std::int64_t total = 0;
    for (const auto* list : {&x_, &y_, &z_}) {
      for (auto v : *list) {
        if (v < 1) throw PreconditionError("NDM elements must be positive integers");
        total += v;
      }
    }
    if (total != static_cast<std::int64_t>(x_.size()) * target_)
      throw PreconditionError("NDM elements sum to " + std::to_string(total) + ", expected r*b = " +
                              std::to_string(static_cast<std::int64_t>(x_.size()) * target_));
  }

  std::size_t r() const { return x_.size(); }
  const std::vector<std::int64_t>& x() const { return x_; }
  const std::vector<std::int64_t>& y() const { return y_; }
  const std::vector<std::int64_t>& z() const { return z_; }
  std::int64_t target() const { return target_; }

 private:
  std::vector<std::int64_t> x_;
  std::vector<std::int64_t> y_;
  std::vector<std::int64_t> z_;
  std::int64_t target_;
};

/// Charts: red (1, x/2b) for each x, yellow ((b+y)/2b, 1/4b) for each y,
/// green (z/2b, 1 - 1/4b) for each z, in that order. Every chart is big.
inline Instance reduce(const NdmInstance& ndm) {
  const std::int64_t b = ndm.target();
  std::vector<BarChart> charts;
  charts.reserve(3 * ndm.r());
  for (auto x : ndm.x()) charts.push_back({Rational(1), Rational(x, 2 * b)});
  for (auto y : ndm.y()) charts.push_back({Rational(b + y, 2 * b), Rational(1, 4 * b)});
  for (auto z : ndm.z()) charts.push_back({Rational(z, 2 * b), 1 - Rational(1, 4 * b)});
  for (std::size_t i = 0; i < charts.size(); ++i)
    if (charts[i].a > 1 || charts[i].b > 1)
      throw PreconditionError("NDM element too large: chart " + std::to_string(i) +
                              " would have a bar above 1");
  return Instance(std::move(charts));
}

/// Triples (x index, y index, z index) of a yes-certificate.
using NdmPartition = std::vector<std::array<std::size_t, 3>>;

/// Exhaustive search: the i-th x is matched with an unused (y, z) pair;
/// failed (y-mask, z-mask) states are memoized.
inline std::optional<NdmPartition> ndm_decide(const NdmInstance& ndm,
                                              std::size_t limit = kDefaultNdmLimit) {
  const std::size_t r = ndm.r();
  if (r > limit)
    throw PreconditionError("NDM search limited to r <= " + std::to_string(limit));
  if (r > 16) throw PreconditionError("NDM search supports r <= 16");

  std::unordered_map<std::uint32_t, bool> dead;
  NdmPartition triples;
  auto solve = [&](auto&& self, std::size_t i, std::uint32_t used_y, std::uint32_t used_z) -> bool {
    if (i == r) return true;
    const std::uint32_t k = used_y << 16 | used_z;
    if (dead.count(k)) return false;
    for (std::size_t j = 0; j < r; ++j) {
      if (used_y >> j & 1) continue;
      for (std::size_t l = 0; l < r; ++l) {
        if (used_z >> l & 1) continue;
        if (ndm.x()[i] + ndm.y()[j] + ndm.z()[l] != ndm.target()) continue;
        triples.push_back({i, j, l});
        if (self(self, i + 1, used_y | 1u << j, used_z | 1u << l)) return true;
        triples.pop_back();
      }
    }
    dead[k] = true;
    return false;
  };
  if (solve(solve, 0, 0, 0)) return triples;
  return std::nullopt;
}

struct ReductionReport {
  bool ndm_yes = false;
  std::optional<NdmPartition> partition;
  std::size_t opt_length = 0;
  std::size_t bin_budget = 0;  // 3r
  bool equivalence_holds = false;
};

/// Decides the NDM instance directly and by solving its packing image
/// exactly; the two answers must agree (yes iff OPT <= 3r).
inline ReductionReport certify_reduction(const NdmInstance& ndm,
                                         std::size_t exact_limit = kDefaultExactLimit) {
  ReductionReport out;
  out.partition = ndm_decide(ndm);
  out.ndm_yes = out.partition.has_value();
  out.opt_length = exact_opt(reduce(ndm), exact_limit).opt_length;
  out.bin_budget = 3 * ndm.r();
  out.equivalence_holds = out.ndm_yes == (out.opt_length <= out.bin_budget);
  return out;
}

}  // namespace bcpp

#endif  // BCPP_REDUCTION_HPP
