#ifndef BCPP_GEN_HPP
#define BCPP_GEN_HPP

#include "bcpp/core.hpp"
#include "bcpp/reduction.hpp"

#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcpp {

inline constexpr std::int64_t kDefaultGranularity = 1000;

/// 64-bit Mersenne Twister (std::mt19937_64, fully specified by the C++
/// standard) seeded with the given value. Bounded integers use rejection
/// sampling on the raw 64-bit output followed by a modulo, so draws are
/// bit-identical on every platform; std distributions are not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i - 1)));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { all_big, first_big, pairable };

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::all_big: return "all-big";
    case Family::first_big: return "first-big";
    case Family::pairable: return "pairable";
  }
  return "all-big";
}

inline Family parse_family(std::string_view s) {
  if (s == "all-big") return Family::all_big;
  if (s == "first-big") return Family::first_big;
  if (s == "pairable") return Family::pairable;
  throw PreconditionError("unknown family '" + std::string(s) + "'");
}

namespace detail {

inline void check_granularity(std::int64_t granularity) {
  if (granularity < 2) throw PreconditionError("granularity must be at least 2");
}

inline std::int64_t big_height(Rng& rng, std::int64_t g) { return rng.uniform(g / 2 + 1, g); }

}  // namespace detail

/// Every chart has one bar in (1/2, 1] (side chosen by a coin flip), the
/// other in [0, 1]; heights are k / granularity.
inline Instance gen_all_big(std::size_t n, std::uint64_t seed,
                            std::int64_t granularity = kDefaultGranularity) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  detail::check_granularity(granularity);
  Rng rng(seed);
  std::vector<BarChart> charts;
  for (std::size_t i = 0; i < n; ++i) {
    const bool first_is_big = rng.uniform(0, 1) == 0;
    const auto big = detail::big_height(rng, granularity);
    const auto other = rng.uniform(0, granularity);
    if (first_is_big)
      charts.push_back({Rational(big, granularity), Rational(other, granularity)});
    else
      charts.push_back({Rational(other, granularity), Rational(big, granularity)});
  }
  return Instance(std::move(charts));
}

/// a in (1/2, 1], b in [0, 1].
inline Instance gen_first_big(std::size_t n, std::uint64_t seed,
                              std::int64_t granularity = kDefaultGranularity) {
  if (n < 1) throw PreconditionError("n must be at least 1");
  detail::check_granularity(granularity);
  Rng rng(seed);
  std::vector<BarChart> charts;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = detail::big_height(rng, granularity);
    const auto b = rng.uniform(0, granularity);
    charts.push_back({Rational(a, granularity), Rational(b, granularity)});
  }
  return Instance(std::move(charts));
}

/// 2 * n_pairs charts, shuffled, containing a planted perfect matching:
/// (a1 big, b1 <= 1 - b2) next to (a2 <= 1 - a1, b2 big).
inline Instance gen_pairable(std::size_t n_pairs, std::uint64_t seed,
                             std::int64_t granularity = kDefaultGranularity) {
  if (n_pairs < 1) throw PreconditionError("n_pairs must be at least 1");
  detail::check_granularity(granularity);
  Rng rng(seed);
  std::vector<BarChart> charts;
  for (std::size_t p = 0; p < n_pairs; ++p) {
    const auto a1 = detail::big_height(rng, granularity);
    const auto a2 = rng.uniform(0, granularity - a1);
    const auto b2 = detail::big_height(rng, granularity);
    const auto b1 = rng.uniform(0, granularity - b2);
    charts.push_back({Rational(a1, granularity), Rational(b1, granularity)});
    charts.push_back({Rational(a2, granularity), Rational(b2, granularity)});
  }
  rng.shuffle(charts);
  return Instance(std::move(charts));
}

/// Generator dispatch by family. For `pairable`, n is the chart count and
/// is rounded up to an even number.
inline Instance generate(Family family, std::size_t n, std::uint64_t seed,
                         std::int64_t granularity = kDefaultGranularity) {
  switch (family) {
    case Family::all_big: return gen_all_big(n, seed, granularity);
    case Family::first_big: return gen_first_big(n, seed, granularity);
    case Family::pairable: return gen_pairable((n + 1) / 2, seed, granularity);
  }
  throw PreconditionError("unknown family");
}

/// Normalized NDM instance with elements in [1, target]. With `planted`,
/// the lists are built from r random triples each summing to target (a
/// yes-instance); otherwise r * target is split into 3r random parts and
/// the answer is left to ndm_decide.
inline NdmInstance gen_ndm(std::size_t r, std::int64_t target, std::uint64_t seed, bool planted) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  if (target < 3) throw PreconditionError("target must be at least 3");
  Rng rng(seed);
  std::vector<std::int64_t> x;
  std::vector<std::int64_t> y;
  std::vector<std::int64_t> z;
  if (planted) {
    for (std::size_t i = 0; i < r; ++i) {
      const auto xi = rng.uniform(1, target - 2);
      const auto yi = rng.uniform(1, target - 1 - xi);
      x.push_back(xi);
      y.push_back(yi);
      z.push_back(target - xi - yi);
    }
    rng.shuffle(x);
    rng.shuffle(y);
    rng.shuffle(z);
  } else {
    std::vector<std::int64_t> parts(3 * r, 1);
    auto spare = static_cast<std::int64_t>(r) * target - static_cast<std::int64_t>(3 * r);
    while (spare > 0) {
      auto& part = parts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(3 * r - 1)))];
      if (part < target) {
        ++part;
        --spare;
      }
    }
    x.assign(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(r));
    y.assign(parts.begin() + static_cast<std::ptrdiff_t>(r), parts.begin() + static_cast<std::ptrdiff_t>(2 * r));
    z.assign(parts.begin() + static_cast<std::ptrdiff_t>(2 * r), parts.end());
  }
  return NdmInstance(std::move(x), std::move(y), std::move(z), target);
}

}  // namespace bcpp

#endif  // BCPP_GEN_HPP
