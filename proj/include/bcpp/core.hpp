#ifndef BCPP_CORE_HPP
#define BCPP_CORE_HPP

#include "bcpp/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bcpp {

/// Raised when an operation is called on input that violates its
/// precondition (wrong instance class, size limit, malformed packing).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A two-bar chart: the first bar (height `a`) goes into bin p, the second
/// (height `b`) into bin p + 1.
struct BarChart {
  Rational a;
  Rational b;

  bool big() const { return a > one_half() || b > one_half(); }
  friend bool operator==(const BarChart&, const BarChart&) = default;
};

enum class InstanceClass { general, all_big, first_bar_big };

inline std::string_view to_string(InstanceClass c) {
  switch (c) {
    case InstanceClass::general: return "general";
    case InstanceClass::all_big: return "all-big";
    case InstanceClass::first_bar_big: return "first-bar-big";
  }
  return "general";
}

/// first-bar-big if every a > 1/2, else all-big if every chart has a bar
/// above 1/2, else general.
inline InstanceClass classify(const std::vector<BarChart>& charts) {
  bool first_big = true;
  bool all_big = true;
  for (const auto& c : charts) {
    first_big = first_big && c.a > one_half();
    all_big = all_big && c.big();
  }
  if (first_big) return InstanceClass::first_bar_big;
  if (all_big) return InstanceClass::all_big;
  return InstanceClass::general;
}

/// Immutable, non-empty list of charts with heights in [0, 1]. Charts are
/// addressed by their 0-based position. The class tag is always computed
/// from the heights.
class Instance {
 public:
  explicit Instance(std::vector<BarChart> charts) : charts_(std::move(charts)) {
    if (charts_.empty()) throw PreconditionError("instance has no charts");
    for (std::size_t i = 0; i < charts_.size(); ++i) {
      const auto& c = charts_[i];
      if (c.a < 0 || c.a > 1 || c.b < 0 || c.b > 1)
        throw PreconditionError("chart " + std::to_string(i) + " has a height outside [0,1]");
    }
    class_ = bcpp::classify(charts_);
  }

  std::size_t size() const { return charts_.size(); }
  const BarChart& operator[](std::size_t i) const { return charts_[i]; }
  const std::vector<BarChart>& charts() const { return charts_; }
  InstanceClass instance_class() const { return class_; }

  /// True for both all-big and first-bar-big instances.
  bool all_big() const { return class_ != InstanceClass::general; }

  std::vector<std::size_t> non_big_charts() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < charts_.size(); ++i)
      if (!charts_[i].big()) out.push_back(i);
    return out;
  }

  friend bool operator==(const Instance& x, const Instance& y) { return x.charts_ == y.charts_; }

 private:
  std::vector<BarChart> charts_;
  InstanceClass class_ = InstanceClass::general;
};

inline InstanceClass classify(const Instance& instance) { return classify(instance.charts()); }

/// Start bin (1-based) of every chart's first bar.
struct Packing {
  std::vector<int> assignment;

  std::size_t size() const { return assignment.size(); }
  int operator[](std::size_t i) const { return assignment[i]; }
  friend bool operator==(const Packing&, const Packing&) = default;
};

/// Chains of a linearly ordered packing, each listed left to right.
struct ChainDecomposition {
  std::vector<std::vector<std::size_t>> chains;

  std::size_t lambda() const { return chains.size(); }
};

/// Throws unless every chart of `instance` is big.
inline void require_all_big(const Instance& instance, std::string_view what) {
  if (instance.all_big()) return;
  std::string msg = std::string(what) + " requires every chart to have a bar above 1/2; non-big charts:";
  for (auto i : instance.non_big_charts()) msg += " " + std::to_string(i);
  throw PreconditionError(msg);
}

}  // namespace bcpp

#endif  // BCPP_CORE_HPP
