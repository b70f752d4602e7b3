#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circact/rational.hpp"

namespace circact {

// Finite unions of closed intervals [lo, hi] with rational endpoints,
// kept sorted, pairwise disjoint and non-adjacent. Degenerate [a, a]
// components are points.
using FiniteIntervals = std::vector<std::pair<Rational, Rational>>;

// Sorts, drops empty intervals (lo > hi) and merges overlapping or touching
// ones.
FiniteIntervals normalize_intervals(FiniteIntervals in);

FiniteIntervals intersect_intervals(const FiniteIntervals& a,
                                    const FiniteIntervals& b);

bool intervals_contain(const FiniteIntervals& a, const Rational& x);

// Closed subset of the real line given as components with optionally
// unbounded ends. lo == nullopt means the component extends to -infinity,
// hi == nullopt to +infinity.
class FixedIntervalSet {
 public:
  struct Component {
    std::optional<Rational> lo, hi;
    bool bounded() const { return lo.has_value() && hi.has_value(); }
  };

  FixedIntervalSet() = default;  // empty set
  static FixedIntervalSet whole_line();
  // Normalizes: sorts, merges overlapping/touching components.
  static FixedIntervalSet from_components(std::vector<Component> comps);

  const std::vector<Component>& components() const { return comps_; }
  bool empty() const { return comps_.empty(); }
  bool contains(const Rational& x) const;

  FixedIntervalSet intersect(const FixedIntervalSet& other) const;

  // Bounded components only, in order.
  std::vector<Component> bounded_components() const;

 private:
  std::vector<Component> comps_;
};

}  // namespace circact
