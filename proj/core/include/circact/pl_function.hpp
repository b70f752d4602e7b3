#pragma once

#include <utility>
#include <vector>

#include "circact/intervals.hpp"
#include "circact/rational.hpp"

namespace circact {

// Continuous piecewise-linear function on a closed rational interval,
// represented by its breakpoints (x strictly increasing, at least two unless
// the domain is a single point). Not required to be monotone.
class PLFunction {
 public:
  using Point = std::pair<Rational, Rational>;

  static PLFunction from_points(std::vector<Point> pts);
  static PLFunction constant(Rational lo, Rational hi, Rational c);
  static PLFunction identity(Rational lo, Rational hi);
  static PLFunction affine(Rational lo, Rational hi, Rational value_lo,
                           Rational value_hi);

  const std::vector<Point>& points() const { return pts_; }
  const Rational& domain_lo() const { return pts_.front().first; }
  const Rational& domain_hi() const { return pts_.back().first; }

  Rational operator()(const Rational& x) const;

  Rational min_value() const;
  Rational max_value() const;

  // Pointwise algebra; both operands must share the same domain.
  friend PLFunction operator+(const PLFunction& a, const PLFunction& b);
  friend PLFunction operator-(const PLFunction& a, const PLFunction& b);
  PLFunction scaled(const Rational& c) const;
  PLFunction shifted(const Rational& c) const;  // f + c

  // this∘inner; the range of inner must lie inside this->domain.
  PLFunction compose(const PLFunction& inner) const;

  PLFunction restrict(const Rational& lo, const Rational& hi) const;

  // Copy with extra x-breakpoints inserted (clamped to existing domain
  // values; out-of-domain entries are ignored).
  PLFunction with_breakpoints(const std::vector<Rational>& xs) const;

  // {x : f(x) == 0} as a finite union of closed intervals.
  FiniteIntervals zero_set() const;
  // {x : lo <= f(x) <= hi}.
  FiniteIntervals preimage(const Rational& lo, const Rational& hi) const;

  // Canonical form: interior breakpoints where the slope does not change are
  // dropped. Equal functions have equal normalized breakpoint lists.
  PLFunction normalized() const;

  bool operator==(const PLFunction& o) const { return pts_ == o.pts_; }

 private:
  explicit PLFunction(std::vector<Point> pts) : pts_(std::move(pts)) {}
  size_t piece_index(const Rational& x) const;

  std::vector<Point> pts_;
};

}  // namespace circact
