#pragma once

#include <utility>
#include <vector>

#include "circact/intervals.hpp"
#include "circact/rational.hpp"

namespace circact {

// Compactly supported increasing PL homeomorphism of the real line: equal to
// the identity outside its breakpoint span. Canonical representation keeps
// genuine corners only, so the identity map has an empty breakpoint list and
// equal maps have equal lists. Nonempty lists start and end on the diagonal.
class LineHomeo {
 public:
  using Point = std::pair<Rational, Rational>;

  LineHomeo() = default;  // identity
  static LineHomeo identity() { return LineHomeo(); }

  const std::vector<Point>& breakpoints() const { return bps_; }
  bool is_identity() const { return bps_.empty(); }

  Rational operator()(const Rational& x) const;

  LineHomeo inverse() const;
  friend LineHomeo operator*(const LineHomeo& f, const LineHomeo& g);

  bool operator==(const LineHomeo& o) const { return bps_ == o.bps_; }

  // Exact set {x : f(x) = x}.
  FixedIntervalSet fixed_set() const;

  friend LineHomeo make_line_homeo(std::vector<Point> breakpoints);

 private:
  explicit LineHomeo(std::vector<Point> bps) : bps_(std::move(bps)) {}

  std::vector<Point> bps_;
};

// Validates and canonicalizes: abscissas strictly increasing, induced map
// strictly increasing (NonMonotone otherwise), endpoints continuous with the
// identity outside the span (ValidationError otherwise).
LineHomeo make_line_homeo(std::vector<LineHomeo::Point> breakpoints);

}  // namespace circact
