#pragma once

#include <utility>
#include <vector>

#include "circact/pl_function.hpp"
#include "circact/rational.hpp"

namespace circact {

// Orientation-preserving PL homeomorphism of the circle R/Z, stored as the
// breakpoints of one period of its lift: abscissas in [0,1) strictly
// increasing, extended by f(x+1) = f(x)+1, with the wrap piece joining the
// last breakpoint to the first one shifted by (1,1).
//
// The representation is canonical: only genuine corners are kept (a pure
// rotation degenerates to the single anchor point (0, alpha)) and the lift
// is normalized so that f(0) lands in [0,1). Equal maps therefore have equal
// breakpoint lists.
class CircleHomeo {
 public:
  using Point = std::pair<Rational, Rational>;

  CircleHomeo() : CircleHomeo(std::vector<Point>{{0, 0}}, 0) {}

  static CircleHomeo identity() { return CircleHomeo(); }
  static CircleHomeo rotation(const Rational& alpha);

  const std::vector<Point>& breakpoints() const { return bps_; }
  bool is_rotation() const { return bps_.size() == 1; }

  // Value of the normalized lift at any rational x.
  Rational lift(const Rational& x) const;
  // Circle evaluation; the result is the representative in [0,1).
  Rational operator()(const Rational& theta) const {
    return mod1(lift(theta));
  }

  CircleHomeo inverse() const;
  // Composition f*g = f after g.
  friend CircleHomeo operator*(const CircleHomeo& f, const CircleHomeo& g);

  bool operator==(const CircleHomeo& o) const { return bps_ == o.bps_; }

  // The lift restricted to [lo, hi] as a finite PL function.
  PLFunction lift_restriction(const Rational& lo, const Rational& hi) const;

  friend CircleHomeo make_circle_homeo(std::vector<Point> breakpoints);

 private:
  CircleHomeo(std::vector<Point> bps, int);  // canonical data, no checks
  void cache_slopes();

  std::vector<Point> bps_;
  std::vector<Rational> slopes_;  // per piece; back() is the wrap piece
};

// Builds the homeomorphism interpolating the given lift breakpoints.
// Throws OutOfRange if an abscissa is outside [0,1), ValidationError if the
// list is empty or not strictly increasing, NonMonotone if a piece of the
// induced map has slope <= 0.
CircleHomeo make_circle_homeo(std::vector<CircleHomeo::Point> breakpoints);

// Deterministic family of `count` distinct PL bumps: each is the identity on
// the open arc (center-radius, center+radius), moves every other point
// forward (f(x) >= x on the lift chart anchored at the center), and has the
// closed arc as its exact fixed set.
// Throws BadRadius unless 0 < radius < 1/2.
std::vector<CircleHomeo> bump_family(const Rational& center,
                                     const Rational& radius, int count);

}  // namespace circact
