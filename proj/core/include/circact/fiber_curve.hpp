#pragma once

#include <vector>

#include "circact/intervals.hpp"
#include "circact/pl_function.hpp"
#include "circact/rational.hpp"
#include "circact/surface_map.hpp"

namespace circact {

// Exact image of the vertical fiber {(t, theta0) : t in [0,1]} under a chain
// of primitive nodes, kept as piecewise data: on each parameter segment the
// curve is t -> (rho(t), tau(t)) with rho the first coordinate and tau a
// real-valued lift of the second. Segment boundaries are the only places
// where tau may jump by an integer; within a segment everything is PL.
struct CurveSegment {
  PLFunction rho;
  PLFunction tau;
};

class FiberCurve {
 public:
  // The fiber itself: one segment, rho = id on [0,1], tau constant theta0.
  static FiberCurve vertical(const Rational& theta0);

  const std::vector<CurveSegment>& segments() const { return segments_; }

  FiberCurve pushed(const AnnulusNode& node) const;
  FiberCurve pushed(const AnnulusMap& map) const;
  FiberCurve pushed(const TorusNode& node) const;
  FiberCurve pushed(const TorusMap& map) const;

  AnnulusPoint at(const Rational& t) const;
  // Lifted coordinates (rho(t), tau(t)) without canonicalization; valid for
  // torus chains where rho leaves [0,1].
  std::pair<Rational, Rational> at_raw(const Rational& t) const;

  // Parameters t with rho(t) = t and tau(t) = theta0 (mod 1): the fixed
  // set of the pushed map along the original fiber, as closed intervals.
  FiniteIntervals fixed_parameters(const Rational& theta0) const;
  // Torus variant: rho(t) = t is also read mod 1.
  FiniteIntervals fixed_parameters_mod1(const Rational& theta0) const;

 private:
  explicit FiberCurve(std::vector<CurveSegment> segs)
      : segments_(std::move(segs)) {}

  std::vector<CurveSegment> segments_;
};

}  // namespace circact
