#pragma once

#include <utility>
#include <vector>

#include "circact/pl_function.hpp"
#include "circact/rational.hpp"

namespace circact {

// PL homeomorphism of [0,1], strictly monotone in either direction, mapping
// {0,1} onto {0,1}. Canonical representation: genuine corners plus the two
// endpoints.
class IntervalHomeo {
 public:
  using Point = std::pair<Rational, Rational>;

  static IntervalHomeo identity();
  static IntervalHomeo reflection();  // r -> 1-r
  static IntervalHomeo from_breakpoints(std::vector<Point> pts);

  const std::vector<Point>& breakpoints() const { return bps_; }
  bool increasing() const { return bps_.front().second.is_zero(); }

  Rational operator()(const Rational& r) const;
  IntervalHomeo inverse() const;

  PLFunction as_pl() const { return PLFunction::from_points(bps_); }

  bool operator==(const IntervalHomeo& o) const { return bps_ == o.bps_; }

 private:
  explicit IntervalHomeo(std::vector<Point> bps) : bps_(std::move(bps)) {}

  std::vector<Point> bps_;
};

}  // namespace circact
