#include "circact/interval_homeo.hpp"

#include <algorithm>

#include "circact/errors.hpp"

namespace circact {

IntervalHomeo IntervalHomeo::identity() {
  return IntervalHomeo({{Rational(0), Rational(0)}, {Rational(1), Rational(1)}});
}

IntervalHomeo IntervalHomeo::reflection() {
  return IntervalHomeo({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
}

IntervalHomeo IntervalHomeo::from_breakpoints(std::vector<Point> pts) {
  if (pts.size() < 2) {
    throw ValidationError("IntervalHomeo: need at least two breakpoints");
  }
  if (!pts.front().first.is_zero() || pts.back().first != Rational(1)) {
    throw ValidationError("IntervalHomeo: domain must be exactly [0,1]");
  }
  const bool incr = pts.front().second < pts.back().second;
  for (size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].first < pts[i].first)) {
      throw ValidationError("IntervalHomeo: abscissas not increasing");
    }
    const bool step_up = pts[i - 1].second < pts[i].second;
    if (step_up != incr || pts[i - 1].second == pts[i].second) {
      throw NonMonotone("IntervalHomeo: values not strictly monotone");
    }
  }
  const Rational zero(0), one(1);
  if (incr) {
    if (!pts.front().second.is_zero() || pts.back().second != one) {
      throw ValidationError("IntervalHomeo: range must be exactly [0,1]");
    }
  } else {
    if (pts.front().second != one || !pts.back().second.is_zero()) {
      throw ValidationError("IntervalHomeo: range must be exactly [0,1]");
    }
  }
  // Canonicalize: drop interior collinear points.
  std::vector<Point> out;
  out.push_back(pts.front());
  for (size_t i = 1; i + 1 < pts.size(); ++i) {
    const auto& [xa, ya] = out.back();
    const auto& [xb, yb] = pts[i];
    const auto& [xc, yc] = pts[i + 1];
    if ((yb - ya) * (xc - xb) == (yc - yb) * (xb - xa)) continue;
    out.push_back(pts[i]);
  }
  out.push_back(pts.back());
  return IntervalHomeo(std::move(out));
}

Rational IntervalHomeo::operator()(const Rational& r) const {
  if (r.sign() < 0 || r > Rational(1)) {
    throw OutOfRange("IntervalHomeo: argument outside [0,1]");
  }
  auto it = std::upper_bound(
      bps_.begin(), bps_.end(), r,
      [](const Rational& v, const Point& p) { return v < p.first; });
  if (it == bps_.end()) return bps_.back().second;
  const Point& b = *it;
  const Point& a = *(it - 1);
  if (r == a.first) return a.second;
  return a.second + (b.second - a.second) * (r - a.first) / (b.first - a.first);
}

IntervalHomeo IntervalHomeo::inverse() const {
  std::vector<Point> pts;
  pts.reserve(bps_.size());
  for (const Point& p : bps_) pts.emplace_back(p.second, p.first);
  if (!increasing()) std::reverse(pts.begin(), pts.end());
  return IntervalHomeo(std::move(pts));
}

}  // namespace circact
