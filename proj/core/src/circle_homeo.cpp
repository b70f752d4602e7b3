#include "circact/circle_homeo.hpp"

#include <algorithm>

#include "circact/errors.hpp"

namespace circact {

CircleHomeo::CircleHomeo(std::vector<Point> bps, int) : bps_(std::move(bps)) {
  cache_slopes();
}

void CircleHomeo::cache_slopes() {
  const size_t m = bps_.size();
  slopes_.clear();
  slopes_.reserve(m);
  for (size_t i = 0; i + 1 < m; ++i) {
    slopes_.push_back((bps_[i + 1].second - bps_[i].second) /
                      (bps_[i + 1].first - bps_[i].first));
  }
  // Wrap piece to (x0 + 1, y0 + 1).
  slopes_.push_back((bps_[0].second + 1 - bps_[m - 1].second) /
                    (bps_[0].first + 1 - bps_[m - 1].first));
}

CircleHomeo make_circle_homeo(std::vector<CircleHomeo::Point> pts) {
  if (pts.empty()) throw ValidationError("make_circle_homeo: no breakpoints");
  for (size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].first.sign() < 0 || pts[i].first >= Rational(1)) {
      throw OutOfRange("make_circle_homeo: abscissa outside [0,1)");
    }
    if (i > 0 && !(pts[i - 1].first < pts[i].first)) {
      throw ValidationError("make_circle_homeo: abscissas not increasing");
    }
  }
  const size_t m = pts.size();
  std::vector<Rational> slopes(m);
  for (size_t i = 0; i < m; ++i) {
    const Rational dx = (i + 1 < m ? pts[i + 1].first : pts[0].first + 1) -
                        pts[i].first;
    const Rational dy = (i + 1 < m ? pts[i + 1].second : pts[0].second + 1) -
                        pts[i].second;
    if (dy.sign() <= 0) throw NonMonotone("make_circle_homeo: slope <= 0");
    slopes[i] = dy / dx;
  }

  // Keep genuine corners only (slope changes across the breakpoint).
  std::vector<CircleHomeo::Point> corners;
  for (size_t i = 0; i < m; ++i) {
    const Rational& before = slopes[(i + m - 1) % m];
    if (before != slopes[i]) corners.push_back(pts[i]);
  }

  if (corners.empty()) {
    // Pure rotation; anchor the representation at x = 0.
    Rational alpha = mod1(pts[0].second - pts[0].first);
    return CircleHomeo({{Rational(0), std::move(alpha)}}, 0);
  }

  // Normalize so the lift value at 0 lies in [0,1). With x0 the first kept
  // corner, 0 sits on the wrap piece ending at x0 (or at x0 itself).
  Rational f0;
  if (corners[0].first.is_zero()) {
    f0 = corners[0].second;
  } else {
    const size_t last = (std::find(pts.begin(), pts.end(), corners[0]) -
                         pts.begin() + m - 1) % m;
    f0 = corners[0].second - slopes[last] * corners[0].first;
  }
  Rational shift = f0.floor();
  if (!shift.is_zero()) {
    for (auto& p : corners) p.second -= shift;
  }
  return CircleHomeo(std::move(corners), 0);
}

CircleHomeo CircleHomeo::rotation(const Rational& alpha) {
  return CircleHomeo({{Rational(0), mod1(alpha)}}, 0);
}

Rational CircleHomeo::lift(const Rational& x) const {
  const Rational& x0 = bps_[0].first;
  const Rational n = (x - x0).floor();
  const Rational xr = x - n;  // in [x0, x0 + 1)
  // Find the piece containing xr.
  auto it = std::upper_bound(
      bps_.begin(), bps_.end(), xr,
      [](const Rational& v, const Point& p) { return v < p.first; });
  const size_t i = static_cast<size_t>(it - bps_.begin()) - 1;
  const Point& p = bps_[i];
  if (xr == p.first) return p.second + n;
  return p.second + slopes_[i] * (xr - p.first) + n;
}

CircleHomeo CircleHomeo::inverse() const {
  std::vector<Point> pts;
  pts.reserve(bps_.size());
  for (const Point& p : bps_) {
    Rational k = p.second.floor();
    pts.emplace_back(p.second - k, p.first - k);
  }
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return a.first < b.first; });
  return make_circle_homeo(std::move(pts));
}

CircleHomeo operator*(const CircleHomeo& f, const CircleHomeo& g) {
  const CircleHomeo gi = g.inverse();
  std::vector<Rational> xs;
  xs.reserve(f.bps_.size() + g.bps_.size());
  for (const auto& p : g.bps_) xs.push_back(p.first);
  for (const auto& p : f.bps_) xs.push_back(mod1(gi.lift(p.first)));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<CircleHomeo::Point> pts;
  pts.reserve(xs.size());
  for (Rational& x : xs) {
    Rational y = f.lift(g.lift(x));
    pts.emplace_back(std::move(x), std::move(y));
  }
  return make_circle_homeo(std::move(pts));
}

PLFunction CircleHomeo::lift_restriction(const Rational& lo,
                                         const Rational& hi) const {
  if (lo > hi) throw OutOfRange("lift_restriction: empty window");
  std::vector<Rational> xs;
  xs.push_back(lo);
  // Every corner abscissa shifted by every integer that lands in [lo, hi].
  for (const Point& p : bps_) {
    Rational k = (lo - p.first).floor();
    for (Rational x = p.first + k; x <= hi; x += 1) {
      if (x >= lo) xs.push_back(x);
    }
  }
  xs.push_back(hi);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PLFunction::Point> pts;
  pts.reserve(xs.size());
  for (Rational& x : xs) {
    Rational y = lift(x);
    pts.emplace_back(std::move(x), std::move(y));
  }
  return PLFunction::from_points(std::move(pts));
}

std::vector<CircleHomeo> bump_family(const Rational& center,
                                     const Rational& radius, int count) {
  if (!(radius.sign() > 0) || !(radius < Rational(1, 2))) {
    throw BadRadius("bump_family: radius must lie in (0, 1/2)");
  }
  if (count < 1) throw ValidationError("bump_family: count must be >= 1");

  const Rational e0 = center + radius;       // right end of the fixed arc
  const Rational e1 = center + 1 - radius;   // its left end, next period
  const Rational len = e1 - e0;

  std::vector<CircleHomeo> out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    const Rational apex = e0 + len * dyadic(k + 1);
    const Rational disp = len * dyadic(k + 2);
    std::vector<CircleHomeo::Point> pts = {
        {e0, e0}, {apex, apex + disp}, {e1, e1}};
    // Reduce abscissas into [0,1), shifting ordinates by the same integer.
    for (auto& p : pts) {
      Rational k0 = p.first.floor();
      p.first -= k0;
      p.second -= k0;
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      return a.first < b.first;
    });
    out.push_back(make_circle_homeo(std::move(pts)));
  }
  return out;
}

}  // namespace circact
