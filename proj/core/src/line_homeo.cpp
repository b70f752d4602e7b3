#include "circact/line_homeo.hpp"

#include <algorithm>

#include "circact/errors.hpp"
#include "circact/pl_function.hpp"

namespace circact {

LineHomeo make_line_homeo(std::vector<LineHomeo::Point> pts) {
  for (size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].first < pts[i].first)) {
      throw ValidationError("make_line_homeo: abscissas not increasing");
    }
    if (!(pts[i - 1].second < pts[i].second)) {
      throw NonMonotone("make_line_homeo: values not increasing");
    }
  }
  if (!pts.empty()) {
    if (pts.front().first != pts.front().second ||
        pts.back().first != pts.back().second) {
      throw ValidationError(
          "make_line_homeo: endpoints must lie on the diagonal");
    }
  }
  // Keep corners where the slope changes; the map is slope 1 outside the
  // span, so leading/trailing slope-1 pieces on the diagonal fold away.
  std::vector<LineHomeo::Point> corners;
  const size_t m = pts.size();
  for (size_t i = 0; i < m; ++i) {
    const Rational before =
        i == 0 ? Rational(1)
               : (pts[i].second - pts[i - 1].second) /
                     (pts[i].first - pts[i - 1].first);
    const Rational after =
        i + 1 == m ? Rational(1)
                   : (pts[i + 1].second - pts[i].second) /
                         (pts[i + 1].first - pts[i].first);
    if (before != after) corners.push_back(pts[i]);
  }
  return LineHomeo(std::move(corners));
}

Rational LineHomeo::operator()(const Rational& x) const {
  if (bps_.empty() || x <= bps_.front().first || x >= bps_.back().first) {
    return x;
  }
  auto it = std::upper_bound(
      bps_.begin(), bps_.end(), x,
      [](const Rational& v, const Point& p) { return v < p.first; });
  const Point& b = *it;
  const Point& a = *(it - 1);
  if (x == a.first) return a.second;
  return a.second + (b.second - a.second) * (x - a.first) / (b.first - a.first);
}

LineHomeo LineHomeo::inverse() const {
  std::vector<Point> pts;
  pts.reserve(bps_.size());
  for (const Point& p : bps_) pts.emplace_back(p.second, p.first);
  return LineHomeo(std::move(pts));
}

LineHomeo operator*(const LineHomeo& f, const LineHomeo& g) {
  if (f.is_identity()) return g;
  if (g.is_identity()) return f;
  const LineHomeo gi = g.inverse();
  std::vector<Rational> xs;
  xs.reserve(f.bps_.size() + g.bps_.size());
  for (const auto& p : g.bps_) xs.push_back(p.first);
  for (const auto& p : f.bps_) xs.push_back(gi(p.first));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<LineHomeo::Point> pts;
  pts.reserve(xs.size());
  for (Rational& x : xs) {
    Rational y = f(g(x));
    pts.emplace_back(std::move(x), std::move(y));
  }
  return make_line_homeo(std::move(pts));
}

FixedIntervalSet LineHomeo::fixed_set() const {
  if (bps_.empty()) return FixedIntervalSet::whole_line();
  const Rational& lo = bps_.front().first;
  const Rational& hi = bps_.back().first;
  std::vector<PLFunction::Point> disp;
  disp.reserve(bps_.size());
  for (const Point& p : bps_) disp.emplace_back(p.first, p.second - p.first);
  const FiniteIntervals inner =
      PLFunction::from_points(std::move(disp)).zero_set();

  std::vector<FixedIntervalSet::Component> comps;
  comps.push_back({std::nullopt, lo});
  for (const auto& iv : inner) comps.push_back({iv.first, iv.second});
  comps.push_back({hi, std::nullopt});
  return FixedIntervalSet::from_components(std::move(comps));
}

}  // namespace circact
