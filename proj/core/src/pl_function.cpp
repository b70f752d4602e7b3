#include "circact/pl_function.hpp"

#include <algorithm>

#include "circact/errors.hpp"

namespace circact {

PLFunction PLFunction::from_points(std::vector<Point> pts) {
  if (pts.empty()) throw ValidationError("PLFunction: no breakpoints");
  for (size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].first < pts[i].first)) {
      throw ValidationError("PLFunction: x-coordinates not increasing");
    }
  }
  return PLFunction(std::move(pts));
}

PLFunction PLFunction::constant(Rational lo, Rational hi, Rational c) {
  return affine(std::move(lo), std::move(hi), c, c);
}

PLFunction PLFunction::identity(Rational lo, Rational hi) {
  Rational vlo = lo, vhi = hi;
  return affine(std::move(lo), std::move(hi), std::move(vlo), std::move(vhi));
}

PLFunction PLFunction::affine(Rational lo, Rational hi, Rational value_lo,
                              Rational value_hi) {
  if (lo == hi) {
    if (value_lo != value_hi) {
      throw ValidationError("PLFunction: conflicting values on point domain");
    }
    return PLFunction({{std::move(lo), std::move(value_lo)}});
  }
  if (lo > hi) throw ValidationError("PLFunction: empty domain");
  return PLFunction({{std::move(lo), std::move(value_lo)},
                     {std::move(hi), std::move(value_hi)}});
}

size_t PLFunction::piece_index(const Rational& x) const {
  if (x < domain_lo() || x > domain_hi()) {
    throw OutOfRange("PLFunction: argument outside domain");
  }
  auto it = std::upper_bound(
      pts_.begin(), pts_.end(), x,
      [](const Rational& v, const Point& p) { return v < p.first; });
  size_t i = static_cast<size_t>(it - pts_.begin());
  if (i == 0) return 0;                         // x == domain_lo
  if (i == pts_.size()) return pts_.size() - 2;  // x == domain_hi
  return i - 1;
}

Rational PLFunction::operator()(const Rational& x) const {
  size_t i = piece_index(x);
  if (pts_.size() == 1) return pts_[0].second;
  const auto& [x0, y0] = pts_[i];
  const auto& [x1, y1] = pts_[i + 1];
  if (x == x0) return y0;
  if (x == x1) return y1;
  return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

Rational PLFunction::min_value() const {
  Rational m = pts_[0].second;
  for (const Point& p : pts_) m = std::min(m, p.second);
  return m;
}

Rational PLFunction::max_value() const {
  Rational m = pts_[0].second;
  for (const Point& p : pts_) m = std::max(m, p.second);
  return m;
}

namespace {

std::vector<Rational> merged_xs(const PLFunction& a, const PLFunction& b) {
  std::vector<Rational> xs;
  xs.reserve(a.points().size() + b.points().size());
  for (const auto& p : a.points()) xs.push_back(p.first);
  for (const auto& p : b.points()) xs.push_back(p.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

PLFunction operator+(const PLFunction& a, const PLFunction& b) {
  if (a.domain_lo() != b.domain_lo() || a.domain_hi() != b.domain_hi()) {
    throw ValidationError("PLFunction: domain mismatch");
  }
  std::vector<PLFunction::Point> pts;
  for (const Rational& x : merged_xs(a, b)) pts.emplace_back(x, a(x) + b(x));
  return PLFunction::from_points(std::move(pts));
}

PLFunction operator-(const PLFunction& a, const PLFunction& b) {
  if (a.domain_lo() != b.domain_lo() || a.domain_hi() != b.domain_hi()) {
    throw ValidationError("PLFunction: domain mismatch");
  }
  std::vector<PLFunction::Point> pts;
  for (const Rational& x : merged_xs(a, b)) pts.emplace_back(x, a(x) - b(x));
  return PLFunction::from_points(std::move(pts));
}

PLFunction PLFunction::scaled(const Rational& c) const {
  std::vector<Point> pts = pts_;
  for (Point& p : pts) p.second *= c;
  return PLFunction(std::move(pts));
}

PLFunction PLFunction::shifted(const Rational& c) const {
  std::vector<Point> pts = pts_;
  for (Point& p : pts) p.second += c;
  return PLFunction(std::move(pts));
}

PLFunction PLFunction::compose(const PLFunction& inner) const {
  if (inner.min_value() < domain_lo() || inner.max_value() > domain_hi()) {
    throw OutOfRange("PLFunction: inner range escapes outer domain");
  }
  // Cut inner's pieces wherever inner crosses one of our breakpoints, so the
  // result is affine between consecutive cuts.
  std::vector<Rational> cuts;
  for (const Point& p : inner.pts_) cuts.push_back(p.first);
  for (size_t i = 0; i + 1 < inner.pts_.size(); ++i) {
    const auto& [x0, y0] = inner.pts_[i];
    const auto& [x1, y1] = inner.pts_[i + 1];
    if (y0 == y1) continue;
    const Rational lo = std::min(y0, y1), hi = std::max(y0, y1);
    for (const Point& q : pts_) {
      const Rational& t = q.first;
      if (t <= lo || t >= hi) continue;
      cuts.push_back(x0 + (x1 - x0) * (t - y0) / (y1 - y0));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Point> pts;
  pts.reserve(cuts.size());
  for (Rational& x : cuts) {
    Rational y = (*this)(inner(x));
    pts.emplace_back(std::move(x), std::move(y));
  }
  return PLFunction(std::move(pts)).normalized();
}

PLFunction PLFunction::restrict(const Rational& lo, const Rational& hi) const {
  if (lo > hi || lo < domain_lo() || hi > domain_hi()) {
    throw OutOfRange("PLFunction: bad restriction window");
  }
  if (lo == hi) return PLFunction({{lo, (*this)(lo)}});
  std::vector<Point> pts;
  pts.emplace_back(lo, (*this)(lo));
  for (const Point& p : pts_) {
    if (p.first > lo && p.first < hi) pts.push_back(p);
  }
  pts.emplace_back(hi, (*this)(hi));
  return PLFunction(std::move(pts));
}

PLFunction PLFunction::with_breakpoints(const std::vector<Rational>& xs) const {
  std::vector<Rational> all;
  for (const Point& p : pts_) all.push_back(p.first);
  for (const Rational& x : xs) {
    if (x >= domain_lo() && x <= domain_hi()) all.push_back(x);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Point> pts;
  pts.reserve(all.size());
  for (Rational& x : all) {
    Rational y = (*this)(x);
    pts.emplace_back(std::move(x), std::move(y));
  }
  return PLFunction(std::move(pts));
}

FiniteIntervals PLFunction::zero_set() const {
  return preimage(Rational(0), Rational(0));
}

FiniteIntervals PLFunction::preimage(const Rational& lo,
                                     const Rational& hi) const {
  if (lo > hi) return {};
  FiniteIntervals out;
  if (pts_.size() == 1) {
    if (lo <= pts_[0].second && pts_[0].second <= hi) {
      out.emplace_back(pts_[0].first, pts_[0].first);
    }
    return out;
  }
  for (size_t i = 0; i + 1 < pts_.size(); ++i) {
    const auto& [x0, y0] = pts_[i];
    const auto& [x1, y1] = pts_[i + 1];
    if (y0 == y1) {
      if (lo <= y0 && y0 <= hi) out.emplace_back(x0, x1);
      continue;
    }
    // x(y) is affine; solve for the clamped value window on this piece.
    const Rational ylo = std::max(lo, std::min(y0, y1));
    const Rational yhi = std::min(hi, std::max(y0, y1));
    if (ylo > yhi) continue;
    const Rational s = (x1 - x0) / (y1 - y0);
    Rational xa = x0 + s * (ylo - y0);
    Rational xb = x0 + s * (yhi - y0);
    if (xa > xb) std::swap(xa, xb);
    out.emplace_back(std::move(xa), std::move(xb));
  }
  return normalize_intervals(std::move(out));
}

PLFunction PLFunction::normalized() const {
  if (pts_.size() <= 2) return *this;
  std::vector<Point> pts;
  pts.push_back(pts_.front());
  for (size_t i = 1; i + 1 < pts_.size(); ++i) {
    const auto& [xa, ya] = pts.back();
    const auto& [xb, yb] = pts_[i];
    const auto& [xc, yc] = pts_[i + 1];
    // Collinear iff (yb-ya)/(xb-xa) == (yc-yb)/(xc-xb), cross-multiplied.
    if ((yb - ya) * (xc - xb) == (yc - yb) * (xb - xa)) continue;
    pts.push_back(pts_[i]);
  }
  pts.push_back(pts_.back());
  return PLFunction(std::move(pts));
}

}  // namespace circact
