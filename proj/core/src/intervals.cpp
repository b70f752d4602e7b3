#include "circact/intervals.hpp"

#include <algorithm>

namespace circact {

FiniteIntervals normalize_intervals(FiniteIntervals in) {
  FiniteIntervals kept;
  kept.reserve(in.size());
  for (auto& iv : in) {
    if (iv.first <= iv.second) kept.push_back(std::move(iv));
  }
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  FiniteIntervals out;
  for (auto& iv : kept) {
    if (!out.empty() && iv.first <= out.back().second) {
      if (iv.second > out.back().second) out.back().second = iv.second;
    } else {
      out.push_back(std::move(iv));
    }
  }
  return out;
}

FiniteIntervals intersect_intervals(const FiniteIntervals& a,
                                    const FiniteIntervals& b) {
  FiniteIntervals out;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const Rational& lo = std::max(a[i].first, b[j].first);
    const Rational& hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

bool intervals_contain(const FiniteIntervals& a, const Rational& x) {
  auto it = std::upper_bound(
      a.begin(), a.end(), x,
      [](const Rational& v, const auto& iv) { return v < iv.first; });
  if (it == a.begin()) return false;
  --it;
  return x <= it->second;
}

namespace {

// -infinity sorts before any finite lower endpoint.
bool lo_less(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b.has_value();
  if (!b) return false;
  return *a < *b;
}

}  // namespace

FixedIntervalSet FixedIntervalSet::whole_line() {
  FixedIntervalSet s;
  s.comps_.push_back({std::nullopt, std::nullopt});
  return s;
}

FixedIntervalSet FixedIntervalSet::from_components(
    std::vector<Component> comps) {
  std::erase_if(comps, [](const Component& c) {
    return c.bounded() && *c.lo > *c.hi;
  });
  std::sort(comps.begin(), comps.end(), [](const Component& a,
                                           const Component& b) {
    return lo_less(a.lo, b.lo);
  });
  FixedIntervalSet s;
  for (auto& c : comps) {
    if (!s.comps_.empty()) {
      Component& prev = s.comps_.back();
      // prev.hi == nullopt swallows everything after it.
      bool overlap = !prev.hi.has_value() ||
                     (!c.lo.has_value() || *c.lo <= *prev.hi);
      if (overlap) {
        if (prev.hi.has_value() && (!c.hi.has_value() || *c.hi > *prev.hi)) {
          prev.hi = c.hi;
        }
        continue;
      }
    }
    s.comps_.push_back(std::move(c));
  }
  return s;
}

bool FixedIntervalSet::contains(const Rational& x) const {
  for (const Component& c : comps_) {
    bool lo_ok = !c.lo.has_value() || *c.lo <= x;
    bool hi_ok = !c.hi.has_value() || x <= *c.hi;
    if (lo_ok && hi_ok) return true;
    if (c.lo.has_value() && *c.lo > x) break;
  }
  return false;
}

FixedIntervalSet FixedIntervalSet::intersect(
    const FixedIntervalSet& other) const {
  std::vector<Component> out;
  for (const Component& a : comps_) {
    for (const Component& b : other.comps_) {
      Component c;
      c.lo = !a.lo ? b.lo : (!b.lo ? a.lo : std::optional(std::max(*a.lo, *b.lo)));
      c.hi = !a.hi ? b.hi : (!b.hi ? a.hi : std::optional(std::min(*a.hi, *b.hi)));
      bool nonempty = !c.lo || !c.hi || *c.lo <= *c.hi;
      if (nonempty) out.push_back(std::move(c));
    }
  }
  return from_components(std::move(out));
}

std::vector<FixedIntervalSet::Component> FixedIntervalSet::bounded_components()
    const {
  std::vector<Component> out;
  for (const Component& c : comps_) {
    if (c.bounded()) out.push_back(c);
  }
  return out;
}

}  // namespace circact
