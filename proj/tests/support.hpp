#pragma once

#include <random>
#include <set>
#include <vector>

#include "circact/circle_homeo.hpp"
#include "circact/gap_set.hpp"
#include "circact/rational.hpp"

namespace testsupport {

using circact::CircleHomeo;
using circact::GapSet;
using circact::Rational;
using circact::SignAssignment;

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long long max_den) {
  std::uniform_int_distribution<long long> dden(1, max_den);
  const long long d = dden(rng);
  std::uniform_int_distribution<long long> dnum(0, d - 1);
  return Rational(dnum(rng), d);
}

// Strictly increasing PL circle map with up to max_bps breakpoints whose
// coordinates have denominator dividing `den`.
inline CircleHomeo random_circle_homeo(Rng& rng, int max_bps, long long den) {
  std::uniform_int_distribution<int> dcount(1, max_bps);
  const int m = dcount(rng);
  std::uniform_int_distribution<long long> dval(0, den - 1);
  auto draw_sorted = [&](int k) {
    std::set<long long> s;
    while (static_cast<int>(s.size()) < k) s.insert(dval(rng));
    return std::vector<long long>(s.begin(), s.end());
  };
  const auto xs = draw_sorted(m);
  const auto ys = draw_sorted(m);
  std::vector<CircleHomeo::Point> pts;
  pts.reserve(m);
  for (int i = 0; i < m; ++i) {
    pts.emplace_back(Rational(xs[i], den), Rational(ys[i], den));
  }
  return make_circle_homeo(std::move(pts));
}

// GapSet with up to max_gaps gaps and endpoints on the grid of denominator
// `den`.
inline GapSet random_gap_set(Rng& rng, int max_gaps, long long den) {
  std::uniform_int_distribution<int> dgaps(0, max_gaps);
  const int gaps = dgaps(rng);
  const int blocks = gaps + 1;
  std::uniform_int_distribution<long long> dval(0, den);
  for (;;) {
    std::vector<long long> cuts;
    cuts.reserve(2 * blocks);
    cuts.push_back(0);
    for (int i = 0; i < 2 * blocks - 2; ++i) cuts.push_back(dval(rng));
    cuts.push_back(den);
    std::sort(cuts.begin(), cuts.end());
    std::vector<GapSet::Block> bs;
    bool ok = true;
    for (int i = 0; i < blocks; ++i) {
      const long long a = cuts[2 * i], b = cuts[2 * i + 1];
      if (i > 0 && cuts[2 * i - 1] == a) {
        ok = false;  // empty gap
        break;
      }
      bs.emplace_back(Rational(a, den), Rational(b, den));
    }
    if (ok) return GapSet::from_blocks(std::move(bs));
  }
}

inline SignAssignment random_signs(Rng& rng, size_t gaps) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> s;
  s.reserve(gaps);
  for (size_t i = 0; i < gaps; ++i) s.push_back(coin(rng) ? 1 : -1);
  return SignAssignment(std::move(s));
}

}  // namespace testsupport
