#include "circact/line_homeo.hpp"

#include <random>

#include "circact/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using circact::FixedIntervalSet;
using circact::LineHomeo;
using circact::make_line_homeo;
using circact::NonMonotone;
using circact::Rational;
using circact::ValidationError;

namespace {

LineHomeo bump() {
  // Supported on [0,1], pushes the middle up to 3/4.
  return make_line_homeo({{Rational(0), Rational(0)},
                          {Rational(1, 2), Rational(3, 4)},
                          {Rational(1), Rational(1)}});
}

LineHomeo random_line_homeo(std::mt19937_64& rng, int max_interior,
                            long long den) {
  std::uniform_int_distribution<int> mdist(0, max_interior);
  const int m = mdist(rng);
  std::uniform_int_distribution<long long> cdist(-den, 2 * den);
  auto draw = [&](int count) {
    std::vector<Rational> vals;
    while ((int)vals.size() < count) {
      const Rational v(cdist(rng), den);
      bool dup = false;
      for (const auto& w : vals) dup = dup || w == v;
      if (!dup) vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
  };
  const auto xs = draw(m + 2);
  std::vector<LineHomeo::Point> pts;
  pts.emplace_back(xs.front(), xs.front());
  for (int i = 0; i < m; ++i) {
    // Squeeze interior ordinates into the span so the map stays increasing.
    const Rational t(i + 1, m + 1);
    const Rational y = xs.front() + t * (xs.back() - xs.front());
    pts.emplace_back(xs[i + 1], y);
  }
  pts.emplace_back(xs.back(), xs.back());
  return make_line_homeo(std::move(pts));
}

}  // namespace

TEST_CASE("identity and evaluation") {
  const LineHomeo id;
  CHECK(id.is_identity());
  CHECK(id(Rational(17, 5)) == Rational(17, 5));

  const LineHomeo f = bump();
  CHECK(f(Rational(-3)) == Rational(-3));
  CHECK(f(Rational(0)) == Rational(0));
  CHECK(f(Rational(1, 4)) == Rational(3, 8));
  CHECK(f(Rational(3, 4)) == Rational(7, 8));
  CHECK(f(Rational(2)) == Rational(2));
}

TEST_CASE("inverse and composition") {
  const LineHomeo f = bump();
  const LineHomeo g = f.inverse();
  CHECK(g(Rational(3, 4)) == Rational(1, 2));
  CHECK(f * g == LineHomeo::identity());
  CHECK(g * f == LineHomeo::identity());

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    const LineHomeo a = random_line_homeo(rng, 3, 12);
    const LineHomeo b = random_line_homeo(rng, 3, 12);
    CHECK(a * a.inverse() == LineHomeo::identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    const Rational x = testsupport::random_rational(rng, 59) * Rational(4) -
                       Rational(2);
    CHECK((a * b)(x) == a(b(x)));
  }
}

TEST_CASE("canonicalization and validation") {
  // Interior collinear corner is dropped; fully collinear list is identity.
  CHECK(make_line_homeo({{Rational(0), Rational(0)},
                         {Rational(1, 2), Rational(1, 2)},
                         {Rational(1), Rational(1)}}) == LineHomeo::identity());
  const LineHomeo f = make_line_homeo({{Rational(0), Rational(0)},
                                       {Rational(1, 4), Rational(3, 8)},
                                       {Rational(1, 2), Rational(3, 4)},
                                       {Rational(1), Rational(1)}});
  CHECK(f == bump());

  CHECK(make_line_homeo({{Rational(0), Rational(0)}}) ==
        LineHomeo::identity());
  CHECK_THROWS_AS(make_line_homeo({{Rational(0), Rational(1, 8)},
                                   {Rational(1), Rational(1)}}),
                  ValidationError);
  CHECK_THROWS_AS(make_line_homeo({{Rational(0), Rational(0)},
                                   {Rational(1, 2), Rational(1, 4)},
                                   {Rational(1, 4), Rational(1, 2)},
                                   {Rational(1), Rational(1)}}),
                  ValidationError);
  CHECK_THROWS_AS(make_line_homeo({{Rational(0), Rational(0)},
                                   {Rational(1, 4), Rational(1, 2)},
                                   {Rational(1, 2), Rational(1, 4)},
                                   {Rational(1), Rational(1)}}),
                  NonMonotone);
}

TEST_CASE("fixed sets") {
  const LineHomeo id;
  const FixedIntervalSet whole = id.fixed_set();
  CHECK(whole.contains(Rational(-100)));
  CHECK(whole.contains(Rational(100)));

  const LineHomeo f = bump();
  const FixedIntervalSet fx = f.fixed_set();
  CHECK(fx.contains(Rational(-5)));
  CHECK(fx.contains(Rational(0)));
  CHECK(!fx.contains(Rational(1, 2)));
  CHECK(!fx.contains(Rational(99, 100)));
  CHECK(fx.contains(Rational(1)));
  CHECK(fx.contains(Rational(7)));

  // A plateau on the diagonal inside the support shows up as a bounded
  // component.
  const LineHomeo g = make_line_homeo({{Rational(0), Rational(0)},
                                       {Rational(1, 8), Rational(1, 16)},
                                       {Rational(1, 2), Rational(1, 2)},
                                       {Rational(5, 8), Rational(5, 8)},
                                       {Rational(3, 4), Rational(13, 16)},
                                       {Rational(1), Rational(1)}});
  const auto comps = g.fixed_set().bounded_components();
  REQUIRE(comps.size() == 1);
  CHECK(*comps[0].lo == Rational(1, 2));
  CHECK(*comps[0].hi == Rational(5, 8));
}
