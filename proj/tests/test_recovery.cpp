#include "circact/recovery.hpp"

#include <random>
#include <vector>

#include "circact/conjugacy.hpp"
#include "circact/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace circact;

namespace {

AnnulusOracle phi_oracle(const GapSet& K, const SignAssignment& lambda) {
  return AnnulusOracle::from_action(
      [K, lambda](const CircleHomeo& f) { return act_phi(K, lambda, f); });
}

AnnulusOracle conjugated_oracle(const GapSet& K, const SignAssignment& lambda,
                                const AnnulusMap& c) {
  const AnnulusMap cinv = c.inverse();
  return AnnulusOracle::from_action([=](const CircleHomeo& f) {
    return c * act_phi(K, lambda, f) * cinv;
  });
}

GapSet half_block_set() {
  return GapSet::from_blocks(
      {{Rational(0), Rational(0)}, {Rational(1, 2), Rational(1)}});
}

GapSet three_block_set() {
  return GapSet::from_blocks({{Rational(0), Rational(0)},
                              {Rational(1, 3), Rational(1, 2)},
                              {Rational(1), Rational(1)}});
}

}  // namespace

TEST_CASE("pinning family shape") {
  const Rational th(1, 3);
  const auto fam = pinning_family(th, 4);
  REQUIRE(fam.size() == 4);
  for (const auto& g : fam) CHECK(g(th) == th);

  // First member fixes only the arc [th, th + 1/4].
  CHECK(fam[0](th + Rational(1, 8)) == th + Rational(1, 8));
  CHECK(fam[0](th + Rational(1, 4)) == th + Rational(1, 4));
  CHECK(fam[0](th + Rational(1, 2)) != th + Rational(1, 2));
  CHECK(fam[0](th - Rational(1, 16)) != th - Rational(1, 16));

  // Second member fixes only [th - 1/8, th].
  CHECK(fam[1](th - Rational(1, 16)) == th - Rational(1, 16));
  CHECK(fam[1](th + Rational(1, 16)) != th + Rational(1, 16));

  CHECK_THROWS_AS(pinning_family(th, 0), ValidationError);
}

TEST_CASE("fiber fixed set with a symmetric bump family keeps gap margins") {
  // Symmetric bumps all fix an arc around the anchor, so near-endpoint gap
  // parameters whose companion point lands in that arc survive.
  const Rational th(0);
  const auto gens = bump_family(th, Rational(1, 8), 2);

  SUBCASE("half block set") {
    const auto ffs =
        fiber_fixed_set(phi_oracle(half_block_set(), SignAssignment({-1})),
                        th, gens);
    CHECK(ffs.exact);
    CHECK(ffs.width_bound == Rational(0));
    REQUIRE(ffs.r_components.size() == 2);
    CHECK(ffs.r_components[0] ==
          std::make_pair(Rational(0), Rational(1, 16)));
    CHECK(ffs.r_components[1] == std::make_pair(Rational(7, 16), Rational(1)));
  }

  SUBCASE("boundary pair") {
    const auto ffs = fiber_fixed_set(
        AnnulusOracle::from_action(act_a_minus), th, gens);
    REQUIRE(ffs.r_components.size() == 2);
    CHECK(ffs.r_components[0] == std::make_pair(Rational(0), Rational(1, 8)));
    CHECK(ffs.r_components[1] == std::make_pair(Rational(7, 8), Rational(1)));
  }
}

TEST_CASE("fiber fixed set with the pinning family is the gap set") {
  const Rational th(0);
  const auto gens = pinning_family(th, 4);

  SUBCASE("half block set") {
    const auto ffs =
        fiber_fixed_set(phi_oracle(half_block_set(), SignAssignment({-1})),
                        th, gens);
    REQUIRE(ffs.r_components.size() == 2);
    CHECK(ffs.r_components[0] == std::make_pair(Rational(0), Rational(0)));
    CHECK(ffs.r_components[1] == std::make_pair(Rational(1, 2), Rational(1)));
  }

  SUBCASE("boundary pair") {
    const auto ffs = fiber_fixed_set(
        AnnulusOracle::from_action(act_a_minus), th, gens);
    REQUIRE(ffs.r_components.size() == 2);
    CHECK(ffs.r_components[0] == std::make_pair(Rational(0), Rational(0)));
    CHECK(ffs.r_components[1] == std::make_pair(Rational(1), Rational(1)));
  }

  SUBCASE("product action fixes the whole fiber") {
    const auto ffs =
        fiber_fixed_set(AnnulusOracle::from_action(act_p), th, gens);
    REQUIRE(ffs.r_components.size() == 1);
    CHECK(ffs.r_components[0] == std::make_pair(Rational(0), Rational(1)));
  }
}

TEST_CASE("fiber fixed set rejects generators moving the anchor") {
  const auto oracle = AnnulusOracle::from_action(act_p);
  CHECK_THROWS_AS(
      fiber_fixed_set(oracle, Rational(0), {CircleHomeo::rotation(Rational(1, 3))}),
      GeneratorNotInStabilizer);
}

TEST_CASE("generator monotonicity") {
  testsupport::Rng rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    const GapSet K = testsupport::random_gap_set(rng, 4, 16);
    const auto oracle =
        phi_oracle(K, testsupport::random_signs(rng, K.gap_count()));
    const Rational th = testsupport::random_rational(rng, 8);
    FiniteIntervals prev = {{Rational(0), Rational(1)}};
    for (int budget = 1; budget <= 4; ++budget) {
      const auto cur =
          fiber_fixed_set(oracle, th, pinning_family(th, budget)).r_components;
      CHECK(intersect_intervals(prev, cur) == cur);
      prev = cur;
    }
  }
}

TEST_CASE("fiber fixed set on the query path") {
  const Rational th(0);
  const GapSet K = half_block_set();
  const auto query_oracle = AnnulusOracle::from_query(
      [K](const CircleHomeo& f, const AnnulusPoint& p) {
        return act_phi(K, SignAssignment({-1}), f)(p);
      });

  SUBCASE("grid-aligned blocks come out exact anyway") {
    const auto ffs = fiber_fixed_set(query_oracle, th, pinning_family(th, 4));
    CHECK_FALSE(ffs.exact);
    CHECK(ffs.width_bound == dyadic(20));
    REQUIRE(ffs.r_components.size() == 2);
    CHECK(ffs.r_components[0] == std::make_pair(Rational(0), Rational(0)));
    CHECK(ffs.r_components[1] == std::make_pair(Rational(1, 2), Rational(1)));
  }

  SUBCASE("off-grid boundary is enclosed within the resolution") {
    const GapSet K3 = GapSet::from_blocks(
        {{Rational(0), Rational(0)}, {Rational(1, 3), Rational(1)}});
    const auto oracle3 = AnnulusOracle::from_query(
        [K3](const CircleHomeo& f, const AnnulusPoint& p) {
          return act_phi(K3, SignAssignment({-1}), f)(p);
        });
    const auto ffs = fiber_fixed_set(oracle3, th, pinning_family(th, 4));
    REQUIRE(ffs.r_components.size() == 2);
    const Rational lo = ffs.r_components[1].first;
    CHECK(Rational(1, 3) <= lo);
    CHECK(lo - Rational(1, 3) <= dyadic(20));
    CHECK(ffs.r_components[1].second == Rational(1));
  }
}

TEST_CASE("recover gap set round trips") {
  SUBCASE("fixed examples") {
    const auto oracle =
        phi_oracle(three_block_set(), SignAssignment({1, -1}));
    CHECK(recover_gapset(oracle, Rational(0)) == three_block_set());
    CHECK(recover_gapset(AnnulusOracle::from_action(act_p), Rational(0)) ==
          GapSet::full_interval());
  }

  SUBCASE("random draws at several anchors") {
    testsupport::Rng rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
      const GapSet K = testsupport::random_gap_set(rng, 5, 32);
      const auto lambda = testsupport::random_signs(rng, K.gap_count());
      const Rational th = testsupport::random_rational(rng, 16);
      CHECK(recover_gapset(phi_oracle(K, lambda), th) == K);
    }
  }
}

TEST_CASE("recover gap set of conjugated oracles") {
  const GapSet K = three_block_set();
  const SignAssignment lambda({1, -1});

  SUBCASE("increasing base conjugator") {
    const IntervalHomeo h = IntervalHomeo::from_breakpoints(
        {{Rational(0), Rational(0)},
         {Rational(1, 4), Rational(1, 2)},
         {Rational(1), Rational(1)}});
    const auto oracle = conjugated_oracle(K, lambda, lift_to_annulus(h));
    const GapSet expected = GapSet::from_blocks({{Rational(0), Rational(0)},
                                                 {Rational(5, 9), Rational(2, 3)},
                                                 {Rational(1), Rational(1)}});
    CHECK(recover_gapset(oracle, Rational(0)) == expected);
  }

  SUBCASE("reflecting base conjugator") {
    const auto oracle =
        conjugated_oracle(K, lambda, lift_to_annulus(IntervalHomeo::reflection()));
    const GapSet expected = GapSet::from_blocks({{Rational(0), Rational(0)},
                                                 {Rational(1, 2), Rational(2, 3)},
                                                 {Rational(1), Rational(1)}});
    CHECK(recover_gapset(oracle, Rational(1, 5)) == expected);
  }

  SUBCASE("twist conjugator leaves the gap set alone") {
    const auto oracle =
        conjugated_oracle(K, lambda, twist_conjugator(K, 0));
    CHECK(recover_gapset(oracle, Rational(0)) == K);
  }
}

TEST_CASE("recover gap set rejects non-actions") {
  SUBCASE("identity probe moved") {
    const auto oracle = AnnulusOracle::from_query(
        [](const CircleHomeo&, const AnnulusPoint& p) {
          return annulus_rotation(Rational(1, 7))(p);
        });
    CHECK_THROWS_AS(recover_gapset(oracle, Rational(0)), ValidationError);
  }

  SUBCASE("composition probe mismatch") {
    const auto oracle = AnnulusOracle::from_query(
        [](const CircleHomeo& f, const AnnulusPoint& p) {
          return act_p(f * f)(p);
        });
    CHECK_THROWS_AS(recover_gapset(oracle, Rational(0)), ValidationError);
  }
}

TEST_CASE("detect sign") {
  const GapSet K = three_block_set();

  SUBCASE("model actions per gap") {
    for (int s0 : {-1, 1}) {
      for (int s1 : {-1, 1}) {
        const auto oracle = phi_oracle(K, SignAssignment({s0, s1}));
        CHECK(detect_sign(oracle, K, 0, Rational(0)) == s0);
        CHECK(detect_sign(oracle, K, 1, Rational(0)) == s1);
      }
    }
  }

  SUBCASE("bad gap index") {
    const auto oracle = phi_oracle(K, SignAssignment({1, 1}));
    CHECK_THROWS_AS(detect_sign(oracle, K, 2, Rational(0)), BadIndex);
  }

  SUBCASE("product action probed as a gap is inconclusive") {
    const auto oracle = AnnulusOracle::from_action(act_p);
    CHECK_THROWS_AS(detect_sign(oracle, GapSet::boundary_pair(), 0, Rational(0)),
                    Inconclusive);
  }

  SUBCASE("anchored bump choice does not matter") {
    const auto oracle = phi_oracle(K, SignAssignment({-1, 1}));
    const std::vector<CircleHomeo> bumps = {
        bump_family(Rational(0), Rational(1, 8), 1)[0],
        bump_family(Rational(0), Rational(1, 4), 2)[1],
        bump_family(Rational(0), Rational(1, 16), 3)[2],
    };
    for (size_t gap = 0; gap < 2; ++gap) {
      const int expect = detect_sign(oracle, K, gap, Rational(0));
      const auto& g = K.gaps()[gap];
      const Rational mid = (g.first + g.second) / Rational(2);
      for (const auto& b : bumps) {
        const Rational moved =
            oracle.query(b, AnnulusPoint(mid, Rational(0))).r;
        CHECK((moved - mid).sign() == expect);
      }
    }
  }
}

TEST_CASE("recover signs") {
  SUBCASE("round trip with several gaps") {
    testsupport::Rng rng(77);
    for (int trial = 0; trial < 8; ++trial) {
      const GapSet K = testsupport::random_gap_set(rng, 5, 32);
      const auto lambda = testsupport::random_signs(rng, K.gap_count());
      const Rational th = testsupport::random_rational(rng, 16);
      CHECK(recover_signs(phi_oracle(K, lambda), K, th) == lambda);
    }
  }

  SUBCASE("no gaps yields the empty assignment") {
    CHECK(recover_signs(AnnulusOracle::from_action(act_p),
                        GapSet::full_interval(), Rational(0)) ==
          SignAssignment());
  }

  SUBCASE("directed twist conjugation flips the twisted gap") {
    const GapSet K = three_block_set();
    const SignAssignment lambda({1, -1});
    const AnnulusMap t0 = twist_conjugator(K, 0);
    CHECK(recover_signs(conjugated_oracle(K, lambda, t0), K, Rational(0)) ==
          SignAssignment({-1, -1}));
    const AnnulusMap t1 = twist_conjugator(K, 1).inverse();
    CHECK(recover_signs(conjugated_oracle(K, lambda, t1), K, Rational(0)) ==
          SignAssignment({1, 1}));
  }
}

TEST_CASE("recover torus circle") {
  SUBCASE("glued boundary pair") {
    const auto oracle = TorusOracle::from_action([](const CircleHomeo& f) {
      return act_phi_torus(GapSet::boundary_pair(), SignAssignment({-1}), f);
    });
    CHECK(recover_torus_circle(oracle, Rational(0)) == GapSet::boundary_pair());
    CHECK(recover_torus_circle(oracle, Rational(1, 3)) ==
          GapSet::boundary_pair());
  }

  SUBCASE("three block model") {
    const GapSet K = GapSet::from_blocks({{Rational(0), Rational(0)},
                                          {Rational(1, 4), Rational(1, 2)},
                                          {Rational(1), Rational(1)}});
    for (int s0 : {-1, 1}) {
      const auto oracle = TorusOracle::from_action([=](const CircleHomeo& f) {
        return act_phi_torus(K, SignAssignment({s0, -s0}), f);
      });
      CHECK(recover_torus_circle(oracle, Rational(0)) == K);
    }
  }

  SUBCASE("diagonal action through the chart frame") {
    const auto oracle = TorusOracle::from_action(act_torus_diag);
    CHECK(recover_torus_circle(oracle, Rational(0)) == GapSet::boundary_pair());
    CHECK(recover_torus_circle(oracle, Rational(1, 3)) ==
          GapSet::boundary_pair());
  }

  SUBCASE("query-only oracle") {
    const auto oracle = TorusOracle::from_query(
        [](const CircleHomeo& f, const TorusPoint& p) {
          return act_phi_torus(GapSet::boundary_pair(), SignAssignment({1}),
                               f)(p);
        });
    CHECK(recover_torus_circle(oracle, Rational(0)) == GapSet::boundary_pair());
  }

  SUBCASE("rotated diagonal has no fixed cut data") {
    const TorusMap rot(static_cast<TorusNode>(
        DiagNode{CircleHomeo::rotation(Rational(1, 3))}));
    const TorusMap rot_inv = rot.inverse();
    const auto oracle = TorusOracle::from_action([=](const CircleHomeo& f) {
      return rot * act_torus_diag(f) * rot_inv;
    });
    CHECK_THROWS_AS(recover_torus_circle(oracle, Rational(0)), EmptyFixedSet);
  }
}

TEST_CASE("recover line conjugacy") {
  auto conj_oracle = [](const LineHomeo& h) {
    const LineHomeo hinv = h.inverse();
    return LineOracle::from_action(
        [=](const LineHomeo& g) { return h * g * hinv; });
  };
  std::vector<Rational> schedule;
  for (int k = 2; k <= 23; ++k) schedule.push_back(dyadic(k));

  SUBCASE("hidden map is enclosed at certified width") {
    const LineHomeo h = make_line_homeo({{Rational(0), Rational(0)},
                                         {Rational(1, 2), Rational(1, 4)},
                                         {Rational(1), Rational(1)}});
    const auto got = recover_line_conjugacy(conj_oracle(h),
                                            {Rational(1, 2)}, schedule);
    REQUIRE(got.size() == 1);
    CHECK(got[0].x == Rational(1, 2));
    CHECK(got[0].width <= dyadic(20));
    CHECK(abs(got[0].value - Rational(1, 4)) <= got[0].width / Rational(2));
  }

  SUBCASE("identity oracle recovers exactly") {
    const auto got = recover_line_conjugacy(conj_oracle(LineHomeo::identity()),
                                            {Rational(1, 3), Rational(2, 3)},
                                            schedule);
    REQUIRE(got.size() == 2);
    CHECK(got[0].value == Rational(1, 3));
    CHECK(got[1].value == Rational(2, 3));
  }

  SUBCASE("recovered values increase along the grid") {
    const LineHomeo h = make_line_homeo({{Rational(0), Rational(0)},
                                         {Rational(1, 8), Rational(3, 4)},
                                         {Rational(7, 8), Rational(15, 16)},
                                         {Rational(1), Rational(1)}});
    std::vector<Rational> grid;
    for (int i = 1; i <= 5; ++i) grid.emplace_back(i, 6);
    const auto got = recover_line_conjugacy(conj_oracle(h), grid, schedule);
    REQUIRE(got.size() == grid.size());
    for (size_t i = 0; i + 1 < got.size(); ++i) {
      CHECK(got[i].value < got[i + 1].value);
      CHECK(abs(got[i].value - h(grid[i])) <= got[i].width / Rational(2));
    }
  }

  SUBCASE("trivial oracle fails the window check") {
    const auto oracle =
        LineOracle::from_action([](const LineHomeo&) { return LineHomeo(); });
    CHECK_THROWS_AS(
        recover_line_conjugacy(oracle, {Rational(1, 2)}, schedule), NoShrink);
  }

  SUBCASE("constant non-identity oracle stalls") {
    const LineHomeo b = make_line_homeo({{Rational(10), Rational(10)},
                                         {Rational(11), Rational(23, 2)},
                                         {Rational(12), Rational(12)}});
    const auto oracle =
        LineOracle::from_action([b](const LineHomeo&) { return b; });
    CHECK_THROWS_AS(
        recover_line_conjugacy(oracle, {Rational(1, 2)}, schedule), NoShrink);
  }

  SUBCASE("schedule validation") {
    const auto oracle = conj_oracle(LineHomeo::identity());
    CHECK_THROWS_AS(recover_line_conjugacy(oracle, {Rational(0)}, {}),
                    ValidationError);
    CHECK_THROWS_AS(
        recover_line_conjugacy(oracle, {Rational(0)},
                               {Rational(1, 4), Rational(1, 2)}),
        ValidationError);
  }
}
