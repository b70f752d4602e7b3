#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "circact/circle_homeo.hpp"
#include "circact/gap_set.hpp"
#include "circact/intervals.hpp"
#include "circact/line_homeo.hpp"
#include "circact/rational.hpp"
#include "circact/surface_map.hpp"

namespace circact {

// Black-box assignment f -> annulus map, queried pointwise. Oracles built
// from a materializer expose the whole image map, which unlocks the exact
// fixed-set path; query-only oracles fall back to certified bisection.
// Both kinds must be pure: same input, same output.
class AnnulusOracle {
 public:
  using Materializer = std::function<AnnulusMap(const CircleHomeo&)>;
  using Evaluator =
      std::function<AnnulusPoint(const CircleHomeo&, const AnnulusPoint&)>;

  static AnnulusOracle from_action(Materializer m);
  static AnnulusOracle from_query(Evaluator e);

  AnnulusPoint query(const CircleHomeo& f, const AnnulusPoint& p) const;
  bool materializable() const { return static_cast<bool>(mat_); }
  // Throws ValidationError on a query-only oracle.
  AnnulusMap materialize(const CircleHomeo& f) const;

 private:
  AnnulusOracle() = default;
  Materializer mat_;
  Evaluator eval_;
};

class TorusOracle {
 public:
  using Materializer = std::function<TorusMap(const CircleHomeo&)>;
  using Evaluator =
      std::function<TorusPoint(const CircleHomeo&, const TorusPoint&)>;

  static TorusOracle from_action(Materializer m);
  static TorusOracle from_query(Evaluator e);

  TorusPoint query(const CircleHomeo& f, const TorusPoint& p) const;
  bool materializable() const { return static_cast<bool>(mat_); }
  TorusMap materialize(const CircleHomeo& f) const;

 private:
  TorusOracle() = default;
  Materializer mat_;
  Evaluator eval_;
};

// Black-box assignment g -> line homeomorphism. Line recovery needs whole
// fixed sets, so this oracle always materializes.
class LineOracle {
 public:
  using Materializer = std::function<LineHomeo(const LineHomeo&)>;

  static LineOracle from_action(Materializer m);

  LineHomeo materialize(const LineHomeo& g) const;
  Rational query(const LineHomeo& g, const Rational& x) const;

 private:
  LineOracle() = default;
  Materializer mat_;
};

// Fixed slice of the sampled stabilizer along the fiber over theta0.
struct FixedFiberSet {
  FiniteIntervals r_components;  // sorted, disjoint, within [0,1]
  bool exact = true;
  Rational width_bound;  // 0 when exact, else the bisection resolution
};

// Deterministic generator family pinning theta0: members fix exactly one
// closed arc with endpoint theta0, of width 2^-(i+2), alternating to the
// right of theta0 (even i) and to the left (odd i). Any two consecutive
// members already intersect to the single point theta0, which is what makes
// recovery on model oracles exact.
std::vector<CircleHomeo> pinning_family(const Rational& theta0, int budget);

// {r : oracle(g)(r, theta0) = (r, theta0) for all g in generators}.
// Every generator must fix theta0 (GeneratorNotInStabilizer otherwise).
// Exact for materializable oracles; otherwise sampled on a dyadic grid with
// component boundaries bisected down to width 2^-20.
FixedFiberSet fiber_fixed_set(const AnnulusOracle& oracle,
                              const Rational& theta0,
                              const std::vector<CircleHomeo>& generators);

// Components of fiber_fixed_set under the pinning family of the given size,
// as a GapSet. Spot-checks that the oracle acts as a group action on the
// sampled family before trusting it.
GapSet recover_gapset(const AnnulusOracle& oracle, const Rational& theta0,
                      int generator_budget = 4);

// Sign of the displacement p1(oracle(f)(r, theta0)) - r at the gap midpoint
// for an anchored bump f >= id; retries at up to 8 further points of the gap
// when the displacement is exactly zero, then throws Inconclusive.
int detect_sign(const AnnulusOracle& oracle, const GapSet& K,
                size_t gap_index, const Rational& theta0);

SignAssignment recover_signs(const AnnulusOracle& oracle, const GapSet& K,
                             const Rational& theta0);

// Cut data of the invariant essential circle of a torus model oracle: the
// fixed set of the sampled stabilizer on the fiber {(x, theta0)}, read in
// the frame where it forms valid cut data. Tries the direct frame first,
// then the diagonal chart frame; throws EmptyFixedSet when neither yields
// one.
GapSet recover_torus_circle(const TorusOracle& oracle, const Rational& theta0,
                            int generator_budget = 4);

struct LinePointEstimate {
  Rational x;
  Rational value;  // midpoint of the final enclosure
  Rational width;  // certified enclosure width, 0 when the set collapsed
};

// For each grid point x and every radius eps in shrink_schedule (strictly
// decreasing, positive), intersects the fixed sets of the oracle images of
// two bumps supported just left and just right of (x-eps, x+eps); the unique
// bounded component of the intersection encloses h(x). Widths must strictly
// shrink along the schedule and enclosures must nest, else NoShrink.
std::vector<LinePointEstimate> recover_line_conjugacy(
    const LineOracle& oracle, const std::vector<Rational>& grid,
    const std::vector<Rational>& shrink_schedule);

}  // namespace circact
