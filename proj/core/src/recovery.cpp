#include "circact/recovery.hpp"

#include <optional>

#include "circact/errors.hpp"
#include "circact/fiber_curve.hpp"

namespace circact {

namespace {

constexpr long long kScanCells = 64;
const int kBisectionBits = 20;

// Inner enclosure of {x in [0,1] : member(x)} from a dyadic scan, with each
// component boundary bisected against a certified (moved, fixed) bracket
// until the bracket is narrower than 2^-kBisectionBits. Components thinner
// than the scan pitch are found only when they touch a grid point.
FiniteIntervals scan_components(
    const std::function<bool(const Rational&)>& member) {
  const Rational res = dyadic(kBisectionBits);
  std::vector<bool> fixed(kScanCells + 1);
  for (long long j = 0; j <= kScanCells; ++j) {
    fixed[j] = member(Rational(j, kScanCells));
  }

  auto tighten = [&](Rational moved, Rational held) {
    while (abs(held - moved) > res) {
      const Rational mid = (moved + held) / Rational(2);
      (member(mid) ? held : moved) = mid;
    }
    return held;
  };

  FiniteIntervals out;
  long long j = 0;
  while (j <= kScanCells) {
    if (!fixed[j]) {
      ++j;
      continue;
    }
    const long long j0 = j;
    while (j + 1 <= kScanCells && fixed[j + 1]) ++j;
    Rational lo(j0, kScanCells);
    Rational hi(j, kScanCells);
    if (j0 > 0) lo = tighten(Rational(j0 - 1, kScanCells), lo);
    if (j < kScanCells) hi = tighten(Rational(j + 1, kScanCells), hi);
    out.emplace_back(lo, hi);
    ++j;
  }
  return out;
}

void require_in_stabilizer(const CircleHomeo& g, const Rational& theta0) {
  if (g(theta0) != theta0) {
    throw GeneratorNotInStabilizer(
        "fiber_fixed_set: generator does not fix the anchor point");
  }
}

// Group-action spot check: the oracle must send compositions to
// compositions and the identity to the identity on a couple of probes.
template <typename Oracle, typename Point>
void spot_check_action(const Oracle& oracle,
                       const std::vector<CircleHomeo>& family,
                       const std::vector<Point>& probes) {
  for (const Point& p : probes) {
    if (oracle.query(CircleHomeo::identity(), p) != p) {
      throw ValidationError(
          "oracle is not a group action on the sampled family: identity "
          "probe moved");
    }
  }
  if (family.size() < 2) return;
  const CircleHomeo& g0 = family[0];
  const CircleHomeo& g1 = family[1];
  for (const Point& p : probes) {
    if (oracle.query(g0 * g1, p) != oracle.query(g0, oracle.query(g1, p))) {
      throw ValidationError(
          "oracle is not a group action on the sampled family: composition "
          "probe mismatch");
    }
  }
}

Rational displacement(const AnnulusOracle& oracle, const CircleHomeo& f,
                      const Rational& r, const Rational& theta0) {
  return oracle.query(f, AnnulusPoint(r, theta0)).r - r;
}

LineHomeo line_tent(const Rational& lo, const Rational& hi) {
  const Rational mid = (lo + hi) / Rational(2);
  return make_line_homeo(
      {{lo, lo}, {mid, mid + (hi - lo) / Rational(4)}, {hi, hi}});
}

}  // namespace

AnnulusOracle AnnulusOracle::from_action(Materializer m) {
  if (!m) throw ValidationError("oracle needs a callable materializer");
  AnnulusOracle o;
  o.mat_ = std::move(m);
  o.eval_ = [mat = o.mat_](const CircleHomeo& f, const AnnulusPoint& p) {
    return mat(f)(p);
  };
  return o;
}

AnnulusOracle AnnulusOracle::from_query(Evaluator e) {
  if (!e) throw ValidationError("oracle needs a callable evaluator");
  AnnulusOracle o;
  o.eval_ = std::move(e);
  return o;
}

AnnulusPoint AnnulusOracle::query(const CircleHomeo& f,
                                  const AnnulusPoint& p) const {
  return eval_(f, p);
}

AnnulusMap AnnulusOracle::materialize(const CircleHomeo& f) const {
  if (!mat_) throw ValidationError("oracle is query-only");
  return mat_(f);
}

TorusOracle TorusOracle::from_action(Materializer m) {
  if (!m) throw ValidationError("oracle needs a callable materializer");
  TorusOracle o;
  o.mat_ = std::move(m);
  o.eval_ = [mat = o.mat_](const CircleHomeo& f, const TorusPoint& p) {
    return mat(f)(p);
  };
  return o;
}

TorusOracle TorusOracle::from_query(Evaluator e) {
  if (!e) throw ValidationError("oracle needs a callable evaluator");
  TorusOracle o;
  o.eval_ = std::move(e);
  return o;
}

TorusPoint TorusOracle::query(const CircleHomeo& f,
                              const TorusPoint& p) const {
  return eval_(f, p);
}

TorusMap TorusOracle::materialize(const CircleHomeo& f) const {
  if (!mat_) throw ValidationError("oracle is query-only");
  return mat_(f);
}

LineOracle LineOracle::from_action(Materializer m) {
  if (!m) throw ValidationError("oracle needs a callable materializer");
  LineOracle o;
  o.mat_ = std::move(m);
  return o;
}

LineHomeo LineOracle::materialize(const LineHomeo& g) const {
  return mat_(g);
}

Rational LineOracle::query(const LineHomeo& g, const Rational& x) const {
  return mat_(g)(x);
}

std::vector<CircleHomeo> pinning_family(const Rational& theta0, int budget) {
  if (budget < 1) {
    throw ValidationError("pinning_family: budget must be >= 1");
  }
  std::vector<CircleHomeo> out;
  out.reserve(static_cast<size_t>(budget));
  for (int i = 0; i < budget; ++i) {
    const Rational half = dyadic(i + 3);  // fixed arc width 2^-(i+2)
    const Rational center =
        i % 2 == 0 ? theta0 + half : theta0 - half;
    out.push_back(bump_family(center, half, 1)[0]);
  }
  return out;
}

FixedFiberSet fiber_fixed_set(const AnnulusOracle& oracle,
                              const Rational& theta0,
                              const std::vector<CircleHomeo>& generators) {
  const Rational th = mod1(theta0);
  for (const CircleHomeo& g : generators) require_in_stabilizer(g, th);

  FixedFiberSet result;
  result.r_components = {{Rational(0), Rational(1)}};
  result.exact = oracle.materializable();
  result.width_bound =
      result.exact ? Rational(0) : dyadic(kBisectionBits);

  for (const CircleHomeo& g : generators) {
    FiniteIntervals part;
    if (result.exact) {
      part = FiberCurve::vertical(th)
                 .pushed(oracle.materialize(g))
                 .fixed_parameters(th);
    } else {
      part = scan_components([&](const Rational& r) {
        const AnnulusPoint q = oracle.query(g, AnnulusPoint(r, th));
        return q.r == r && q.theta == th;
      });
    }
    result.r_components = intersect_intervals(result.r_components, part);
    if (result.r_components.empty()) break;
  }
  return result;
}

GapSet recover_gapset(const AnnulusOracle& oracle, const Rational& theta0,
                      int generator_budget) {
  const Rational th = mod1(theta0);
  const auto family = pinning_family(th, generator_budget);
  spot_check_action(oracle, family,
                    std::vector<AnnulusPoint>{
                        AnnulusPoint(Rational(1, 3), mod1(th + Rational(1, 5))),
                        AnnulusPoint(Rational(5, 7), mod1(th + Rational(3, 11)))});
  const FixedFiberSet ffs = fiber_fixed_set(oracle, th, family);
  return GapSet::from_blocks(ffs.r_components);
}

int detect_sign(const AnnulusOracle& oracle, const GapSet& K,
                size_t gap_index, const Rational& theta0) {
  if (gap_index >= K.gap_count()) {
    throw BadIndex("detect_sign: gap index out of range");
  }
  const Rational th = mod1(theta0);
  const CircleHomeo bump = bump_family(th, Rational(1, 8), 1)[0];
  const auto& gap = K.gaps()[gap_index];
  const Rational len = gap.second - gap.first;

  static const std::pair<long long, long long> kProbes[] = {
      {1, 2}, {1, 3}, {2, 5}, {3, 7}, {4, 9},
      {5, 11}, {6, 13}, {7, 15}, {8, 17}};
  for (const auto& [num, den] : kProbes) {
    const Rational r = gap.first + len * Rational(num, den);
    const int s = displacement(oracle, bump, r, th).sign();
    if (s != 0) return s;
  }
  throw Inconclusive(
      "detect_sign: displacement is zero at every probe of the gap");
}

SignAssignment recover_signs(const AnnulusOracle& oracle, const GapSet& K,
                             const Rational& theta0) {
  std::vector<int> signs;
  signs.reserve(K.gap_count());
  for (size_t i = 0; i < K.gap_count(); ++i) {
    signs.push_back(detect_sign(oracle, K, i, theta0));
  }
  return SignAssignment(std::move(signs));
}

namespace {

FiniteIntervals torus_fiber_components(const TorusOracle& oracle,
                                       const std::vector<CircleHomeo>& family,
                                       const Rational& th,
                                       const TorusMap& pre,
                                       const TorusMap& post) {
  FiniteIntervals comps = {{Rational(0), Rational(1)}};
  for (const CircleHomeo& g : family) {
    FiniteIntervals part;
    if (oracle.materializable()) {
      part = FiberCurve::vertical(th)
                 .pushed(post * oracle.materialize(g) * pre)
                 .fixed_parameters_mod1(th);
    } else {
      part = scan_components([&](const Rational& x) {
        const TorusPoint p = pre(TorusPoint(mod1(x), th));
        const TorusPoint q = post(oracle.query(g, p));
        return q == TorusPoint(mod1(x), th);
      });
    }
    comps = intersect_intervals(comps, part);
    if (comps.empty()) break;
  }
  return comps;
}

}  // namespace

GapSet recover_torus_circle(const TorusOracle& oracle, const Rational& theta0,
                            int generator_budget) {
  const Rational th = mod1(theta0);
  const auto family = pinning_family(th, generator_budget);
  spot_check_action(oracle, family,
                    std::vector<TorusPoint>{
                        TorusPoint(Rational(1, 3), mod1(th + Rational(1, 5))),
                        TorusPoint(Rational(5, 7), mod1(th + Rational(3, 11)))});

  // Direct frame: the fiber {(x, th)} of the cut coordinate.
  try {
    return GapSet::from_blocks(torus_fiber_components(
        oracle, family, th, TorusMap::identity(), TorusMap::identity()));
  } catch (const ValidationError&) {
  }
  // Diagonal chart frame: read the fixed set through the chart, where a
  // diagonal-type oracle becomes a glued model action on the cut annulus.
  try {
    return GapSet::from_blocks(torus_fiber_components(
        oracle, family, th, TorusMap(ChartNode{1}),
        TorusMap(ChartNode{-1})));
  } catch (const ValidationError&) {
  }
  throw EmptyFixedSet(
      "recover_torus_circle: no frame yields valid invariant-circle cut "
      "data; the oracle does not look like a model action");
}

std::vector<LinePointEstimate> recover_line_conjugacy(
    const LineOracle& oracle, const std::vector<Rational>& grid,
    const std::vector<Rational>& shrink_schedule) {
  if (shrink_schedule.empty()) {
    throw ValidationError("recover_line_conjugacy: empty shrink schedule");
  }
  for (size_t i = 0; i < shrink_schedule.size(); ++i) {
    if (shrink_schedule[i].sign() <= 0 ||
        (i > 0 && !(shrink_schedule[i] < shrink_schedule[i - 1]))) {
      throw ValidationError(
          "recover_line_conjugacy: shrink schedule must be positive and "
          "strictly decreasing");
    }
  }
  std::vector<LinePointEstimate> out;
  if (grid.empty()) return out;

  // Degenerate-oracle check: a bump covering the whole probed window must
  // not be sent to the identity.
  {
    Rational lo = grid.front(), hi = grid.front();
    for (const Rational& x : grid) {
      lo = x < lo ? x : lo;
      hi = hi < x ? x : hi;
    }
    const Rational pad = shrink_schedule.front() * Rational(2);
    if (oracle.materialize(line_tent(lo - pad, hi + pad)).is_identity()) {
      throw NoShrink(
          "recover_line_conjugacy: oracle image fixes the probed window "
          "pointwise");
    }
  }

  out.reserve(grid.size());
  for (const Rational& x : grid) {
    std::optional<std::pair<Rational, Rational>> enclosure;
    for (const Rational& eps : shrink_schedule) {
      const FixedIntervalSet fs =
          oracle.materialize(line_tent(x - eps * Rational(2), x - eps))
              .fixed_set()
              .intersect(oracle
                             .materialize(line_tent(x + eps,
                                                    x + eps * Rational(2)))
                             .fixed_set());
      std::optional<std::pair<Rational, Rational>> found;
      for (const auto& c : fs.bounded_components()) {
        if (enclosure &&
            (*c.lo < enclosure->first || enclosure->second < *c.hi)) {
          continue;  // not nested in the previous enclosure
        }
        if (found) {
          throw NoShrink(
              "recover_line_conjugacy: enclosure is ambiguous on this "
              "window");
        }
        found = {*c.lo, *c.hi};
      }
      if (!found) {
        throw NoShrink(
            "recover_line_conjugacy: no nested bounded fixed component");
      }
      if (enclosure) {
        const Rational prev = enclosure->second - enclosure->first;
        if (!(found->second - found->first < prev)) {
          throw NoShrink(
              "recover_line_conjugacy: enclosure width stalled");
        }
      }
      enclosure = found;
    }
    out.push_back({x, (enclosure->first + enclosure->second) / Rational(2),
                   enclosure->second - enclosure->first});
  }
  return out;
}

}  // namespace circact
