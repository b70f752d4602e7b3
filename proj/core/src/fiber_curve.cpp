#include "circact/fiber_curve.hpp"

#include <algorithm>

#include "circact/errors.hpp"

namespace circact {

namespace {

// f-lift composed with a PL function, on a window padded so the composition
// never clips at the ends.
PLFunction lift_compose(const CircleHomeo& f, const PLFunction& g) {
  const Rational lo = g.min_value() - Rational(1);
  const Rational hi = g.max_value() + Rational(1);
  return f.lift_restriction(lo, hi).compose(g);
}

// Parameter cuts where rho crosses any of the given values.
std::vector<Rational> crossing_cuts(const PLFunction& rho,
                                    const std::vector<Rational>& values) {
  std::vector<Rational> cuts{rho.domain_lo(), rho.domain_hi()};
  for (const Rational& v : values) {
    for (const auto& iv : rho.preimage(v, v)) {
      cuts.push_back(iv.first);
      cuts.push_back(iv.second);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

// Glued-action image of one segment whose rho range lies inside [0,1].
void push_phi_segment(const CurveSegment& seg, const GapSet& K,
                      const SignAssignment& lambda, const CircleHomeo& f,
                      std::vector<CurveSegment>& out) {
  std::vector<Rational> boundary;
  for (const auto& b : K.blocks()) {
    boundary.push_back(b.first);
    boundary.push_back(b.second);
  }
  const auto cuts = crossing_cuts(seg.rho, boundary);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational& lo = cuts[i];
    const Rational& hi = cuts[i + 1];
    if (!(lo < hi)) continue;
    const PLFunction rho = seg.rho.restrict(lo, hi);
    const PLFunction tau = seg.tau.restrict(lo, hi);
    const auto loc = K.locate(rho((lo + hi) / Rational(2)));
    const PLFunction f_tau = lift_compose(f, tau);
    if (loc.in_block) {
      out.push_back({rho, f_tau});
      continue;
    }
    const auto& gap = K.gaps()[loc.index];
    const Rational len = gap.second - gap.first;
    const PLFunction zeta =
        rho.shifted(-gap.first).scaled(Rational(1) / len);
    PLFunction moved = lambda[loc.index] > 0
                           ? lift_compose(f, tau + zeta) - f_tau
                           : f_tau - lift_compose(f, tau - zeta);
    out.push_back({moved.scaled(len).shifted(gap.first), f_tau});
  }
}

void push_twist_segment(const CurveSegment& seg, const Rational& lo,
                        const Rational& hi, int direction,
                        std::vector<CurveSegment>& out) {
  const auto cuts = crossing_cuts(seg.rho, {lo, hi});
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational& a = cuts[i];
    const Rational& b = cuts[i + 1];
    if (!(a < b)) continue;
    const PLFunction rho = seg.rho.restrict(a, b);
    PLFunction tau = seg.tau.restrict(a, b);
    const Rational mid_r = rho((a + b) / Rational(2));
    if (lo < mid_r && mid_r < hi) {
      const PLFunction zeta =
          rho.shifted(-lo).scaled(Rational(direction) / (hi - lo));
      tau = tau + zeta;
    }
    out.push_back({rho, tau});
  }
}

std::vector<Rational> integer_values_in(const Rational& lo,
                                        const Rational& hi) {
  std::vector<Rational> vals;
  for (long long n = lo.floor_ll(); n <= hi.floor_ll() + 1; ++n) {
    const Rational v(n);
    if (lo <= v && v <= hi) vals.push_back(v);
  }
  return vals;
}

}  // namespace

FiberCurve FiberCurve::vertical(const Rational& theta0) {
  CurveSegment seg{PLFunction::identity(Rational(0), Rational(1)),
                   PLFunction::constant(Rational(0), Rational(1), theta0)};
  return FiberCurve({std::move(seg)});
}

FiberCurve FiberCurve::pushed(const AnnulusNode& node) const {
  std::vector<CurveSegment> out;
  for (const CurveSegment& seg : segments_) {
    if (const auto* phi = std::get_if<PhiNode>(&node)) {
      push_phi_segment(seg, phi->K, phi->lambda, phi->f, out);
    } else if (const auto* lift = std::get_if<BaseLiftNode>(&node)) {
      out.push_back({lift->h.as_pl().compose(seg.rho), seg.tau});
    } else {
      const auto& tw = std::get<TwistNode>(node);
      push_twist_segment(seg, tw.lo, tw.hi, tw.direction, out);
    }
  }
  return FiberCurve(std::move(out));
}

FiberCurve FiberCurve::pushed(const AnnulusMap& map) const {
  FiberCurve c = *this;
  for (const AnnulusNode& node : map.nodes()) c = c.pushed(node);
  return c;
}

FiberCurve FiberCurve::pushed(const TorusNode& node) const {
  std::vector<CurveSegment> out;
  for (const CurveSegment& seg : segments_) {
    if (const auto* phi = std::get_if<PhiTorusNode>(&node)) {
      // Reduce rho into [0,1] piece by piece; the glued action commutes
      // with integer translation of the first coordinate.
      const auto cuts = crossing_cuts(
          seg.rho, integer_values_in(seg.rho.min_value() - Rational(1),
                                     seg.rho.max_value() + Rational(1)));
      for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i] < cuts[i + 1])) continue;
        const PLFunction rho = seg.rho.restrict(cuts[i], cuts[i + 1]);
        const PLFunction tau = seg.tau.restrict(cuts[i], cuts[i + 1]);
        const Rational m = rho((cuts[i] + cuts[i + 1]) / Rational(2)).floor();
        std::vector<CurveSegment> pieces;
        push_phi_segment({rho.shifted(-m), tau}, phi->K, phi->lambda, phi->f,
                         pieces);
        for (CurveSegment& s : pieces) {
          out.push_back({s.rho.shifted(m), s.tau});
        }
      }
    } else if (const auto* diag = std::get_if<DiagNode>(&node)) {
      out.push_back({lift_compose(diag->f, seg.rho),
                     lift_compose(diag->f, seg.tau)});
    } else {
      const auto& chart = std::get<ChartNode>(node);
      if (chart.direction > 0) {
        out.push_back({seg.tau, seg.tau - seg.rho});
      } else {
        out.push_back({seg.rho - seg.tau, seg.rho});
      }
    }
  }
  return FiberCurve(std::move(out));
}

FiberCurve FiberCurve::pushed(const TorusMap& map) const {
  FiberCurve c = *this;
  for (const TorusNode& node : map.nodes()) c = c.pushed(node);
  return c;
}

AnnulusPoint FiberCurve::at(const Rational& t) const {
  const auto raw = at_raw(t);
  return AnnulusPoint(raw.first, mod1(raw.second));
}

std::pair<Rational, Rational> FiberCurve::at_raw(const Rational& t) const {
  for (const CurveSegment& seg : segments_) {
    if (seg.rho.domain_lo() <= t && t <= seg.rho.domain_hi()) {
      return {seg.rho(t), seg.tau(t)};
    }
  }
  throw OutOfRange("FiberCurve::at: parameter outside [0,1]");
}

FiniteIntervals FiberCurve::fixed_parameters(const Rational& theta0) const {
  FiniteIntervals result;
  for (const CurveSegment& seg : segments_) {
    const FiniteIntervals stay =
        (seg.rho - PLFunction::identity(seg.rho.domain_lo(),
                                        seg.rho.domain_hi()))
            .zero_set();
    if (stay.empty()) continue;
    FiniteIntervals level;
    for (const Rational& n :
         integer_values_in(seg.tau.min_value() - theta0,
                           seg.tau.max_value() - theta0)) {
      for (const auto& iv : seg.tau.preimage(theta0 + n, theta0 + n)) {
        level.push_back(iv);
      }
    }
    for (const auto& iv : intersect_intervals(
             stay, normalize_intervals(std::move(level)))) {
      result.push_back(iv);
    }
  }
  return normalize_intervals(std::move(result));
}

FiniteIntervals FiberCurve::fixed_parameters_mod1(
    const Rational& theta0) const {
  FiniteIntervals result;
  for (const CurveSegment& seg : segments_) {
    const PLFunction drift =
        seg.rho - PLFunction::identity(seg.rho.domain_lo(),
                                       seg.rho.domain_hi());
    FiniteIntervals stay;
    for (const Rational& m :
         integer_values_in(drift.min_value(), drift.max_value())) {
      for (const auto& iv : drift.preimage(m, m)) stay.push_back(iv);
    }
    stay = normalize_intervals(std::move(stay));
    if (stay.empty()) continue;
    FiniteIntervals level;
    for (const Rational& n :
         integer_values_in(seg.tau.min_value() - theta0,
                           seg.tau.max_value() - theta0)) {
      for (const auto& iv : seg.tau.preimage(theta0 + n, theta0 + n)) {
        level.push_back(iv);
      }
    }
    for (const auto& iv : intersect_intervals(
             stay, normalize_intervals(std::move(level)))) {
      result.push_back(iv);
    }
  }
  return normalize_intervals(std::move(result));
}

}  // namespace circact
