#include "circact/conjugacy.hpp"

#include <algorithm>

#include "circact/errors.hpp"

namespace circact {

BlockPattern block_pattern(const GapSet& K) {
  BlockPattern p;
  p.is_point.reserve(K.blocks().size());
  for (const auto& b : K.blocks()) {
    p.is_point.push_back(b.first == b.second);
  }
  return p;
}

IntervalHomeo block_matching_homeo(const GapSet& K, const GapSet& Kp,
                                   Orientation orientation) {
  if (orientation == Orientation::none) {
    throw ValidationError("block_matching_homeo: orientation required");
  }
  const auto& a = K.blocks();
  const auto& b = Kp.blocks();
  const size_t m = a.size();
  if (b.size() != m) {
    throw PatternMismatch("block_matching_homeo: block counts differ");
  }
  const bool incr = orientation == Orientation::increasing;
  std::vector<IntervalHomeo::Point> pts;
  pts.reserve(2 * m);
  for (size_t i = 0; i < m; ++i) {
    const auto& src = a[i];
    const auto& dst = b[incr ? i : m - 1 - i];
    const bool src_point = src.first == src.second;
    const bool dst_point = dst.first == dst.second;
    if (src_point != dst_point) {
      throw PatternMismatch(
          "block_matching_homeo: point/interval patterns disagree");
    }
    if (src_point) {
      pts.emplace_back(src.first, dst.first);
    } else if (incr) {
      pts.emplace_back(src.first, dst.first);
      pts.emplace_back(src.second, dst.second);
    } else {
      pts.emplace_back(src.first, dst.second);
      pts.emplace_back(src.second, dst.first);
    }
  }
  return IntervalHomeo::from_breakpoints(std::move(pts));
}

AnnulusMap lift_to_annulus(const IntervalHomeo& h) {
  return AnnulusMap(BaseLiftNode{h});
}

AnnulusMap twist_conjugator(const GapSet& K, size_t gap_index) {
  if (gap_index >= K.gap_count()) {
    throw BadIndex("twist_conjugator: gap index out of range");
  }
  const auto& gap = K.gaps()[gap_index];
  return AnnulusMap(TwistNode{gap.first, gap.second, +1});
}

ConjugacyVerdict decide_conjugacy(const GapSet& K, const SignAssignment& la,
                                  const GapSet& Kp, const SignAssignment& lap) {
  if (la.size() != K.gap_count() || lap.size() != Kp.gap_count()) {
    throw SignMismatch("decide_conjugacy: sign lengths must match gap counts");
  }
  const BlockPattern p = block_pattern(K);
  const BlockPattern q = block_pattern(Kp);
  BlockPattern q_rev = q;
  std::reverse(q_rev.is_point.begin(), q_rev.is_point.end());

  ConjugacyVerdict v;
  if (p == q) {
    v.orientation = Orientation::increasing;
  } else if (p == q_rev) {
    v.orientation = Orientation::decreasing;
  } else {
    return v;
  }
  v.conjugate = true;
  v.base_homeo = block_matching_homeo(K, Kp, v.orientation);

  // Transport the signs of K onto the gaps of K' and collect the twists
  // needed where the transported sign disagrees with lambda'.
  const size_t gaps = K.gap_count();
  const bool incr = v.orientation == Orientation::increasing;
  for (size_t jp = 0; jp < gaps; ++jp) {
    const size_t j = incr ? jp : gaps - 1 - jp;
    const int transported = incr ? la[j] : -la[j];
    if (transported != lap[jp]) {
      // Forward twist turns +1 into -1; the inverse twist goes back.
      v.twists.push_back({jp, transported > 0 ? +1 : -1});
    }
  }

  v.witness = assemble_witness(*v.base_homeo, v.twists, Kp);
  return v;
}

AnnulusMap assemble_witness(const IntervalHomeo& base,
                            const std::vector<TwistStep>& twists,
                            const GapSet& right) {
  AnnulusMap w = lift_to_annulus(base);
  for (const TwistStep& t : twists) {
    if (t.gap_index >= right.gap_count()) {
      throw BadIndex("assemble_witness: twist gap index out of range");
    }
    const auto& gap = right.gaps()[t.gap_index];
    w = AnnulusMap(TwistNode{gap.first, gap.second, t.direction}) * w;
  }
  return w;
}

ActionFamily phi_family(GapSet K, SignAssignment lambda) {
  if (lambda.size() != K.gap_count()) {
    throw SignMismatch("phi_family: sign length must equal the gap count");
  }
  return [K = std::move(K), lambda = std::move(lambda)](const CircleHomeo& f) {
    return act_phi(K, lambda, f);
  };
}

bool verify_conjugacy(const AnnulusMap& g, const ActionFamily& A,
                      const ActionFamily& B,
                      const std::vector<CircleHomeo>& test_maps,
                      const std::vector<AnnulusPoint>& sample_points) {
  for (const CircleHomeo& f : test_maps) {
    const AnnulusMap af = A(f);
    const AnnulusMap bf = B(f);
    for (const AnnulusPoint& x : sample_points) {
      if (g(af(x)) != bf(g(x))) return false;
    }
  }
  return true;
}

std::vector<CircleHomeo> standard_test_family() {
  std::vector<CircleHomeo> fam;
  fam.push_back(CircleHomeo::rotation(Rational(1, 3)));
  fam.push_back(CircleHomeo::rotation(Rational(1, 2)));
  const auto bumps = bump_family(Rational(0), Rational(1, 4), 2);
  fam.push_back(bumps[0]);
  fam.push_back(bumps[1]);
  fam.push_back(bumps[0] * CircleHomeo::rotation(Rational(1, 3)) * bumps[1]);
  return fam;
}

std::vector<AnnulusPoint> standard_grid(int n) {
  if (n < 2) throw ValidationError("standard_grid: need n >= 2");
  std::vector<AnnulusPoint> pts;
  pts.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      pts.emplace_back(Rational(i, n - 1), Rational(j, n));
    }
  }
  return pts;
}

}  // namespace circact
