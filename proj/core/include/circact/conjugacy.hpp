#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "circact/gap_set.hpp"
#include "circact/interval_homeo.hpp"
#include "circact/surface_map.hpp"

namespace circact {

enum class Orientation { increasing, decreasing, none };

// Combinatorial shadow of a GapSet: whether each block is a point.
struct BlockPattern {
  std::vector<bool> is_point;
  bool operator==(const BlockPattern&) const = default;
};

BlockPattern block_pattern(const GapSet& K);

// A twist applied on one gap of the right-hand GapSet; direction +1 is the
// forward twist (conjugates gap sign +1 to -1), -1 its inverse.
struct TwistStep {
  size_t gap_index;
  int direction;
  bool operator==(const TwistStep&) const = default;
};

struct ConjugacyVerdict {
  bool conjugate = false;
  Orientation orientation = Orientation::none;
  // Present iff conjugate: the base interval homeomorphism with h(K) = K',
  // the twist steps on gaps of K' where the transported sign disagrees, and
  // the assembled annulus witness (twists after the base lift).
  std::optional<IntervalHomeo> base_homeo;
  std::vector<TwistStep> twists;
  std::optional<AnnulusMap> witness;
};

// The PL homeomorphism of [0,1] matching blocks of K to blocks of K' (in
// order when increasing, reversed when decreasing), affine on every block
// and every gap. Throws PatternMismatch when no such homeomorphism exists.
IntervalHomeo block_matching_homeo(const GapSet& K, const GapSet& Kp,
                                   Orientation orientation);

// (r, theta) -> (h(r), theta).
AnnulusMap lift_to_annulus(const IntervalHomeo& h);

// Identity outside the chosen gap cylinder, (r, theta + zeta(r)) inside.
// Throws BadIndex for an out-of-range gap index.
AnnulusMap twist_conjugator(const GapSet& K, size_t gap_index);

// The conjugating map described by a recipe: the twist steps (on gaps of the
// right-hand GapSet) applied after the lifted base homeomorphism.
AnnulusMap assemble_witness(const IntervalHomeo& base,
                            const std::vector<TwistStep>& twists,
                            const GapSet& right);

// Decides whether the glued actions of (K, lambda) and (K', lambda') are
// conjugate. The verdict depends only on the block patterns (signs never
// obstruct: finitely many gaps can always be re-twisted); the signs shape
// the witness. Increasing orientation is preferred when both match.
ConjugacyVerdict decide_conjugacy(const GapSet& K, const SignAssignment& la,
                                  const GapSet& Kp, const SignAssignment& lap);

using ActionFamily = std::function<AnnulusMap(const CircleHomeo&)>;

ActionFamily phi_family(GapSet K, SignAssignment lambda);

// True iff g(A(f)(x)) == B(f)(g(x)) exactly for every f in test_maps and
// every x in sample_points.
bool verify_conjugacy(const AnnulusMap& g, const ActionFamily& A,
                      const ActionFamily& B,
                      const std::vector<CircleHomeo>& test_maps,
                      const std::vector<AnnulusPoint>& sample_points);

// The documented test family: rotations by 1/3 and 1/2, the first two bumps
// anchored at 0 with radius 1/4, and the composite bump0 * R_{1/3} * bump1.
std::vector<CircleHomeo> standard_test_family();

// n x n sample points: r = i/(n-1) over [0,1], theta = j/n over [0,1).
std::vector<AnnulusPoint> standard_grid(int n);

}  // namespace circact
