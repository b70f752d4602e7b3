#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "circact/circle_homeo.hpp"
#include "circact/gap_set.hpp"
#include "circact/interval_homeo.hpp"
#include "circact/rational.hpp"

namespace circact {

// Point of the closed annulus [0,1] x S^1. theta is stored by its canonical
// representative in [0,1).
struct AnnulusPoint {
  Rational r;
  Rational theta;

  AnnulusPoint(Rational r_in, Rational theta_in);
  bool operator==(const AnnulusPoint&) const = default;
};

// Point of the torus S^1 x S^1, both coordinates canonical in [0,1).
struct TorusPoint {
  Rational x;
  Rational y;

  TorusPoint(Rational x_in, Rational y_in);
  bool operator==(const TorusPoint&) const = default;
};

// Disc = annulus with the r = 0 boundary collapsed to the cone point.
struct DiscPoint {
  bool cone;
  Rational r;      // in (0,1] when not the cone point
  Rational theta;  // canonical in [0,1)

  static DiscPoint cone_point();
  DiscPoint(Rational r_in, Rational theta_in);
  bool operator==(const DiscPoint&) const = default;
};

// Sphere = annulus with both boundaries collapsed: r = 0 becomes the south
// pole, r = 1 the north pole.
struct SpherePoint {
  int pole;        // -1 south, +1 north, 0 interior
  Rational r;      // in (0,1) when interior
  Rational theta;  // canonical in [0,1)

  static SpherePoint south();
  static SpherePoint north();
  SpherePoint(Rational r_in, Rational theta_in);
  bool operator==(const SpherePoint&) const = default;
};

// Primitive annulus maps. A composite map is a chain of these.
//
// Glued model action: product action (r, f(theta)) over the blocks of K and
// the renormalized one-gap action on each gap, with the branch chosen by the
// gap's sign.
struct PhiNode {
  GapSet K;
  SignAssignment lambda;
  CircleHomeo f;
};
// (r, theta) -> (h(r), theta).
struct BaseLiftNode {
  IntervalHomeo h;
};
// Identity outside the open cylinder (lo,hi) x S^1; inside,
// theta moves by direction * (r - lo)/(hi - lo).
struct TwistNode {
  Rational lo, hi;
  int direction;
};
using AnnulusNode = std::variant<PhiNode, BaseLiftNode, TwistNode>;

// Composite self-map of the annulus, stored as its chain of primitive nodes
// in application order (nodes_[0] acts first). Every node knows its exact
// inverse, so inverse() is exact and operator() is pure.
class AnnulusMap {
 public:
  AnnulusMap() = default;  // identity
  explicit AnnulusMap(AnnulusNode node);

  static AnnulusMap identity() { return AnnulusMap(); }

  const std::vector<AnnulusNode>& nodes() const { return nodes_; }

  AnnulusPoint operator()(const AnnulusPoint& p) const;
  AnnulusMap inverse() const;
  // f * g applies g first.
  friend AnnulusMap operator*(const AnnulusMap& f, const AnnulusMap& g);

 private:
  std::vector<AnnulusNode> nodes_;
};

// Primitive torus maps, on canonical coordinates in [0,1) x [0,1).
//
// PhiTorusNode: the glued model action on the torus obtained from the
// annulus by identifying (0, theta) with (1, theta); evaluated on the cut
// coordinate r in [0,1).
struct PhiTorusNode {
  GapSet K;
  SignAssignment lambda;
  CircleHomeo f;
};
// (x, y) -> (f(x), f(y)).
struct DiagNode {
  CircleHomeo f;
};
// The linear chart automorphism: direction +1 sends (r, theta) to
// (theta, theta - r); direction -1 is its inverse (x, y) -> (x - y, x).
struct ChartNode {
  int direction;
};
using TorusNode = std::variant<PhiTorusNode, DiagNode, ChartNode>;

class TorusMap {
 public:
  TorusMap() = default;
  explicit TorusMap(TorusNode node);

  static TorusMap identity() { return TorusMap(); }

  const std::vector<TorusNode>& nodes() const { return nodes_; }

  TorusPoint operator()(const TorusPoint& p) const;
  TorusMap inverse() const;
  friend TorusMap operator*(const TorusMap& f, const TorusMap& g);

 private:
  std::vector<TorusNode> nodes_;
};

// Quotients of an annulus map with invariant boundaries.
class DiscMap {
 public:
  DiscMap() = default;
  explicit DiscMap(AnnulusMap base) : base_(std::move(base)) {}

  const AnnulusMap& base() const { return base_; }
  DiscPoint operator()(const DiscPoint& p) const;
  DiscMap inverse() const { return DiscMap(base_.inverse()); }

 private:
  AnnulusMap base_;
};

class SphereMap {
 public:
  SphereMap() = default;
  explicit SphereMap(AnnulusMap base) : base_(std::move(base)) {}

  const AnnulusMap& base() const { return base_; }
  SpherePoint operator()(const SpherePoint& p) const;
  SphereMap inverse() const { return SphereMap(base_.inverse()); }

 private:
  AnnulusMap base_;
};

// Model action constructors.
AnnulusMap act_p(const CircleHomeo& f);
AnnulusMap act_a_minus(const CircleHomeo& f);
AnnulusMap act_a_plus(const CircleHomeo& f);
AnnulusMap act_phi(const GapSet& K, const SignAssignment& lambda,
                   const CircleHomeo& f);
TorusMap act_torus_diag(const CircleHomeo& f);
TorusMap act_phi_torus(const GapSet& K, const SignAssignment& lambda,
                       const CircleHomeo& f);
DiscMap act_phi_disc(const GapSet& K, const SignAssignment& lambda,
                     const CircleHomeo& f);
SphereMap act_phi_sphere(const GapSet& K, const SignAssignment& lambda,
                         const CircleHomeo& f);

// The chart (r, theta) -> (theta, theta - r) between the cut annulus and the
// torus, with its exact inverse (x, y) -> (x - y, x).
TorusPoint diag_chart(const AnnulusPoint& p);
AnnulusPoint diag_chart_inverse(const TorusPoint& p);

// Annulus rotation (r, theta) -> (r, theta + alpha).
AnnulusMap annulus_rotation(const Rational& alpha);

}  // namespace circact
