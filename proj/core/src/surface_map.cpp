#include "circact/surface_map.hpp"

#include "circact/errors.hpp"

namespace circact {

AnnulusPoint::AnnulusPoint(Rational r_in, Rational theta_in)
    : r(std::move(r_in)), theta(mod1(theta_in)) {
  if (r.sign() < 0 || r > Rational(1)) {
    throw OutOfRange("AnnulusPoint: r outside [0,1]");
  }
}

TorusPoint::TorusPoint(Rational x_in, Rational y_in)
    : x(mod1(x_in)), y(mod1(y_in)) {}

DiscPoint DiscPoint::cone_point() {
  DiscPoint p(Rational(1), Rational(0));
  p.cone = true;
  p.r = 0;
  return p;
}

DiscPoint::DiscPoint(Rational r_in, Rational theta_in)
    : cone(false), r(std::move(r_in)), theta(mod1(theta_in)) {
  if (r.sign() <= 0 || r > Rational(1)) {
    throw OutOfRange("DiscPoint: r outside (0,1]");
  }
}

SpherePoint SpherePoint::south() {
  SpherePoint p(Rational(1, 2), Rational(0));
  p.pole = -1;
  p.r = 0;
  p.theta = 0;
  return p;
}

SpherePoint SpherePoint::north() {
  SpherePoint p = south();
  p.pole = 1;
  p.r = 1;
  return p;
}

SpherePoint::SpherePoint(Rational r_in, Rational theta_in)
    : pole(0), r(std::move(r_in)), theta(mod1(theta_in)) {
  if (r.sign() <= 0 || r >= Rational(1)) {
    throw OutOfRange("SpherePoint: interior r outside (0,1)");
  }
}

namespace {

AnnulusPoint eval_phi(const PhiNode& n, const AnnulusPoint& p) {
  const auto loc = n.K.locate(p.r);
  const Rational ftheta = n.f.lift(p.theta);
  if (loc.in_block) {
    return AnnulusPoint(p.r, mod1(ftheta));
  }
  const auto& gap = n.K.gaps()[loc.index];
  const Rational len = gap.second - gap.first;
  const Rational s = (p.r - gap.first) / len;
  Rational rp;
  if (n.lambda[loc.index] < 0) {
    rp = gap.first + len * (ftheta - n.f.lift(p.theta - s));
  } else {
    rp = gap.first + len * (n.f.lift(p.theta + s) - ftheta);
  }
  return AnnulusPoint(std::move(rp), mod1(ftheta));
}

AnnulusPoint eval_node(const AnnulusNode& node, const AnnulusPoint& p) {
  if (const auto* phi = std::get_if<PhiNode>(&node)) {
    return eval_phi(*phi, p);
  }
  if (const auto* bl = std::get_if<BaseLiftNode>(&node)) {
    return AnnulusPoint(bl->h(p.r), p.theta);
  }
  const auto& tw = std::get<TwistNode>(node);
  if (p.r <= tw.lo || p.r >= tw.hi) return p;
  const Rational z = (p.r - tw.lo) / (tw.hi - tw.lo);
  return AnnulusPoint(p.r,
                      tw.direction > 0 ? p.theta + z : p.theta - z);
}

AnnulusNode invert_node(const AnnulusNode& node) {
  if (const auto* phi = std::get_if<PhiNode>(&node)) {
    return PhiNode{phi->K, phi->lambda, phi->f.inverse()};
  }
  if (const auto* bl = std::get_if<BaseLiftNode>(&node)) {
    return BaseLiftNode{bl->h.inverse()};
  }
  const auto& tw = std::get<TwistNode>(node);
  return TwistNode{tw.lo, tw.hi, -tw.direction};
}

}  // namespace

AnnulusMap::AnnulusMap(AnnulusNode node) { nodes_.push_back(std::move(node)); }

AnnulusPoint AnnulusMap::operator()(const AnnulusPoint& p) const {
  AnnulusPoint q = p;
  for (const AnnulusNode& n : nodes_) q = eval_node(n, q);
  return q;
}

AnnulusMap AnnulusMap::inverse() const {
  AnnulusMap out;
  out.nodes_.reserve(nodes_.size());
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    out.nodes_.push_back(invert_node(*it));
  }
  return out;
}

AnnulusMap operator*(const AnnulusMap& f, const AnnulusMap& g) {
  AnnulusMap out;
  out.nodes_.reserve(f.nodes_.size() + g.nodes_.size());
  out.nodes_.insert(out.nodes_.end(), g.nodes_.begin(), g.nodes_.end());
  out.nodes_.insert(out.nodes_.end(), f.nodes_.begin(), f.nodes_.end());
  return out;
}

namespace {

void check_signs(const GapSet& K, const SignAssignment& lambda) {
  if (lambda.size() != K.gap_count()) {
    throw SignMismatch("sign assignment length must equal the gap count");
  }
}

TorusPoint eval_node(const TorusNode& node, const TorusPoint& p) {
  if (const auto* phi = std::get_if<PhiTorusNode>(&node)) {
    // Evaluate on the cut annulus with representative r in [0,1).
    const AnnulusPoint q =
        eval_phi(PhiNode{phi->K, phi->lambda, phi->f}, AnnulusPoint(p.x, p.y));
    return TorusPoint(q.r, q.theta);
  }
  if (const auto* d = std::get_if<DiagNode>(&node)) {
    return TorusPoint(mod1(d->f.lift(p.x)), mod1(d->f.lift(p.y)));
  }
  const auto& c = std::get<ChartNode>(node);
  if (c.direction > 0) return TorusPoint(p.y, p.y - p.x);
  return TorusPoint(p.x - p.y, p.x);
}

TorusNode invert_node(const TorusNode& node) {
  if (const auto* phi = std::get_if<PhiTorusNode>(&node)) {
    return PhiTorusNode{phi->K, phi->lambda, phi->f.inverse()};
  }
  if (const auto* d = std::get_if<DiagNode>(&node)) {
    return DiagNode{d->f.inverse()};
  }
  const auto& c = std::get<ChartNode>(node);
  return ChartNode{-c.direction};
}

}  // namespace

TorusMap::TorusMap(TorusNode node) { nodes_.push_back(std::move(node)); }

TorusPoint TorusMap::operator()(const TorusPoint& p) const {
  TorusPoint q = p;
  for (const TorusNode& n : nodes_) q = eval_node(n, q);
  return q;
}

TorusMap TorusMap::inverse() const {
  TorusMap out;
  out.nodes_.reserve(nodes_.size());
  for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
    out.nodes_.push_back(invert_node(*it));
  }
  return out;
}

TorusMap operator*(const TorusMap& f, const TorusMap& g) {
  TorusMap out;
  out.nodes_.reserve(f.nodes_.size() + g.nodes_.size());
  out.nodes_.insert(out.nodes_.end(), g.nodes_.begin(), g.nodes_.end());
  out.nodes_.insert(out.nodes_.end(), f.nodes_.begin(), f.nodes_.end());
  return out;
}

DiscPoint DiscMap::operator()(const DiscPoint& p) const {
  if (p.cone) return p;
  const AnnulusPoint q = base_(AnnulusPoint(p.r, p.theta));
  return DiscPoint(q.r, q.theta);
}

SpherePoint SphereMap::operator()(const SpherePoint& p) const {
  if (p.pole != 0) return p;
  const AnnulusPoint q = base_(AnnulusPoint(p.r, p.theta));
  return SpherePoint(q.r, q.theta);
}

AnnulusMap act_p(const CircleHomeo& f) {
  return AnnulusMap(PhiNode{GapSet::full_interval(), SignAssignment(), f});
}

AnnulusMap act_a_minus(const CircleHomeo& f) {
  return AnnulusMap(
      PhiNode{GapSet::boundary_pair(), SignAssignment({-1}), f});
}

AnnulusMap act_a_plus(const CircleHomeo& f) {
  return AnnulusMap(PhiNode{GapSet::boundary_pair(), SignAssignment({1}), f});
}

AnnulusMap act_phi(const GapSet& K, const SignAssignment& lambda,
                   const CircleHomeo& f) {
  check_signs(K, lambda);
  return AnnulusMap(PhiNode{K, lambda, f});
}

TorusMap act_torus_diag(const CircleHomeo& f) {
  return TorusMap(DiagNode{f});
}

TorusMap act_phi_torus(const GapSet& K, const SignAssignment& lambda,
                       const CircleHomeo& f) {
  check_signs(K, lambda);
  return TorusMap(PhiTorusNode{K, lambda, f});
}

DiscMap act_phi_disc(const GapSet& K, const SignAssignment& lambda,
                     const CircleHomeo& f) {
  check_signs(K, lambda);
  return DiscMap(AnnulusMap(PhiNode{K, lambda, f}));
}

SphereMap act_phi_sphere(const GapSet& K, const SignAssignment& lambda,
                         const CircleHomeo& f) {
  check_signs(K, lambda);
  return SphereMap(AnnulusMap(PhiNode{K, lambda, f}));
}

TorusPoint diag_chart(const AnnulusPoint& p) {
  return TorusPoint(p.theta, p.theta - p.r);
}

AnnulusPoint diag_chart_inverse(const TorusPoint& p) {
  return AnnulusPoint(mod1(p.x - p.y), p.x);
}

AnnulusMap annulus_rotation(const Rational& alpha) {
  return act_p(CircleHomeo::rotation(alpha));
}

}  // namespace circact
