#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "warpcon/report.hpp"
#include "warpcon/rng.hpp"

namespace warpcon::geometry {

using MinkowskiVector = Eigen::VectorXd;

inline constexpr double kGeometryTol = 1e-12;

/// Metric g = diag(1, -1, ..., -1), index 0 is time.
inline Eigen::MatrixXd metric(int d) {
  Eigen::MatrixXd g = -Eigen::MatrixXd::Identity(d, d);
  g(0, 0) = 1.0;
  return g;
}

/// Lorentz inner product xy = x0 y0 - sum_{i>=1} xi yi.
inline double minkowski_inner(const MinkowskiVector& x, const MinkowskiVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("minkowski_inner: dimension mismatch");
  double s = x(0) * y(0);
  for (Eigen::Index i = 1; i < x.size(); ++i) s -= x(i) * y(i);
  return s;
}

inline double spatial_norm(const MinkowskiVector& p) {
  return p.tail(p.size() - 1).norm();
}

/// Closed forward lightcone membership p0 >= |p_spatial|.
inline bool in_forward_cone(const MinkowskiVector& p, double tol = 0.0) {
  return p(0) >= spatial_norm(p) - tol;
}

inline MinkowskiVector basis_vector(int d, int i) {
  MinkowskiVector v = MinkowskiVector::Zero(d);
  v(i) = 1.0;
  return v;
}

// ---------------------------------------------------------------------------
// Lorentz and Poincare transformations
// ---------------------------------------------------------------------------

struct LorentzTransform {
  Eigen::MatrixXd matrix;
  bool orthochronous_proper = true;

  int dim() const { return static_cast<int>(matrix.rows()); }

  MinkowskiVector apply(const MinkowskiVector& x) const { return matrix * x; }

  /// Inverse via the metric identity L^{-1} = g L^T g.
  LorentzTransform inverse() const {
    const Eigen::MatrixXd g = metric(dim());
    return {g * matrix.transpose() * g, orthochronous_proper};
  }

  /// max-norm of L^T g L - g
  double metric_residual() const {
    const Eigen::MatrixXd g = metric(dim());
    return (matrix.transpose() * g * matrix - g).cwiseAbs().maxCoeff();
  }

  bool valid(double tol = kGeometryTol) const {
    if (metric_residual() > tol) return false;
    if (orthochronous_proper) {
      if (matrix.determinant() < 1.0 - 1e-9) return false;
      if (matrix(0, 0) < 1.0 - tol) return false;
    }
    return true;
  }

  static LorentzTransform identity(int d) { return {Eigen::MatrixXd::Identity(d, d), true}; }

  /// Boost in the 0-1 plane with the given rapidity.
  static LorentzTransform boost01(int d, double rapidity) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
    const double c = std::cosh(rapidity), s = std::sinh(rapidity);
    m(0, 0) = c;
    m(0, 1) = s;
    m(1, 0) = s;
    m(1, 1) = c;
    return {m, true};
  }

  /// Rotation by `angle` in the spatial (i, j) plane, 1 <= i < j <= d-1.
  static LorentzTransform rotation(int d, int i, int j, double angle) {
    if (i < 1 || j < 1 || i == j || i >= d || j >= d)
      throw std::invalid_argument("rotation: spatial axes out of range");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
    const double c = std::cos(angle), s = std::sin(angle);
    m(i, i) = c;
    m(j, j) = c;
    m(i, j) = -s;
    m(j, i) = s;
    return {m, true};
  }

  /// Exact rotation by pi in the (1,2) plane: diag(1, -1, -1, 1, ...). Needs d >= 3.
  static LorentzTransform pi_rotation12(int d) {
    if (d < 3) throw std::invalid_argument("pi_rotation12: requires d >= 3");
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(d, d);
    m(1, 1) = -1.0;
    m(2, 2) = -1.0;
    return {m, true};
  }
};

inline LorentzTransform operator*(const LorentzTransform& a, const LorentzTransform& b) {
  return {a.matrix * b.matrix, a.orthochronous_proper && b.orthochronous_proper};
}

/// Element (Lambda, x) of the Poincare group, acting as y -> Lambda y + x.
struct PoincareElement {
  LorentzTransform lorentz;
  MinkowskiVector translation;

  int dim() const { return lorentz.dim(); }

  MinkowskiVector apply(const MinkowskiVector& y) const { return lorentz.apply(y) + translation; }

  PoincareElement inverse() const {
    const LorentzTransform li = lorentz.inverse();
    return {li, -li.apply(translation)};
  }

  static PoincareElement identity(int d) {
    return {LorentzTransform::identity(d), MinkowskiVector::Zero(d)};
  }

  static PoincareElement pure_translation(MinkowskiVector a) {
    const int d = static_cast<int>(a.size());
    return {LorentzTransform::identity(d), std::move(a)};
  }

  static PoincareElement pure_lorentz(LorentzTransform l) {
    const int d = l.dim();
    return {std::move(l), MinkowskiVector::Zero(d)};
  }
};

/// Composition law (L1, x1)(L2, x2) = (L1 L2, x1 + L1 x2).
inline PoincareElement operator*(const PoincareElement& a, const PoincareElement& b) {
  return {a.lorentz * b.lorentz, a.translation + a.lorentz.apply(b.translation)};
}

// ---------------------------------------------------------------------------
// Warp matrices
// ---------------------------------------------------------------------------

/// d x d matrix Q skew-symmetric with respect to the Lorentz form,
/// i.e. pQq = -qQp, equivalently (gQ)^T = -gQ. Carries kappa when Q is the
/// standard warp matrix of that strength.
struct SkewWarpMatrix {
  Eigen::MatrixXd matrix;
  std::optional<double> kappa;

  int dim() const { return static_cast<int>(matrix.rows()); }

  MinkowskiVector apply(const MinkowskiVector& p) const { return matrix * p; }

  /// max-norm of (gQ)^T + gQ
  static double skew_residual(const Eigen::MatrixXd& q) {
    const Eigen::MatrixXd gq = metric(static_cast<int>(q.rows())) * q;
    return (gq.transpose() + gq).cwiseAbs().maxCoeff();
  }

  static SkewWarpMatrix checked(Eigen::MatrixXd q, double tol = kGeometryTol) {
    if (q.rows() != q.cols()) throw std::invalid_argument("SkewWarpMatrix: not square");
    if (skew_residual(q) > tol)
      throw std::invalid_argument("SkewWarpMatrix: not skew-symmetric for the Lorentz form");
    return {std::move(q), std::nullopt};
  }
};

/// Standard warp matrix: Q01 = Q10 = kappa, all other entries zero.
inline SkewWarpMatrix warp_matrix(double kappa, int d) {
  if (d < 2) throw std::invalid_argument("warp_matrix: d must be >= 2");
  if (kappa < 0.0) throw std::invalid_argument("warp_matrix: kappa must be >= 0");
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(d, d);
  q(0, 1) = kappa;
  q(1, 0) = kappa;
  return {std::move(q), kappa};
}

/// L Q L^{-1}; skew for the Lorentz form whenever Q is.
inline SkewWarpMatrix transform_warp(const LorentzTransform& l, const SkewWarpMatrix& q) {
  Eigen::MatrixXd m = l.matrix * q.matrix * l.inverse().matrix;
  std::optional<double> kappa;
  if (q.kappa && (m - warp_matrix(*q.kappa, l.dim()).matrix).cwiseAbs().maxCoeff() <= kGeometryTol)
    kappa = q.kappa;
  return {std::move(m), kappa};
}

// ---------------------------------------------------------------------------
// Wedges
// ---------------------------------------------------------------------------

struct HalfSpace {
  Eigen::VectorXd normal;  // Euclidean normal of a bounding null hyperplane
  double offset = 0.0;

  double evaluate(const MinkowskiVector& x) const { return normal.dot(x) + offset; }
  bool contains(const MinkowskiVector& x, double tol = kGeometryTol) const {
    return evaluate(x) >= -tol;
  }
};

/// A Poincare transform of the standard wedge W0 = { x : x1 >= |x0| },
/// stored as the representative together with derived exact null half-space
/// data. In d = 2 the identity component cannot map W0 onto its causal
/// complement, so translates of -W0 are marked with `left_class` instead.
class Wedge {
 public:
  static Wedge standard(int d) {
    if (d < 2) throw std::invalid_argument("Wedge: needs d >= 2");
    return Wedge(PoincareElement::identity(d), false);
  }

  static Wedge from(PoincareElement rep, bool left_class = false) {
    if (rep.dim() < 2) throw std::invalid_argument("Wedge: needs d >= 2");
    if (left_class && rep.dim() != 2)
      throw std::invalid_argument("Wedge: left_class is a d = 2 concept");
    return Wedge(std::move(rep), left_class);
  }

  int dim() const { return rep_.dim(); }
  const PoincareElement& representative() const { return rep_; }
  bool left_class() const { return left_class_; }
  const HalfSpace& half_space(int i) const { return faces_[i]; }

  /// Membership through the half-space data.
  bool contains(const MinkowskiVector& x, double tol = kGeometryTol) const {
    return faces_[0].contains(x, tol) && faces_[1].contains(x, tol);
  }

  /// Independent membership route: lambda^{-1} x in (-)W0.
  bool contains_via_representative(const MinkowskiVector& x, double tol = kGeometryTol) const {
    const MinkowskiVector y = rep_.inverse().apply(x);
    const double y1 = left_class_ ? -y(1) : y(1);
    return y1 >= std::abs(y(0)) - tol;
  }

  MinkowskiVector apex() const { return rep_.translation; }

  /// The two null recession directions of the wedge cone.
  std::pair<MinkowskiVector, MinkowskiVector> cone_generators() const {
    const int d = dim();
    MinkowskiVector up = basis_vector(d, 1) + basis_vector(d, 0);
    MinkowskiVector um = basis_vector(d, 1) - basis_vector(d, 0);
    if (left_class_) {
      up = -up;
      um = -um;
    }
    return {rep_.lorentz.apply(up), rep_.lorentz.apply(um)};
  }

  /// Directions spanning the wedge edge (empty in d = 2).
  std::vector<MinkowskiVector> edge_directions() const {
    std::vector<MinkowskiVector> dirs;
    for (int k = 2; k < dim(); ++k) dirs.push_back(rep_.lorentz.apply(basis_vector(dim(), k)));
    return dirs;
  }

  Wedge causal_complement() const {
    if (dim() == 2) return Wedge(rep_, !left_class_);
    return Wedge(rep_ * PoincareElement::pure_lorentz(LorentzTransform::pi_rotation12(dim())),
                 false);
  }

  Wedge transformed(const PoincareElement& lambda) const {
    return Wedge(lambda * rep_, left_class_);
  }

  Wedge translated(const MinkowskiVector& a) const {
    return transformed(PoincareElement::pure_translation(a));
  }

 private:
  Wedge(PoincareElement rep, bool left_class) : rep_(std::move(rep)), left_class_(left_class) {
    rebuild_faces();
  }

  void rebuild_faces() {
    const int d = dim();
    // W0 half-spaces: x1 - x0 >= 0 and x1 + x0 >= 0; negated normals for -W0.
    Eigen::VectorXd na = basis_vector(d, 1) - basis_vector(d, 0);
    Eigen::VectorXd nb = basis_vector(d, 1) + basis_vector(d, 0);
    if (left_class_) {
      na = -na;
      nb = -nb;
    }
    // For x in lambda W0: n . (Lambda^{-1}(x - a)) >= 0, so the transformed
    // normal is Lambda^{-T} n = g Lambda g n.
    const Eigen::MatrixXd g = metric(d);
    const Eigen::MatrixXd push = g * rep_.lorentz.matrix * g;
    faces_[0].normal = push * na;
    faces_[1].normal = push * nb;
    faces_[0].offset = -faces_[0].normal.dot(rep_.translation);
    faces_[1].offset = -faces_[1].normal.dot(rep_.translation);
  }

  PoincareElement rep_;
  bool left_class_ = false;
  HalfSpace faces_[2];
};

inline bool wedge_contains(const Wedge& w, const MinkowskiVector& x, double tol = kGeometryTol) {
  return w.contains(x, tol);
}

/// Exact inclusion decision by cone arithmetic: W1 is contained in W2 iff each
/// bounding half-space of W2 contains W1's apex, recession directions and edge.
inline bool wedge_subset(const Wedge& w1, const Wedge& w2, double tol = kGeometryTol) {
  const auto [up, um] = w1.cone_generators();
  const auto edge = w1.edge_directions();
  for (int i = 0; i < 2; ++i) {
    const HalfSpace& h = w2.half_space(i);
    if (h.evaluate(w1.apex()) < -tol) return false;
    if (h.normal.dot(up) < -tol || h.normal.dot(um) < -tol) return false;
    for (const auto& e : edge)
      if (std::abs(h.normal.dot(e)) > tol) return false;
  }
  return true;
}

inline bool wedge_equal(const Wedge& w1, const Wedge& w2, double tol = kGeometryTol) {
  return wedge_subset(w1, w2, tol) && wedge_subset(w2, w1, tol);
}

/// Warp matrix assigned to a wedge: L Q_kappa L^{-1} for W = lambda W0, and
/// the sign-flipped matrix for d = 2 left-class wedges (the reflection that
/// maps W0 onto -W0 lies outside the identity component there).
inline SkewWarpMatrix wedge_warp_matrix(const Wedge& w, double kappa) {
  SkewWarpMatrix base = warp_matrix(kappa, w.dim());
  if (w.left_class()) base = SkewWarpMatrix{-base.matrix, std::nullopt};
  return transform_warp(w.representative().lorentz, base);
}

// ---------------------------------------------------------------------------
// Sampling helpers and the forward-cone image check
// ---------------------------------------------------------------------------

/// Random point of the closed forward cone; a fraction of draws lands exactly
/// on the boundary null rays.
inline MinkowskiVector sample_forward_cone(Rng& rng, int d, double scale = 2.0) {
  MinkowskiVector p(d);
  for (int i = 1; i < d; ++i) p(i) = rng.uniform(-scale, scale);
  const double margin = (rng.uniform() < 0.1) ? 0.0 : rng.uniform(0.0, scale);
  p(0) = spatial_norm(p) + margin;
  return p;
}

/// Random point of the standard wedge (d = 2), including boundary draws.
inline MinkowskiVector sample_standard_wedge_2d(Rng& rng, double scale = 2.0) {
  MinkowskiVector x(2);
  x(0) = rng.uniform(-scale, scale);
  const double margin = (rng.uniform() < 0.1) ? 0.0 : rng.uniform(0.0, scale);
  x(1) = std::abs(x(0)) + margin;
  return x;
}

/// Verifies that the standard warp matrix maps the closed forward cone into
/// the standard wedge (all d), and onto it in d = 2 where the inverse map
/// p = (x1/kappa, x0/kappa) provides the preimage. For d > 2 the image is the
/// (0,1)-plane section of the wedge, so only the inclusion is meaningful.
inline CheckReport check_forward_cone_image(double kappa, int d, int samples,
                                            int surjectivity_samples, Rng& rng) {
  if (kappa <= 0.0) throw std::invalid_argument("check_forward_cone_image: kappa must be > 0");
  const SkewWarpMatrix q = warp_matrix(kappa, d);
  const Wedge w0 = Wedge::standard(d);
  double worst = 0.0;
  int violations = 0;
  for (int i = 0; i < samples; ++i) {
    const MinkowskiVector p = sample_forward_cone(rng, d);
    const MinkowskiVector x = q.apply(p);
    const double defect = std::abs(x(0)) - x(1);  // > 0 means outside W0
    worst = std::max(worst, defect);
    if (!w0.contains(x)) ++violations;
  }
  double surj_worst = 0.0;
  if (d == 2) {
    for (int i = 0; i < surjectivity_samples; ++i) {
      const MinkowskiVector x = sample_standard_wedge_2d(rng);
      MinkowskiVector p(2);
      p(0) = x(1) / kappa;
      p(1) = x(0) / kappa;
      surj_worst = std::max(surj_worst, spatial_norm(p) - p(0));
      surj_worst = std::max(surj_worst, (q.apply(p) - x).cwiseAbs().maxCoeff());
    }
  }
  CheckReport r = make_report("geometry.forward_cone_image",
                              "warp matrix maps the forward cone into the standard wedge",
                              std::max(worst, surj_worst), kGeometryTol,
                              {{"kappa", kappa},
                               {"d", d},
                               {"samples", samples},
                               {"violations", violations},
                               {"surjectivity_samples", d == 2 ? surjectivity_samples : 0}});
  r.pass = r.pass && violations == 0;
  if (d > 2)
    r.note = "image is the (0,1)-plane section of the wedge; onto-ness holds and is checked in d = 2 only";
  return r;
}

}  // namespace warpcon::geometry
