#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "warpcon/geometry.hpp"
#include "warpcon/report.hpp"

namespace warpcon::spectral {

using geometry::MinkowskiVector;
using OperatorMatrix = Eigen::MatrixXcd;

inline constexpr double kSpectralTol = 1e-12;
inline constexpr double kMergeTol = 1e-9;

/// One point of a discrete spectral resolution: a momentum value together
/// with the basis columns spanning its spectral subspace.
struct SpectralPoint {
  MinkowskiVector momentum;
  std::vector<int> columns;
};

/// Finite resolution of the identity for a d-parameter translation group:
/// an orthonormal eigenbasis whose columns are grouped by joint momentum.
/// The projections E_j are the column-block projectors; all operator
/// calculus below works in the eigenbasis, where U(x) is diagonal.
class SpectralDecomposition {
 public:
  /// Rank-one resolution on the standard basis, one column per momentum
  /// (momenta within the merge tolerance share a group).
  static SpectralDecomposition diagonal(const std::vector<MinkowskiVector>& momenta,
                                        bool physical = false, int vacuum_column = -1,
                                        double merge_tol = kMergeTol) {
    const int n = static_cast<int>(momenta.size());
    return from_basis(Eigen::MatrixXcd::Identity(n, n), momenta, physical, vacuum_column,
                      merge_tol);
  }

  static SpectralDecomposition from_basis(Eigen::MatrixXcd basis,
                                          const std::vector<MinkowskiVector>& column_momenta,
                                          bool physical = false, int vacuum_column = -1,
                                          double merge_tol = kMergeTol) {
    SpectralDecomposition s;
    s.basis_ = std::move(basis);
    s.dim_ = static_cast<int>(s.basis_.rows());
    if (s.basis_.cols() != s.dim_) throw std::invalid_argument("spectral basis must be square");
    if (static_cast<int>(column_momenta.size()) != s.dim_)
      throw std::invalid_argument("one momentum per basis column required");
    s.spacetime_dim_ = static_cast<int>(column_momenta.front().size());
    s.physical_ = physical;
    s.group_of_col_.assign(s.dim_, -1);

    // Group columns by momentum. The vacuum column is seeded first so its
    // group representative is its exact momentum (exactly zero for vacua).
    std::vector<int> order;
    order.reserve(s.dim_);
    if (vacuum_column >= 0) order.push_back(vacuum_column);
    for (int c = 0; c < s.dim_; ++c)
      if (c != vacuum_column) order.push_back(c);
    for (int c : order) {
      const MinkowskiVector& p = column_momenta[c];
      if (static_cast<int>(p.size()) != s.spacetime_dim_)
        throw std::invalid_argument("momentum dimension mismatch");
      int g = -1;
      for (int j = 0; j < static_cast<int>(s.points_.size()); ++j) {
        if ((s.points_[j].momentum - p).cwiseAbs().maxCoeff() < merge_tol) {
          g = j;
          break;
        }
      }
      if (g < 0) {
        g = static_cast<int>(s.points_.size());
        s.points_.push_back({p, {}});
      }
      s.points_[g].columns.push_back(c);
      s.group_of_col_[c] = g;
    }

    if (physical) {
      if (vacuum_column < 0)
        throw std::invalid_argument("physical decomposition requires a vacuum column");
      s.vacuum_group_ = s.group_of_col_[vacuum_column];
      if (s.points_[s.vacuum_group_].momentum.cwiseAbs().maxCoeff() > merge_tol)
        throw std::invalid_argument("vacuum column must carry zero momentum");
      s.points_[s.vacuum_group_].momentum.setZero();
      s.vacuum_ = s.basis_.col(vacuum_column);
      for (const auto& pt : s.points_)
        if (!geometry::in_forward_cone(pt.momentum, kSpectralTol))
          throw std::invalid_argument("physical decomposition has momentum outside forward cone");
    }
    return s;
  }

  int dim() const { return dim_; }
  int spacetime_dim() const { return spacetime_dim_; }
  const std::vector<SpectralPoint>& points() const { return points_; }
  int group_count() const { return static_cast<int>(points_.size()); }
  const Eigen::MatrixXcd& basis() const { return basis_; }
  int group_of_column(int c) const { return group_of_col_[c]; }
  bool physical() const { return physical_; }
  int vacuum_group() const { return vacuum_group_; }
  const Eigen::VectorXcd& vacuum() const {
    if (!physical_) throw std::logic_error("vacuum available on physical decompositions only");
    return vacuum_;
  }

  /// Materialized spectral projection E_j.
  OperatorMatrix projection(int j) const {
    OperatorMatrix e = OperatorMatrix::Zero(dim_, dim_);
    for (int c : points_[j].columns) e += basis_.col(c) * basis_.col(c).adjoint();
    return e;
  }

  OperatorMatrix to_eigenbasis(const OperatorMatrix& f) const {
    if (is_identity_basis()) return f;
    return basis_.adjoint() * f * basis_;
  }

  OperatorMatrix from_eigenbasis(const OperatorMatrix& f) const {
    if (is_identity_basis()) return f;
    return basis_ * f * basis_.adjoint();
  }

  bool is_identity_basis() const {
    return basis_.isIdentity(0.0);
  }

  /// Invariant audit: basis unitarity, projection algebra, momentum
  /// separation, spectrum condition. Intended for desk-size models.
  double validate(double tol = kSpectralTol) const {
    double worst = (basis_.adjoint() * basis_ - OperatorMatrix::Identity(dim_, dim_))
                       .cwiseAbs()
                       .maxCoeff();
    OperatorMatrix sum = OperatorMatrix::Zero(dim_, dim_);
    for (int j = 0; j < group_count(); ++j) {
      const OperatorMatrix e = projection(j);
      worst = std::max(worst, (e * e - e).norm());
      worst = std::max(worst, (e.adjoint() - e).norm());
      sum += e;
      for (int k = j + 1; k < group_count(); ++k)
        worst = std::max(worst, (e * projection(k)).norm());
    }
    worst = std::max(worst, (sum - OperatorMatrix::Identity(dim_, dim_)).norm());
    for (int j = 0; j < group_count(); ++j)
      for (int k = j + 1; k < group_count(); ++k)
        if ((points_[j].momentum - points_[k].momentum).cwiseAbs().maxCoeff() < kMergeTol)
          worst = std::max(worst, 1.0);
    if (physical_) {
      for (const auto& pt : points_)
        worst = std::max(worst, std::max(0.0, geometry::spatial_norm(pt.momentum) -
                                                  pt.momentum(0)));
      (void)tol;
    }
    return worst;
  }

 private:
  Eigen::MatrixXcd basis_;
  std::vector<SpectralPoint> points_;
  std::vector<int> group_of_col_;
  Eigen::VectorXcd vacuum_;
  int dim_ = 0;
  int spacetime_dim_ = 0;
  int vacuum_group_ = -1;
  bool physical_ = false;
};

// ---------------------------------------------------------------------------
// Translation calculus
// ---------------------------------------------------------------------------

/// U(x) = sum_j exp(i p_j x) E_j, with the Lorentz inner product in the phase.
inline OperatorMatrix translation_unitary(const SpectralDecomposition& s,
                                          const MinkowskiVector& x) {
  Eigen::VectorXcd diag(s.dim());
  std::vector<std::complex<double>> group_phase(s.group_count());
  for (int j = 0; j < s.group_count(); ++j)
    group_phase[j] = std::polar(1.0, geometry::minkowski_inner(s.points()[j].momentum, x));
  for (int c = 0; c < s.dim(); ++c) diag(c) = group_phase[s.group_of_column(c)];
  if (s.is_identity_basis()) return diag.asDiagonal();
  return s.basis() * diag.asDiagonal() * s.basis().adjoint();
}

/// alpha_x(F) = U(x) F U(x)^{-1}, evaluated as the phase mask
/// exp(i (p_b - p_c) x) on the eigenbasis matrix elements.
inline OperatorMatrix adjoint_action(const SpectralDecomposition& s, const MinkowskiVector& x,
                                     const OperatorMatrix& f) {
  if (f.rows() != s.dim() || f.cols() != s.dim())
    throw std::invalid_argument("adjoint_action: operator dimension mismatch");
  OperatorMatrix fh = s.to_eigenbasis(f);
  std::vector<std::complex<double>> phase(s.group_count());
  for (int j = 0; j < s.group_count(); ++j)
    phase[j] = std::polar(1.0, geometry::minkowski_inner(s.points()[j].momentum, x));
  for (int b = 0; b < s.dim(); ++b)
    for (int c = 0; c < s.dim(); ++c)
      fh(b, c) *= phase[s.group_of_column(b)] * std::conj(phase[s.group_of_column(c)]);
  return s.from_eigenbasis(fh);
}

namespace detail {

enum class WarpOrder { MeasureLast, MeasureFirst };

/// Literal finite warped convolution. MeasureLast is sum_j alpha_{Qp_j}(F) E_j
/// (integrand left of the measure); MeasureFirst is sum_j E_j alpha_{Qp_j}(F).
/// In the eigenbasis the two differ only in whether the twist momentum is the
/// column or the row group momentum; no skewness is assumed here, which is
/// what lets the checkers exhibit failure for non-skew twists.
inline OperatorMatrix warp_sum(const SpectralDecomposition& s, const Eigen::MatrixXd& q,
                               const OperatorMatrix& f, WarpOrder order) {
  if (f.rows() != s.dim() || f.cols() != s.dim())
    throw std::invalid_argument("warp: operator dimension mismatch");
  if (q.rows() != s.spacetime_dim() || q.cols() != s.spacetime_dim())
    throw std::invalid_argument("warp: matrix dimension mismatch");
  OperatorMatrix fh = s.to_eigenbasis(f);
  const int ng = s.group_count();
  // phase(b, c) = exp(i (p_b - p_c) . Q p_t), t the row/column group per order
  Eigen::MatrixXcd phase(ng, ng);
  std::vector<MinkowskiVector> qp(ng);
  for (int j = 0; j < ng; ++j) qp[j] = q * s.points()[j].momentum;
  for (int b = 0; b < ng; ++b)
    for (int c = 0; c < ng; ++c) {
      const MinkowskiVector diff = s.points()[b].momentum - s.points()[c].momentum;
      const MinkowskiVector& twist = (order == WarpOrder::MeasureLast) ? qp[c] : qp[b];
      phase(b, c) = std::polar(1.0, geometry::minkowski_inner(diff, twist));
    }
  for (int b = 0; b < s.dim(); ++b)
    for (int c = 0; c < s.dim(); ++c)
      fh(b, c) *= phase(s.group_of_column(b), s.group_of_column(c));
  return s.from_eigenbasis(fh);
}

}  // namespace detail

/// Warped convolution with the measure on the right of the integrand.
inline OperatorMatrix warp_left(const SpectralDecomposition& s, const geometry::SkewWarpMatrix& q,
                                const OperatorMatrix& f) {
  if (geometry::SkewWarpMatrix::skew_residual(q.matrix) > geometry::kGeometryTol)
    throw std::invalid_argument("warp_left: twist matrix is not skew");
  return detail::warp_sum(s, q.matrix, f, detail::WarpOrder::MeasureLast);
}

/// Warped convolution with the measure on the left of the integrand.
inline OperatorMatrix warp_right(const SpectralDecomposition& s, const geometry::SkewWarpMatrix& q,
                                 const OperatorMatrix& f) {
  if (geometry::SkewWarpMatrix::skew_residual(q.matrix) > geometry::kGeometryTol)
    throw std::invalid_argument("warp_right: twist matrix is not skew");
  return detail::warp_sum(s, q.matrix, f, detail::WarpOrder::MeasureFirst);
}

/// Canonical deformation: evaluates both orders, insists that they agree
/// (they do exactly when Q is skew), and returns the measure-first value.
inline OperatorMatrix warp(const SpectralDecomposition& s, const geometry::SkewWarpMatrix& q,
                           const OperatorMatrix& f, double agree_tol = kSpectralTol) {
  const OperatorMatrix left = warp_left(s, q, f);
  const OperatorMatrix right = warp_right(s, q, f);
  const double gap = (left - right).norm();
  if (gap > agree_tol * std::max(1.0, f.norm()))
    throw std::runtime_error("warp: left/right orders disagree (twist not skew or decomposition broken)");
  return right;
}

// ---------------------------------------------------------------------------
// Checkers
// ---------------------------------------------------------------------------

/// Residual of the left/right order independence; accepts arbitrary (possibly
/// non-skew) twist matrices so it can serve as its own negative control.
inline CheckReport check_left_right(const SpectralDecomposition& s, const Eigen::MatrixXd& q,
                                    const OperatorMatrix& f, double tol = kSpectralTol) {
  const OperatorMatrix left = detail::warp_sum(s, q, f, detail::WarpOrder::MeasureLast);
  const OperatorMatrix right = detail::warp_sum(s, q, f, detail::WarpOrder::MeasureFirst);
  return make_report("warp.left_right", "left and right warped convolutions coincide",
                     (left - right).norm(), tol,
                     {{"dim", s.dim()}, {"skew_residual", geometry::SkewWarpMatrix::skew_residual(q)}});
}

/// || (F_Q)^* - (F^*)_Q ||; in finite dimension the adjoint relation is an
/// equality of matrices.
inline CheckReport check_adjoint(const SpectralDecomposition& s, const geometry::SkewWarpMatrix& q,
                                 const OperatorMatrix& f, double tol = kSpectralTol) {
  const OperatorMatrix lhs = warp_right(s, q, f).adjoint();
  const OperatorMatrix rhs = warp_right(s, q, f.adjoint());
  return make_report("warp.adjoint", "adjoints pass through the warped convolution",
                     (lhs - rhs).norm(), tol, {{"dim", s.dim()}});
}

/// || (F_{Q1})_{Q2} - F_{Q1+Q2} ||.
inline CheckReport check_composition(const SpectralDecomposition& s,
                                     const geometry::SkewWarpMatrix& q1,
                                     const geometry::SkewWarpMatrix& q2, const OperatorMatrix& f,
                                     double tol = kSpectralTol) {
  const OperatorMatrix twice = warp_right(s, q2, warp_right(s, q1, f));
  const OperatorMatrix once =
      warp_right(s, geometry::SkewWarpMatrix{q1.matrix + q2.matrix, std::nullopt}, f);
  return make_report("warp.composition", "successive warps add their twist matrices",
                     (twice - once).norm(), tol, {{"dim", s.dim()}});
}

struct CommutationReport {
  double hypothesis_residual = 0.0;  // max over spectrum pairs of ||[a_{Qp}(F), a_{-Qq}(G)]||
  double conclusion_residual = 0.0;  // ||[F_Q, G_{-Q}]||
  bool hypothesis_ok = false;
};

/// Two-stage commutation check: the conclusion [F_Q, G_{-Q}] = 0 is claimed
/// only when the hypothesis (commuting opposite translates, scanned
/// exhaustively over the finite spectrum) holds.
inline CommutationReport commutation_residuals(const SpectralDecomposition& s,
                                               const geometry::SkewWarpMatrix& q,
                                               const OperatorMatrix& f, const OperatorMatrix& g,
                                               double tol = kSpectralTol) {
  CommutationReport rep;
  const geometry::SkewWarpMatrix qneg{-q.matrix, std::nullopt};
  std::vector<OperatorMatrix> ftw(s.group_count()), gtw(s.group_count());
  for (int j = 0; j < s.group_count(); ++j) {
    ftw[j] = adjoint_action(s, q.matrix * s.points()[j].momentum, f);
    gtw[j] = adjoint_action(s, -q.matrix * s.points()[j].momentum, g);
  }
  for (int j = 0; j < s.group_count(); ++j)
    for (int k = 0; k < s.group_count(); ++k)
      rep.hypothesis_residual =
          std::max(rep.hypothesis_residual, (ftw[j] * gtw[k] - gtw[k] * ftw[j]).norm());
  const OperatorMatrix fq = warp_right(s, q, f);
  const OperatorMatrix gq = warp_right(s, qneg, g);
  rep.conclusion_residual = (fq * gq - gq * fq).norm();
  rep.hypothesis_ok = rep.hypothesis_residual <= tol;
  return rep;
}

inline CheckReport check_commutation(const SpectralDecomposition& s,
                                     const geometry::SkewWarpMatrix& q, const OperatorMatrix& f,
                                     const OperatorMatrix& g, double tol = kSpectralTol) {
  const CommutationReport rep = commutation_residuals(s, q, f, g, tol);
  CheckReport r = make_report(
      "warp.commutation", "commuting opposite translates keep commuting after the warp",
      rep.conclusion_residual, tol,
      {{"dim", s.dim()},
       {"hypothesis_residual", rep.hypothesis_residual},
       {"conclusion_residual", rep.conclusion_residual}});
  if (!rep.hypothesis_ok) {
    r.pass = false;
    r.note = "hypothesis scan failed; the conclusion is not claimed for this instance";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Extended (Poincare) representations
// ---------------------------------------------------------------------------

/// Extension data for one Lorentz transform: a unitary V with
/// V U_source(x) V^{-1} = U_target(Lambda x). `target` equals `source` for
/// spectra closed under Lambda; a second model realizes e.g. boosts, which
/// never close a finite mass-shell set.
struct LorentzActionEntry {
  geometry::LorentzTransform lambda;
  OperatorMatrix intertwiner;
  SpectralDecomposition target;

  double intertwining_residual(const SpectralDecomposition& source,
                               const MinkowskiVector& x) const {
    const OperatorMatrix lhs = intertwiner * translation_unitary(source, x) * intertwiner.adjoint();
    const OperatorMatrix rhs = translation_unitary(target, lambda.apply(x));
    return (lhs - rhs).norm();
  }
};

struct ExtendedRep {
  SpectralDecomposition base;
  std::vector<LorentzActionEntry> actions;

  /// U(lambda) for lambda = (Lambda, x), composed as U_target(x) V.
  OperatorMatrix poincare_unitary(int entry, const MinkowskiVector& x) const {
    const LorentzActionEntry& e = actions.at(entry);
    return translation_unitary(e.target, x) * e.intertwiner;
  }
};

/// || U(lambda) F_Q U(lambda)^{-1} - warp(target, Lambda Q Lambda^{-1},
/// U(lambda) F U(lambda)^{-1}) ||.
inline CheckReport check_covariance(const SpectralDecomposition& source,
                                    const LorentzActionEntry& entry, const MinkowskiVector& x,
                                    const geometry::SkewWarpMatrix& q, const OperatorMatrix& f,
                                    double tol = kSpectralTol) {
  const OperatorMatrix u = translation_unitary(entry.target, x) * entry.intertwiner;
  const OperatorMatrix lhs = u * warp_right(source, q, f) * u.adjoint();
  const geometry::SkewWarpMatrix qrot = geometry::transform_warp(entry.lambda, q);
  const OperatorMatrix rhs = warp_right(entry.target, qrot, u * f * u.adjoint());
  return make_report("warp.covariance", "the warp transforms covariantly with the twist matrix",
                     (lhs - rhs).norm(), tol,
                     {{"dim", source.dim()}, {"d", source.spacetime_dim()}});
}

inline CheckReport check_covariance(const ExtendedRep& rep, int entry, const MinkowskiVector& x,
                                    const geometry::SkewWarpMatrix& q, const OperatorMatrix& f,
                                    double tol = kSpectralTol) {
  return check_covariance(rep.base, rep.actions.at(entry), x, q, f, tol);
}

}  // namespace warpcon::spectral
