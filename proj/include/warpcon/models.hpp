#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>
#include <vector>

#include "warpcon/geometry.hpp"
#include "warpcon/rng.hpp"
#include "warpcon/spectral.hpp"

namespace warpcon::models {

using geometry::LorentzTransform;
using geometry::MinkowskiVector;
using geometry::PoincareElement;
using spectral::OperatorMatrix;
using spectral::SpectralDecomposition;

/// Random Lorentz-skew matrix Q = g M with M antisymmetric.
inline Eigen::MatrixXd random_skew(Rng& rng, int d, double scale = 1.0) {
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = rng.uniform(-scale, scale);
  return geometry::metric(d) * (m - m.transpose());
}

/// Random matrix with a symmetric (for the Lorentz form) part bounded away
/// from zero, so warp order independence generically fails.
inline Eigen::MatrixXd random_nonskew(Rng& rng, int d, double scale = 1.0) {
  Eigen::MatrixXd q = random_skew(rng, d, scale);
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) sym(i, j) = sym(j, i) = rng.uniform(0.5, 1.5) * (rng.coin() ? 1 : -1);
  return q + geometry::metric(d) * sym;
}

/// Random operator with Frobenius norm one.
inline OperatorMatrix random_operator(Rng& rng, int n) {
  OperatorMatrix f = rng.complex_gaussian(n, n);
  return f / f.norm();
}

inline OperatorMatrix kron(const OperatorMatrix& a, const OperatorMatrix& b) {
  OperatorMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline std::vector<MinkowskiVector> random_momenta(Rng& rng, int count, int d, double scale = 2.0,
                                                   double separation = 1e-6) {
  std::vector<MinkowskiVector> out;
  while (static_cast<int>(out.size()) < count) {
    MinkowskiVector p = rng.vector(d, -scale, scale);
    bool ok = true;
    for (const auto& q : out)
      if ((p - q).cwiseAbs().maxCoeff() < separation) ok = false;
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

/// Random finite model: a Haar-ish eigenbasis whose columns are distributed
/// over `groups` distinct momenta. Momenta are unconstrained (the order
/// independence, adjoint and composition identities carry no spectrum
/// condition).
inline SpectralDecomposition random_decomposition(Rng& rng, int n, int d, int groups) {
  if (groups > n) groups = n;
  const std::vector<MinkowskiVector> momenta = random_momenta(rng, groups, d);
  std::vector<MinkowskiVector> per_column(n);
  for (int c = 0; c < n; ++c)
    per_column[c] = momenta[c < groups ? c : rng.uniform_int(0, groups - 1)];
  return SpectralDecomposition::from_basis(rng.unitary(n), per_column);
}

/// Random model satisfying the spectrum condition: all momenta in the closed
/// forward cone, a distinguished invariant vacuum vector at momentum zero.
inline SpectralDecomposition random_physical(Rng& rng, int n, int d, int groups) {
  if (groups > n) groups = n;
  std::vector<MinkowskiVector> momenta;
  momenta.push_back(MinkowskiVector::Zero(d));
  while (static_cast<int>(momenta.size()) < groups) {
    MinkowskiVector p = geometry::sample_forward_cone(rng, d);
    p(0) += 0.1;  // keep clear of the vacuum point
    bool ok = true;
    for (const auto& q : momenta)
      if ((p - q).cwiseAbs().maxCoeff() < 1e-6) ok = false;
    if (ok) momenta.push_back(std::move(p));
  }
  std::vector<MinkowskiVector> per_column(n);
  per_column[0] = momenta[0];
  for (int c = 1; c < n; ++c) per_column[c] = momenta[rng.uniform_int(1, groups - 1)];
  return SpectralDecomposition::from_basis(rng.unitary(n), per_column, /*physical=*/true,
                                           /*vacuum_column=*/0);
}

// ---------------------------------------------------------------------------
// Tensor-split instances (exact commutation hypothesis)
// ---------------------------------------------------------------------------

struct TensorSplitInstance {
  SpectralDecomposition decomposition;
  OperatorMatrix f;  // F_A (x) 1
  OperatorMatrix g;  // 1 (x) G_B
  int dim_a = 0;
  int dim_b = 0;
};

/// Product of two diagonal translation groups with F acting on the first
/// factor and G on the second: opposite twisted translates commute exactly,
/// for every pair of spectral points.
inline TensorSplitInstance tensor_split(Rng& rng, int na, int nb, int d) {
  const std::vector<MinkowskiVector> pa = random_momenta(rng, na, d);
  const std::vector<MinkowskiVector> pb = random_momenta(rng, nb, d);
  std::vector<MinkowskiVector> joint(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) joint[i * nb + j] = pa[i] + pb[j];
  TensorSplitInstance inst;
  inst.decomposition = SpectralDecomposition::diagonal(joint);
  const OperatorMatrix fa = random_operator(rng, na);
  const OperatorMatrix gb = random_operator(rng, nb);
  inst.f = kron(fa, OperatorMatrix::Identity(nb, nb));
  inst.g = kron(OperatorMatrix::Identity(na, na), gb);
  inst.dim_a = na;
  inst.dim_b = nb;
  return inst;
}

// ---------------------------------------------------------------------------
// Covariance instances
// ---------------------------------------------------------------------------

/// d = 3 model whose spectrum is closed under the exact pi rotation in the
/// (1,2) plane; the intertwiner permutes the paired basis vectors. With
/// `physical` the momenta sit in the forward cone (which the rotation
/// preserves) and column 0 is an invariant vacuum at momentum zero.
inline spectral::ExtendedRep rotation_closed_d3(Rng& rng, int pairs, int fixed,
                                                bool physical = false) {
  const int d = 3;
  const LorentzTransform rot = LorentzTransform::pi_rotation12(d);
  std::vector<MinkowskiVector> momenta;
  const int vac = physical ? 1 : 0;
  const int n = vac + 2 * pairs + fixed;
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(n, n);
  if (physical) {
    momenta.push_back(MinkowskiVector::Zero(d));
    v(0, 0) = 1.0;
  }
  for (int i = 0; i < pairs; ++i) {
    MinkowskiVector p = physical ? geometry::sample_forward_cone(rng, d) : rng.vector(d, -2.0, 2.0);
    if (physical) p(0) += 0.1;
    // keep the pair clearly separated from its rotated partner
    if (std::abs(p(1)) + std::abs(p(2)) < 0.2) p(1) += 0.5;
    momenta.push_back(p);
    momenta.push_back(rot.apply(p));
    v(vac + 2 * i, vac + 2 * i + 1) = 1.0;  // swap within the pair
    v(vac + 2 * i + 1, vac + 2 * i) = 1.0;
  }
  for (int i = 0; i < fixed; ++i) {
    MinkowskiVector p = MinkowskiVector::Zero(d);
    p(0) = physical ? rng.uniform(0.3, 2.0) : rng.uniform(-2.0, 2.0);
    momenta.push_back(p);  // rotation-invariant momentum
    v(vac + 2 * pairs + i, vac + 2 * pairs + i) = 1.0;
  }
  SpectralDecomposition s =
      SpectralDecomposition::diagonal(momenta, physical, physical ? 0 : -1);
  spectral::ExtendedRep rep{s, {}};
  rep.actions.push_back({rot, v, s});
  return rep;
}

/// d = 2 boost realized between two separately built models: the target
/// carries the boosted momenta on a conjugated basis, the intertwiner is the
/// conjugating unitary. Finite mass shells are never boost closed, so one
/// model cannot carry the boost alone.
inline spectral::ExtendedRep boost_pair_d2(Rng& rng, int n, double rapidity) {
  const int d = 2;
  const LorentzTransform boost = LorentzTransform::boost01(d, rapidity);
  const std::vector<MinkowskiVector> momenta = random_momenta(rng, n, d);
  std::vector<MinkowskiVector> boosted(n);
  for (int i = 0; i < n; ++i) boosted[i] = boost.apply(momenta[i]);
  const Eigen::MatrixXcd v = rng.unitary(n);
  SpectralDecomposition source = SpectralDecomposition::diagonal(momenta);
  SpectralDecomposition target = SpectralDecomposition::from_basis(v, boosted);
  spectral::ExtendedRep rep{std::move(source), {}};
  rep.actions.push_back({boost, v, std::move(target)});
  return rep;
}

// ---------------------------------------------------------------------------
// Swap-reflection instance (wedge-reflecting unitary in d = 3)
// ---------------------------------------------------------------------------

struct SwapReflectionInstance {
  SpectralDecomposition decomposition;
  OperatorMatrix reflection_unitary;     // implements the exact pi rotation
  LorentzTransform rotation;
  std::vector<OperatorMatrix> factor_algebra;  // hermitian basis of M_A (x) 1
  int factor_dim = 0;
};

/// Two copies of one diagonal factor, the second carrying the pi-rotated
/// momenta. The swap unitary implements the rotation and maps the first
/// factor's algebra onto the second's, i.e. into its commutant.
inline SwapReflectionInstance swap_reflection_d3(Rng& rng, int factor_dim) {
  const int d = 3;
  const LorentzTransform rot = LorentzTransform::pi_rotation12(d);
  const std::vector<MinkowskiVector> qa = random_momenta(rng, factor_dim, d);
  const int n = factor_dim * factor_dim;
  std::vector<MinkowskiVector> joint(n);
  for (int i = 0; i < factor_dim; ++i)
    for (int j = 0; j < factor_dim; ++j)
      joint[i * factor_dim + j] = qa[i] + rot.apply(qa[j]);
  OperatorMatrix swap = OperatorMatrix::Zero(n, n);
  for (int i = 0; i < factor_dim; ++i)
    for (int j = 0; j < factor_dim; ++j) swap(j * factor_dim + i, i * factor_dim + j) = 1.0;

  SwapReflectionInstance inst;
  inst.decomposition = SpectralDecomposition::diagonal(joint);
  inst.reflection_unitary = std::move(swap);
  inst.rotation = rot;
  inst.factor_dim = factor_dim;
  const OperatorMatrix eye = OperatorMatrix::Identity(factor_dim, factor_dim);
  for (int a = 0; a < factor_dim; ++a)
    for (int b = a; b < factor_dim; ++b) {
      OperatorMatrix e = OperatorMatrix::Zero(factor_dim, factor_dim);
      if (a == b) {
        e(a, a) = 1.0;
        inst.factor_algebra.push_back(kron(e, eye));
      } else {
        e(a, b) = 1.0;
        e(b, a) = 1.0;
        inst.factor_algebra.push_back(kron(e, eye));
        e(a, b) = std::complex<double>(0.0, 1.0);
        e(b, a) = std::complex<double>(0.0, -1.0);
        inst.factor_algebra.push_back(kron(e, eye));
      }
    }
  return inst;
}

// ---------------------------------------------------------------------------
// Random Poincare elements
// ---------------------------------------------------------------------------

inline PoincareElement random_poincare(Rng& rng, int d) {
  LorentzTransform l = LorentzTransform::boost01(d, rng.uniform(-1.5, 1.5));
  if (d >= 3) {
    for (int j = 2; j < d; ++j)
      l = LorentzTransform::rotation(d, 1, j, rng.uniform(0.0, 2.0 * M_PI)) * l;
  }
  return {l, rng.vector(d, -2.0, 2.0)};
}

/// Element with lambda W0 inside W0: boost in the (0,1) plane, a rotation
/// fixing the (0,1) coordinates when available, and a translation into W0.
inline PoincareElement random_wedge_preserving(Rng& rng, int d) {
  LorentzTransform l = LorentzTransform::boost01(d, rng.uniform(-1.5, 1.5));
  if (d >= 4) l = LorentzTransform::rotation(d, 2, 3, rng.uniform(0.0, 2.0 * M_PI)) * l;
  MinkowskiVector a(d);
  a(0) = rng.uniform(-2.0, 2.0);
  a(1) = std::abs(a(0)) + rng.uniform(0.0, 2.0);
  for (int i = 2; i < d; ++i) a(i) = rng.uniform(-2.0, 2.0);
  return {l, a};
}

/// Element mapping the standard wedge onto itself: a boost in the (0,1)
/// plane, a rotation among the edge coordinates when available, and a
/// translation along the wedge edge.
inline PoincareElement random_wedge_fixing(Rng& rng, int d) {
  LorentzTransform l = LorentzTransform::boost01(d, rng.uniform(-1.5, 1.5));
  if (d >= 4) l = LorentzTransform::rotation(d, 2, 3, rng.uniform(0.0, 2.0 * M_PI)) * l;
  MinkowskiVector a = MinkowskiVector::Zero(d);
  for (int i = 2; i < d; ++i) a(i) = rng.uniform(-2.0, 2.0);
  return {l, a};
}

/// Element with lambda W0 inside the causal complement (d >= 3 only).
inline PoincareElement random_wedge_reflecting(Rng& rng, int d) {
  if (d < 3)
    throw std::invalid_argument("wedge reflection needs d >= 3 in the identity component");
  PoincareElement pre = random_wedge_preserving(rng, d);
  const LorentzTransform rot = LorentzTransform::pi_rotation12(d);
  return {rot * pre.lorentz, rot.apply(pre.translation)};
}

}  // namespace warpcon::models
