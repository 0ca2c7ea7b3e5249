#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "warpcon/geometry.hpp"
#include "warpcon/spectral.hpp"

namespace warpcon::fock {

using geometry::MinkowskiVector;
using spectral::OperatorMatrix;

/// A point of the mass shell: a spatial lattice momentum with its on-shell
/// energy omega = sqrt(p^2 + m^2) cached.
struct MassShellPoint {
  Eigen::VectorXd spatial;
  double mass = 0.0;
  double energy = 0.0;

  static MassShellPoint on_shell(Eigen::VectorXd spatial, double mass) {
    if (mass <= 0.0) throw std::invalid_argument("MassShellPoint: mass must be positive");
    MassShellPoint p;
    p.energy = std::sqrt(spatial.squaredNorm() + mass * mass);
    p.spatial = std::move(spatial);
    p.mass = mass;
    return p;
  }

  MinkowskiVector four_momentum() const {
    MinkowskiVector p(spatial.size() + 1);
    p(0) = energy;
    p.tail(spatial.size()) = spatial;
    return p;
  }

  /// Asymptotic velocity (1, p/omega).
  MinkowskiVector velocity() const {
    MinkowskiVector v(spatial.size() + 1);
    v(0) = 1.0;
    v.tail(spatial.size()) = spatial / energy;
    return v;
  }
};

/// Bosonic Fock space over a finite mode set with a total particle cutoff.
/// Ladder operators annihilate states that would exceed the cutoff, which
/// keeps creation and annihilation exact adjoints of each other.
class TruncatedFockSpace {
 public:
  static TruncatedFockSpace build(std::vector<MassShellPoint> modes, int n_max,
                                  int max_dim = 5000) {
    if (modes.empty()) throw std::invalid_argument("fock: need at least one mode");
    if (n_max < 0) throw std::invalid_argument("fock: cutoff must be >= 0");
    for (std::size_t i = 0; i < modes.size(); ++i)
      for (std::size_t j = i + 1; j < modes.size(); ++j)
        if ((modes[i].spatial - modes[j].spatial).cwiseAbs().maxCoeff() < 1e-12)
          throw std::invalid_argument("fock: duplicate modes");

    TruncatedFockSpace f;
    f.modes_ = std::move(modes);
    f.n_max_ = n_max;
    const int m = static_cast<int>(f.modes_.size());
    std::vector<int> occ(m, 0);
    for (int total = 0; total <= n_max; ++total) f.enumerate(occ, 0, total);
    if (f.dim() > max_dim)
      throw std::invalid_argument("fock: model dimension exceeds the configured guard");
    for (int i = 0; i < f.dim(); ++i) f.index_of_[f.basis_[i]] = i;

    std::vector<MinkowskiVector> momenta(f.dim());
    for (int i = 0; i < f.dim(); ++i) momenta[i] = f.total_momentum_of(f.basis_[i]);
    f.spectral_ = spectral::SpectralDecomposition::from_basis(
        Eigen::MatrixXcd::Identity(f.dim(), f.dim()), momenta, /*physical=*/true,
        /*vacuum_column=*/0);
    return f;
  }

  /// Symmetric lattice { -k .. k }^{d-1} * delta of spatial momenta.
  static TruncatedFockSpace lattice(int spacetime_dim, double mass, int k, double delta,
                                    int n_max, int max_dim = 5000) {
    if (spacetime_dim < 2) throw std::invalid_argument("fock: spacetime dimension must be >= 2");
    const int sdim = spacetime_dim - 1;
    std::vector<MassShellPoint> modes;
    std::vector<int> idx(sdim, -k);
    while (true) {
      Eigen::VectorXd p(sdim);
      for (int i = 0; i < sdim; ++i) p(i) = idx[i] * delta;
      modes.push_back(MassShellPoint::on_shell(p, mass));
      int i = 0;
      for (; i < sdim; ++i) {
        if (idx[i] < k) {
          ++idx[i];
          break;
        }
        idx[i] = -k;
      }
      if (i == sdim) break;
    }
    return build(std::move(modes), n_max, max_dim);
  }

  int dim() const { return static_cast<int>(basis_.size()); }
  int mode_count() const { return static_cast<int>(modes_.size()); }
  int cutoff() const { return n_max_; }
  int spacetime_dim() const { return static_cast<int>(modes_.front().spatial.size()) + 1; }
  const std::vector<MassShellPoint>& modes() const { return modes_; }
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  int vacuum_index() const { return 0; }
  const spectral::SpectralDecomposition& decomposition() const { return spectral_; }

  Eigen::VectorXcd vacuum_vector() const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim());
    v(0) = 1.0;
    return v;
  }

  int total_count(int state) const {
    int n = 0;
    for (int o : basis_[state]) n += o;
    return n;
  }

  MinkowskiVector total_momentum(int state) const { return total_momentum_of(basis_[state]); }

  int state_index(const std::vector<int>& occupation) const {
    const auto it = index_of_.find(occupation);
    return it == index_of_.end() ? -1 : it->second;
  }

  std::vector<int> sector(int count) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
      if (total_count(i) == count) out.push_back(i);
    return out;
  }

  /// Basis index of the one-particle state of the given mode.
  int one_particle_index(int mode) const {
    std::vector<int> occ(mode_count(), 0);
    occ[mode] = 1;
    return state_index(occ);
  }

  OperatorMatrix creation(int mode) const {
    check_mode(mode);
    OperatorMatrix a = OperatorMatrix::Zero(dim(), dim());
    for (int s = 0; s < dim(); ++s) {
      if (total_count(s) >= n_max_) continue;  // truncation: would exceed the cutoff
      std::vector<int> occ = basis_[s];
      ++occ[mode];
      a(state_index(occ), s) = std::sqrt(static_cast<double>(occ[mode]));
    }
    return a;
  }

  OperatorMatrix annihilation(int mode) const {
    check_mode(mode);
    OperatorMatrix a = OperatorMatrix::Zero(dim(), dim());
    for (int s = 0; s < dim(); ++s) {
      if (basis_[s][mode] == 0) continue;
      std::vector<int> occ = basis_[s];
      const double w = std::sqrt(static_cast<double>(occ[mode]));
      --occ[mode];
      a(state_index(occ), s) = w;
    }
    return a;
  }

  /// Invariant measure weight (2 omega_p)^{-1/2} used by the smeared field.
  double measure_weight(int mode) const { return 1.0 / std::sqrt(2.0 * modes_[mode].energy); }

  /// phi(f) = sum_p w_p ( f~(p) a*(p) + conj(f~(p)) a(p) ).
  OperatorMatrix free_field(const Eigen::VectorXcd& amplitudes) const {
    if (amplitudes.size() != mode_count())
      throw std::invalid_argument("free_field: one amplitude per mode required");
    OperatorMatrix phi = OperatorMatrix::Zero(dim(), dim());
    for (int m = 0; m < mode_count(); ++m) {
      if (amplitudes(m) == std::complex<double>(0.0, 0.0)) continue;
      const double w = measure_weight(m);
      phi += w * amplitudes(m) * creation(m);
      phi += w * std::conj(amplitudes(m)) * annihilation(m);
    }
    return phi;
  }

  /// Diagonal twist exp(i p . Q P), P the total-momentum generators.
  OperatorMatrix momentum_twist(const Eigen::MatrixXd& q, const MinkowskiVector& p) const {
    Eigen::VectorXcd diag(dim());
    for (int s = 0; s < dim(); ++s)
      diag(s) = std::polar(1.0, geometry::minkowski_inner(p, q * total_momentum(s)));
    return diag.asDiagonal();
  }

  /// a*(p) exp(i p Q P): the closed-form deformed creation operator, which
  /// doubles as the independent oracle for warping a*(p).
  OperatorMatrix twisted_creation(int mode, const geometry::SkewWarpMatrix& q) const {
    check_mode(mode);
    return creation(mode) * momentum_twist(q.matrix, modes_[mode].four_momentum());
  }

 private:
  void check_mode(int mode) const {
    if (mode < 0 || mode >= mode_count()) throw std::invalid_argument("fock: invalid mode index");
  }

  MinkowskiVector total_momentum_of(const std::vector<int>& occ) const {
    MinkowskiVector p = MinkowskiVector::Zero(spacetime_dim());
    for (int m = 0; m < mode_count(); ++m)
      if (occ[m] > 0) p += occ[m] * modes_[m].four_momentum();
    return p;
  }

  // occupation vectors of one total count, lexicographic in the mode index
  void enumerate(std::vector<int>& occ, int mode, int remaining) {
    const int m = static_cast<int>(modes_.size());
    if (mode == m) {
      if (remaining == 0) basis_.push_back(occ);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      occ[mode] = k;
      enumerate(occ, mode + 1, remaining - k);
    }
    occ[mode] = 0;
  }

  std::vector<MassShellPoint> modes_;
  std::vector<std::vector<int>> basis_;
  std::map<std::vector<int>, int> index_of_;
  spectral::SpectralDecomposition spectral_;
  int n_max_ = 0;
};

}  // namespace warpcon::fock
