#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "warpcon/fock.hpp"
#include "warpcon/geometry.hpp"
#include "warpcon/spectral.hpp"

namespace warpcon::scattering {

using geometry::MinkowskiVector;
using geometry::SkewWarpMatrix;
using fock::TruncatedFockSpace;
using spectral::OperatorMatrix;

inline constexpr double kLatticeTol = 1e-9;

// ---------------------------------------------------------------------------
// Velocity supports and precedence
// ---------------------------------------------------------------------------

struct VelocitySupport {
  std::vector<MinkowskiVector> velocities;  // (1, p/omega) per occupied mode
};

inline VelocitySupport velocity_support(const TruncatedFockSpace& f,
                                        const Eigen::VectorXcd& amplitudes,
                                        double support_tol = 0.0) {
  if (amplitudes.size() != f.mode_count())
    throw std::invalid_argument("velocity_support: one amplitude per mode required");
  VelocitySupport v;
  for (int m = 0; m < f.mode_count(); ++m)
    if (std::abs(amplitudes(m)) > support_tol) v.velocities.push_back(f.modes()[m].velocity());
  if (v.velocities.empty()) throw std::invalid_argument("velocity_support: empty support");
  return v;
}

/// first > second: every velocity difference lies in the open interior of the
/// standard wedge. Velocity differences have exactly vanishing time component,
/// so the condition is a strictly positive first spatial component.
inline bool precedes(const VelocitySupport& first, const VelocitySupport& second) {
  for (const auto& v1 : first.velocities)
    for (const auto& v2 : second.velocities)
      if (!(v1(1) - v2(1) > 0.0)) return false;
  return true;
}

inline bool precedes(const TruncatedFockSpace& f, const Eigen::VectorXcd& first,
                     const Eigen::VectorXcd& second) {
  return precedes(velocity_support(f, first), velocity_support(f, second));
}

// ---------------------------------------------------------------------------
// Wave-packet smearing in the spectral representation
// ---------------------------------------------------------------------------

/// Momentum-space wave packet data: one amplitude per lattice mode and the
/// packet time. The position-space smearing integral is never discretized;
/// it acts as an exact momentum-transfer filter on spectral blocks.
struct HeppPacketSpec {
  Eigen::VectorXcd amplitudes;
  double time = 0.0;
};

struct SmearStats {
  int dropped_blocks = 0;  // nonzero blocks whose transfer misses the lattice
};

/// One oscillation frequency of a smeared operator together with the summed
/// filtered blocks at that frequency.
struct FrequencyComponent {
  double frequency = 0.0;  // transfer energy minus the on-shell energy
  OperatorMatrix op;
};

/// Decomposes `a` into frequency components of the smeared operator
/// A(f_t) = sum_{blocks} f~(transfer) exp(i (transfer_0 - omega) t) E_j A E_k.
/// The block (j,k) survives iff the spatial transfer hits a lattice mode.
inline std::vector<FrequencyComponent> hepp_frequency_components(const TruncatedFockSpace& f,
                                                                 const OperatorMatrix& a,
                                                                 const Eigen::VectorXcd& amplitudes,
                                                                 SmearStats* stats = nullptr) {
  if (amplitudes.size() != f.mode_count())
    throw std::invalid_argument("hepp smearing: one amplitude per mode required");
  if (a.rows() != f.dim() || a.cols() != f.dim())
    throw std::invalid_argument("hepp smearing: operator dimension mismatch");
  const auto& s = f.decomposition();
  const int ng = s.group_count();
  const int sdim = f.spacetime_dim() - 1;

  // per group pair: lattice mode carrying the transfer (or -1) and frequency
  Eigen::MatrixXi mode_of(ng, ng);
  Eigen::MatrixXd freq_of(ng, ng);
  for (int j = 0; j < ng; ++j)
    for (int k = 0; k < ng; ++k) {
      const MinkowskiVector transfer = s.points()[j].momentum - s.points()[k].momentum;
      int mode = -1;
      for (int m = 0; m < f.mode_count(); ++m)
        if ((f.modes()[m].spatial - transfer.tail(sdim)).cwiseAbs().maxCoeff() < kLatticeTol) {
          mode = m;
          break;
        }
      mode_of(j, k) = mode;
      freq_of(j, k) = (mode >= 0) ? transfer(0) - f.modes()[mode].energy : 0.0;
    }

  std::vector<FrequencyComponent> comps;
  auto component_for = [&](double nu) -> OperatorMatrix& {
    for (auto& c : comps)
      if (std::abs(c.frequency - nu) < kLatticeTol) return c.op;
    comps.push_back({nu, OperatorMatrix::Zero(f.dim(), f.dim())});
    return comps.back().op;
  };

  Eigen::MatrixXi dropped = Eigen::MatrixXi::Zero(ng, ng);
  for (int b = 0; b < f.dim(); ++b)
    for (int c = 0; c < f.dim(); ++c) {
      if (a(b, c) == std::complex<double>(0.0, 0.0)) continue;
      const int j = s.group_of_column(b);
      const int k = s.group_of_column(c);
      const int mode = mode_of(j, k);
      if (mode < 0) {
        dropped(j, k) = 1;
        continue;
      }
      if (amplitudes(mode) == std::complex<double>(0.0, 0.0)) continue;
      component_for(freq_of(j, k))(b, c) = amplitudes(mode) * a(b, c);
    }
  if (stats) stats->dropped_blocks = dropped.sum();
  return comps;
}

/// Smears `a` with the packet: sum of the frequency components weighted by
/// exp(i nu t).
inline OperatorMatrix hepp_packet_operator(const TruncatedFockSpace& f, const OperatorMatrix& a,
                                           const HeppPacketSpec& spec,
                                           SmearStats* stats = nullptr) {
  const auto comps = hepp_frequency_components(f, a, spec.amplitudes, stats);
  OperatorMatrix out = OperatorMatrix::Zero(f.dim(), f.dim());
  for (const auto& c : comps) out += std::polar(1.0, c.frequency * spec.time) * c.op;
  return out;
}

// ---------------------------------------------------------------------------
// Two-particle states and phases
// ---------------------------------------------------------------------------

enum class Direction { In, Out };

inline const char* to_string(Direction d) { return d == Direction::In ? "in" : "out"; }

namespace detail {

inline Eigen::VectorXcd one_particle_amplitudes(const TruncatedFockSpace& f,
                                                const Eigen::VectorXcd& psi, const char* who) {
  if (psi.size() != f.dim()) throw std::invalid_argument("two_particle: vector dimension mismatch");
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(f.mode_count());
  double outside = 0.0;
  for (int i = 0; i < f.dim(); ++i) {
    if (f.total_count(i) == 1) continue;
    outside = std::max(outside, std::abs(psi(i)));
  }
  if (outside > 1e-12 * std::max(1.0, psi.norm()))
    throw std::invalid_argument(std::string(who) + ": vector not supported in the one-particle sector");
  for (int m = 0; m < f.mode_count(); ++m) amp(m) = psi(f.one_particle_index(m));
  return amp;
}

}  // namespace detail

/// Deformed symmetric two-particle vector
///   sum_j E2_j ( U(Q p_j) psi1 (x) psi2 ),  embedded as a*(.) a*(.) Omega.
/// The formula is direction independent; the direction fixes which precedence
/// configuration is admitted (in: second > first, out: first > second).
inline Eigen::VectorXcd deformed_two_particle(const TruncatedFockSpace& f,
                                              const Eigen::VectorXcd& psi1,
                                              const Eigen::VectorXcd& psi2,
                                              const SkewWarpMatrix& q, Direction direction) {
  const Eigen::VectorXcd c1 = detail::one_particle_amplitudes(f, psi1, "psi1");
  const Eigen::VectorXcd c2 = detail::one_particle_amplitudes(f, psi2, "psi2");
  const VelocitySupport g1 = velocity_support(f, c1, 1e-14 * std::max(1.0, c1.norm()));
  const VelocitySupport g2 = velocity_support(f, c2, 1e-14 * std::max(1.0, c2.norm()));
  const bool admissible = (direction == Direction::In) ? precedes(g2, g1) : precedes(g1, g2);
  if (!admissible)
    throw std::invalid_argument("deformed_two_particle: precedence configuration does not match the direction");

  const auto& s = f.decomposition();
  std::vector<Eigen::VectorXcd> created(f.mode_count());
  for (int m = 0; m < f.mode_count(); ++m)
    created[m] = f.creation(m) * f.vacuum_vector();

  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(f.dim());
  for (int k = 0; k < f.mode_count(); ++k) {
    if (c1(k) == std::complex<double>(0.0, 0.0)) continue;
    const MinkowskiVector pk = f.modes()[k].four_momentum();
    const OperatorMatrix ck = f.creation(k);
    for (int l = 0; l < f.mode_count(); ++l) {
      if (c2(l) == std::complex<double>(0.0, 0.0)) continue;
      std::vector<int> occ(f.mode_count(), 0);
      ++occ[k];
      ++occ[l];
      const int pair_state = f.state_index(occ);
      const MinkowskiVector total =
          s.points()[s.group_of_column(pair_state)].momentum;  // merged group momentum
      const std::complex<double> phase =
          std::polar(1.0, geometry::minkowski_inner(pk, q.matrix * total));
      out += phase * c1(k) * c2(l) * (ck * created[l]);
    }
  }
  return out;
}

struct TwoParticlePhase {
  MinkowskiVector p, q;
  double kappa = 0.0;
  Direction direction = Direction::In;
  std::complex<double> phase{1.0, 0.0};
};

namespace detail {

inline void require_on_shell(const MinkowskiVector& p, const char* who) {
  if (p.size() < 2) throw std::invalid_argument(std::string(who) + ": needs d >= 2");
  if (!(p(0) > 0.0) || !(geometry::minkowski_inner(p, p) > 1e-12))
    throw std::invalid_argument(std::string(who) + ": momentum is not on a positive mass shell");
}

inline void require_same_shell(const MinkowskiVector& p, const MinkowskiVector& q,
                               const char* who) {
  require_on_shell(p, who);
  require_on_shell(q, who);
  if (std::abs(geometry::minkowski_inner(p, p) - geometry::minkowski_inner(q, q)) > 1e-9)
    throw std::invalid_argument(std::string(who) + ": momenta lie on different mass shells");
}

}  // namespace detail

/// p Q_kappa q = kappa (p0 q1 - p1 q0): the phase exponent of sharp-momentum
/// two-particle states.
inline double twist_exponent(const MinkowskiVector& p, const MinkowskiVector& q, double kappa) {
  return kappa * (p(0) * q(1) - p(1) * q(0));
}

/// Sharp-momentum scattering phase: exp(+i |pQq|) incoming, exp(-i |pQq|)
/// outgoing.
inline TwoParticlePhase sharp_phase(const MinkowskiVector& p, const MinkowskiVector& q,
                                    double kappa, Direction direction) {
  detail::require_same_shell(p, q, "sharp_phase");
  const double z = std::abs(twist_exponent(p, q, kappa));
  return {p, q, kappa, direction, std::polar(1.0, direction == Direction::In ? z : -z)};
}

/// Ratio of the deformed to the undeformed elastic kernel:
/// exp(i |pQq| + i |p'Qq'|). Unit modulus encodes unchanged cross sections.
inline std::complex<double> s_kernel_ratio(const MinkowskiVector& p, const MinkowskiVector& q,
                                           const MinkowskiVector& pp, const MinkowskiVector& qp,
                                           double kappa) {
  detail::require_same_shell(p, q, "s_kernel_ratio");
  detail::require_same_shell(pp, qp, "s_kernel_ratio");
  return std::polar(1.0, std::abs(twist_exponent(p, q, kappa)) +
                             std::abs(twist_exponent(pp, qp, kappa)));
}

/// | |(Lp) Q (Lq)| - |p Q q| |: positive values witness the frame dependence
/// of the scattering phase. Vanishes identically for d = 2 boosts, where the
/// exponent is a 2x2 determinant.
inline double lorentz_breaking_witness(const MinkowskiVector& p, const MinkowskiVector& q,
                                       const geometry::LorentzTransform& l, double kappa) {
  detail::require_same_shell(p, q, "lorentz_breaking_witness");
  if (!l.valid()) throw std::invalid_argument("lorentz_breaking_witness: invalid transform");
  const int d = static_cast<int>(p.size());
  const Eigen::MatrixXd qm = geometry::warp_matrix(kappa, d).matrix;
  const double before = std::abs(geometry::minkowski_inner(p, qm * q));
  const double after =
      std::abs(geometry::minkowski_inner(l.apply(p), qm * l.apply(q)));
  return std::abs(after - before);
}

/// Maximal witness over rotations in the (1,2) plane, theta in (0, pi/2).
inline double max_rotation_witness(const MinkowskiVector& p, const MinkowskiVector& q,
                                   double kappa, int steps = 64) {
  if (p.size() < 3) throw std::invalid_argument("max_rotation_witness: needs d >= 3");
  double best = 0.0;
  for (int i = 1; i < steps; ++i) {
    const double theta = (M_PI / 2.0) * i / steps;
    best = std::max(best, lorentz_breaking_witness(
                              p, q, geometry::LorentzTransform::rotation(
                                        static_cast<int>(p.size()), 1, 2, theta), kappa));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Time-averaged convergence demonstration
// ---------------------------------------------------------------------------

struct CesaroRow {
  double horizon = 0.0;    // averaging window length T
  double deviation = 0.0;  // distance of the averaged vector from the target
};

/// Distance of the time average over [-T, 0] of A_Q(f_t) A'_{-Q}(f'_t) Omega
/// from the deformed two-particle target, per averaging horizon. The strong
/// t -> -infinity limit cannot exist on a finite space (the dynamics is almost
/// periodic); the averages are evaluated in closed form per oscillation
/// frequency, so the table is quadrature free.
inline std::vector<CesaroRow> cesaro_convergence_demo(const TruncatedFockSpace& f,
                                                      const OperatorMatrix& a,
                                                      const OperatorMatrix& aprime,
                                                      const Eigen::VectorXcd& amp_f,
                                                      const Eigen::VectorXcd& amp_fprime,
                                                      double kappa,
                                                      const std::vector<double>& horizons) {
  if (!precedes(f, amp_fprime, amp_f))
    throw std::invalid_argument("cesaro demo: in-configuration requires f' > f");
  const auto& s = f.decomposition();
  const int d = f.spacetime_dim();
  const SkewWarpMatrix q = geometry::warp_matrix(kappa, d);
  const SkewWarpMatrix qneg{-q.matrix, std::nullopt};
  const OperatorMatrix aw = spectral::warp(s, q, a);
  const OperatorMatrix bw = spectral::warp(s, qneg, aprime);
  const auto comps_a = hepp_frequency_components(f, aw, amp_f);
  const auto comps_b = hepp_frequency_components(f, bw, amp_fprime);

  const Eigen::VectorXcd omega = f.vacuum_vector();
  struct Term {
    double frequency;
    Eigen::VectorXcd vec;
  };
  std::vector<Term> terms;
  for (const auto& ca : comps_a)
    for (const auto& cb : comps_b) {
      Eigen::VectorXcd v = ca.op * (cb.op * omega);
      if (v.norm() == 0.0) continue;
      terms.push_back({ca.frequency + cb.frequency, std::move(v)});
    }

  auto one_particle_part = [&](const std::vector<FrequencyComponent>& comps) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(f.dim());
    for (const auto& c : comps)
      if (std::abs(c.frequency) < kLatticeTol) v += c.op * omega;
    for (int i = 0; i < f.dim(); ++i)
      if (f.total_count(i) != 1) v(i) = 0.0;
    return v;
  };
  const Eigen::VectorXcd psi1 = one_particle_part(comps_a);
  const Eigen::VectorXcd psi2 = one_particle_part(comps_b);
  const Eigen::VectorXcd target = deformed_two_particle(f, psi1, psi2, q, Direction::In);

  std::vector<CesaroRow> rows;
  for (double t : horizons) {
    Eigen::VectorXcd avg = Eigen::VectorXcd::Zero(f.dim());
    for (const auto& term : terms) {
      std::complex<double> c{1.0, 0.0};
      if (t > 0.0 && std::abs(term.frequency) > 1e-12) {
        const std::complex<double> imt(0.0, term.frequency * t);
        c = (1.0 - std::exp(-imt)) / imt;
      }
      avg += c * term.vec;
    }
    rows.push_back({t, (avg - target).norm()});
  }
  return rows;
}

}  // namespace warpcon::scattering
