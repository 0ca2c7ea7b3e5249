#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>

namespace warpcon {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Deterministic random source. All sampling goes through integer draws of a
/// mt19937_64 so that a fixed seed reproduces bit-identical streams on every
/// platform (std distributions are implementation-defined and avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// uniform double in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// inclusive range
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (gen_() & 1ull) != 0; }

  /// standard normal via Box-Muller
  double normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * M_PI * u2);
    has_cached_ = true;
    return r * std::cos(2.0 * M_PI * u2);
  }

  std::complex<double> cnormal() { return {normal(), normal()}; }

  Eigen::VectorXd vector(int n, double a, double b) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform(a, b);
    return v;
  }

  Eigen::MatrixXcd complex_gaussian(int rows, int cols) {
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = cnormal();
    return m;
  }

  /// Haar-ish random unitary: QR of a complex Gaussian with phase-fixed R.
  Eigen::MatrixXcd unitary(int n) {
    const Eigen::MatrixXcd g = complex_gaussian(n, n);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
      const std::complex<double> d = r(i, i);
      if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
    }
    return q;
  }

  /// Derived generator for an independent, label-addressed substream.
  Rng fork(const std::string& label) { return Rng(base_seed_mix_ ^ fnv1a(label)); }

  /// Remember the root seed so forks depend on (seed, label) only.
  static Rng rooted(std::uint64_t seed) {
    Rng r(seed);
    r.base_seed_mix_ = seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
    return r;
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t base_seed_mix_ = 0;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace warpcon
