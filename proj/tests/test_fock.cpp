#include "warpcon/fock.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "warpcon/models.hpp"
#include "warpcon/rng.hpp"
#include "warpcon/spectral.hpp"

using namespace warpcon;
using namespace warpcon::fock;
using geometry::MinkowskiVector;
using geometry::SkewWarpMatrix;
using geometry::warp_matrix;
using spectral::OperatorMatrix;

namespace {

using cplx = std::complex<double>;

/// d = 2, m = 1, modes {-1, 0, 1}, two-particle cutoff: the ten-dimensional
/// reference model.
TruncatedFockSpace reference_model() { return TruncatedFockSpace::lattice(2, 1.0, 1, 1.0, 2); }

TEST(BuildFock, ReferenceDimensionIsTen) {
  const auto f = reference_model();
  EXPECT_EQ(f.dim(), 10);  // 1 vacuum + 3 one-particle + 6 two-particle
  EXPECT_EQ(f.mode_count(), 3);
  EXPECT_EQ(f.sector(0).size(), 1u);
  EXPECT_EQ(f.sector(1).size(), 3u);
  EXPECT_EQ(f.sector(2).size(), 6u);
}

TEST(BuildFock, CutoffZeroGivesVacuumOnlyModel) {
  const auto f = TruncatedFockSpace::build({MassShellPoint::on_shell(Eigen::VectorXd::Zero(1), 1.0)}, 0);
  EXPECT_EQ(f.dim(), 1);
  const auto& s = f.decomposition();
  EXPECT_EQ(s.group_count(), 1);
  EXPECT_EQ(s.points()[0].momentum.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_TRUE(s.physical());
}

TEST(BuildFock, OneParticleMomentaSitOnTheMassShell) {
  const auto f = reference_model();
  const double r2 = std::sqrt(2.0);
  ASSERT_EQ(f.modes().size(), 3u);
  EXPECT_NEAR(f.modes()[0].energy, r2, 1e-15);
  EXPECT_NEAR(f.modes()[1].energy, 1.0, 1e-15);
  EXPECT_NEAR(f.modes()[2].energy, r2, 1e-15);
  EXPECT_EQ(f.modes()[0].spatial(0), -1.0);
  EXPECT_EQ(f.modes()[2].spatial(0), 1.0);
  for (const auto& m : f.modes())
    EXPECT_NEAR(m.energy, std::sqrt(m.spatial.squaredNorm() + m.mass * m.mass), 1e-14);
}

TEST(BuildFock, RejectsDuplicateModes) {
  Eigen::VectorXd p(1);
  p << 0.5;
  EXPECT_THROW(TruncatedFockSpace::build(
                   {MassShellPoint::on_shell(p, 1.0), MassShellPoint::on_shell(p, 1.0)}, 1),
               std::invalid_argument);
}

TEST(BuildFock, DimensionGuardIsEnforced) {
  EXPECT_THROW(TruncatedFockSpace::lattice(2, 1.0, 1, 1.0, 2, /*max_dim=*/5),
               std::invalid_argument);
}

TEST(BuildFock, VacuumIsTheUniqueZeroMomentumState) {
  const auto f = reference_model();
  EXPECT_EQ(f.vacuum_index(), 0);
  EXPECT_EQ(f.total_count(0), 0);
  for (int i = 1; i < f.dim(); ++i) EXPECT_GT(f.total_momentum(i)(0), 0.5);
  EXPECT_LT(f.decomposition().validate(), 1e-12);
}

TEST(Ladder, CreationOnVacuumHasUnitCoefficient) {
  const auto f = reference_model();
  const Eigen::VectorXcd one = f.creation(2) * f.vacuum_vector();
  EXPECT_NEAR(std::abs(one(f.one_particle_index(2))), 1.0, 1e-15);
  EXPECT_NEAR(one.norm(), 1.0, 1e-15);
}

TEST(Ladder, DoubleCreationCarriesSqrtTwo) {
  const auto f = reference_model();
  const Eigen::VectorXcd two = f.creation(1) * (f.creation(1) * f.vacuum_vector());
  std::vector<int> occ{0, 2, 0};
  EXPECT_NEAR(std::abs(two(f.state_index(occ))), std::sqrt(2.0), 1e-15);
}

TEST(Ladder, CreationAtTheCutoffAnnihilates) {
  const auto f = reference_model();
  Eigen::VectorXcd v = f.creation(0) * (f.creation(1) * (f.creation(2) * f.vacuum_vector()));
  EXPECT_EQ(v.norm(), 0.0);
}

TEST(Ladder, AnnihilationIsTheExactAdjoint) {
  const auto f = reference_model();
  for (int m = 0; m < f.mode_count(); ++m)
    EXPECT_EQ((f.annihilation(m) - f.creation(m).adjoint()).norm(), 0.0);
}

TEST(Ladder, CommutatorIsCanonicalBelowTheCutoff) {
  const auto f = reference_model();
  for (int p = 0; p < f.mode_count(); ++p)
    for (int q = 0; q < f.mode_count(); ++q) {
      const OperatorMatrix comm = f.annihilation(p) * f.creation(q) -
                                  f.creation(q) * f.annihilation(p);
      OperatorMatrix expect = OperatorMatrix::Zero(f.dim(), f.dim());
      if (p == q) expect = OperatorMatrix::Identity(f.dim(), f.dim());
      double sub_cutoff = 0.0, top = 0.0;
      for (int i = 0; i < f.dim(); ++i) {
        const double col = (comm.col(i) - expect.col(i)).norm();
        if (f.total_count(i) < f.cutoff())
          sub_cutoff = std::max(sub_cutoff, col);
        else
          top = std::max(top, col);
      }
      EXPECT_LT(sub_cutoff, 1e-15);  // canonical on the sub-cutoff sectors
      if (p == q) EXPECT_GT(top, 0.5);  // truncation defect confined to the top sector
    }
}

TEST(FreeField, SingleModeAmplitudeInterpolatesToOneParticle) {
  const auto f = reference_model();
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(3);
  amp(2) = 1.0;
  const Eigen::VectorXcd v = f.free_field(amp) * f.vacuum_vector();
  Eigen::VectorXcd expect = Eigen::VectorXcd::Zero(f.dim());
  expect(f.one_particle_index(2)) = f.measure_weight(2);
  EXPECT_LT((v - expect).norm(), 1e-15);
}

TEST(FreeField, HermitianForAnyAmplitudes) {
  const auto f = reference_model();
  Rng rng(3);
  Eigen::VectorXcd amp(3);
  for (int i = 0; i < 3; ++i) amp(i) = rng.cnormal();
  const OperatorMatrix phi = f.free_field(amp);
  EXPECT_EQ((phi - phi.adjoint()).norm(), 0.0);
}

TEST(FreeField, TwoPointFunctionOnTheLattice) {
  const auto f = reference_model();
  Rng rng(5);
  Eigen::VectorXcd amp(3);
  for (int i = 0; i < 3; ++i) amp(i) = rng.cnormal();
  const OperatorMatrix phi = f.free_field(amp);
  const Eigen::VectorXcd omega = f.vacuum_vector();
  const cplx lhs = omega.dot(phi * (phi * omega));
  double expect = 0.0;
  for (int m = 0; m < 3; ++m)
    expect += f.measure_weight(m) * f.measure_weight(m) * std::norm(amp(m));
  EXPECT_NEAR(lhs.real(), expect, 1e-14);
  EXPECT_NEAR(lhs.imag(), 0.0, 1e-14);
}

TEST(TwistedCreation, VacuumGetsNoPhase) {
  const auto f = reference_model();
  const SkewWarpMatrix q = warp_matrix(1.0, 2);
  for (int m = 0; m < f.mode_count(); ++m)
    EXPECT_EQ(((f.twisted_creation(m, q) - f.creation(m)) * f.vacuum_vector()).norm(), 0.0);
}

TEST(TwistedCreation, TenDimensionalHandValue) {
  // a*(p) e^{i p Q P} applied to |q>, p = (sqrt2, 1), q = (sqrt2, -1):
  // phase p Q q = -2 sqrt2
  const auto f = reference_model();
  const SkewWarpMatrix q = warp_matrix(1.0, 2);
  const Eigen::VectorXcd ket_q = f.creation(0) * f.vacuum_vector();
  const Eigen::VectorXcd out = f.twisted_creation(2, q) * ket_q;
  std::vector<int> pair{1, 0, 1};
  const cplx expect = std::polar(1.0, -2.0 * std::sqrt(2.0));
  EXPECT_LT(std::abs(out(f.state_index(pair)) - expect), 1e-14);
  EXPECT_NEAR(out.norm(), 1.0, 1e-14);
}

TEST(TwistedCreation, ZeroTwistReducesToCreation) {
  const auto f = reference_model();
  for (int m = 0; m < f.mode_count(); ++m)
    EXPECT_EQ((f.twisted_creation(m, warp_matrix(0.0, 2)) - f.creation(m)).norm(), 0.0);
}

TEST(TwistedCreation, CoincidesWithTheWarpedCreationOperator) {
  // the closed-form twist is the independent oracle for the warp engine
  const auto f = reference_model();
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SkewWarpMatrix q = SkewWarpMatrix::checked(models::random_skew(rng, 2));
    for (int m = 0; m < f.mode_count(); ++m) {
      const OperatorMatrix warped = spectral::warp(f.decomposition(), q, f.creation(m));
      EXPECT_LT((warped - f.twisted_creation(m, q)).norm(), 1e-12);
    }
  }
}

TEST(Translations, LadderOperatorsAreCovariant) {
  const auto f = reference_model();
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const MinkowskiVector x = rng.vector(2, -3, 3);
    for (int m = 0; m < f.mode_count(); ++m) {
      const cplx phase = std::polar(1.0, geometry::minkowski_inner(f.modes()[m].four_momentum(), x));
      EXPECT_LT((spectral::adjoint_action(f.decomposition(), x, f.creation(m)) -
                 phase * f.creation(m))
                    .norm(),
                1e-12);
    }
  }
}

TEST(Translations, VacuumIsInvariant) {
  const auto f = reference_model();
  Rng rng(13);
  const MinkowskiVector x = rng.vector(2, -3, 3);
  EXPECT_LT((spectral::translation_unitary(f.decomposition(), x) * f.vacuum_vector() -
             f.vacuum_vector())
                .norm(),
            1e-15);
  EXPECT_EQ(f.total_momentum(f.vacuum_index()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(SpectrumShape, SectorsRespectTheMassGap) {
  // one-particle momenta on the m shell; multiparticle invariant mass >= 2m
  for (int k : {1, 2}) {
    const auto f = TruncatedFockSpace::lattice(2, 1.0, k, 1.0, 2);
    const double m = 1.0;
    for (int i = 0; i < f.dim(); ++i) {
      const MinkowskiVector p = f.total_momentum(i);
      const int count = f.total_count(i);
      if (count == 1) {
        EXPECT_NEAR(geometry::minkowski_inner(p, p), m * m, 1e-12);
      } else if (count >= 2) {
        const double threshold = std::sqrt(geometry::spatial_norm(p) * geometry::spatial_norm(p) +
                                           4.0 * m * m);
        EXPECT_GE(p(0), threshold - 1e-12);
      }
    }
  }
}

TEST(SpectrumShape, ThreeDimensionalLatticeIsPhysical) {
  const auto f = TruncatedFockSpace::lattice(3, 0.8, 1, 0.7, 2);
  EXPECT_EQ(f.mode_count(), 9);
  EXPECT_LT(f.decomposition().validate(), 1e-12);
}

}  // namespace
