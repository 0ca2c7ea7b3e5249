#include "warpcon/wedge_algebra.hpp"

#include <gtest/gtest.h>

#include <complex>
#include <vector>

#include "warpcon/fock.hpp"
#include "warpcon/models.hpp"
#include "warpcon/rng.hpp"

using namespace warpcon;
using namespace warpcon::wedge_algebra;
using fock::TruncatedFockSpace;
using geometry::LorentzTransform;
using geometry::MinkowskiVector;
using geometry::PoincareElement;
using geometry::Wedge;
using geometry::warp_matrix;

namespace {

using cplx = std::complex<double>;

MinkowskiVector vec2(double t, double x) {
  MinkowskiVector v(2);
  v << t, x;
  return v;
}

TruncatedFockSpace reference_model() { return TruncatedFockSpace::lattice(2, 1.0, 1, 1.0, 2); }

Eigen::VectorXcd unit_amplitude(int modes, int which, cplx value = 1.0) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(modes);
  a(which) = value;
  return a;
}

/// Hermitian count-preserving bilinears over a pair of modes; they commute
/// exactly with any such family on disjoint modes, truncation included.
std::vector<spectral::OperatorMatrix> bilinear_generators(const TruncatedFockSpace& f, int m1,
                                                          int m2) {
  const auto up1 = f.creation(m1), dn1 = f.annihilation(m1);
  const auto up2 = f.creation(m2), dn2 = f.annihilation(m2);
  std::vector<spectral::OperatorMatrix> gens;
  gens.push_back(up1 * dn1);
  gens.push_back(up2 * dn2);
  gens.push_back(up1 * dn2 + up2 * dn1);
  gens.push_back(cplx(0, 1) * (up1 * dn2 - up2 * dn1));
  return gens;
}

TEST(DeformForWedge, StandardWedgeUsesTheStandardTwist) {
  const auto f = reference_model();
  Rng rng(3);
  const auto a = models::random_operator(rng, f.dim());
  const auto lhs = deform_for_wedge(Wedge::standard(2), a, f.decomposition(), 1.0);
  const auto rhs = spectral::warp_right(f.decomposition(), warp_matrix(1.0, 2), a);
  EXPECT_EQ((lhs - rhs).norm(), 0.0);
}

TEST(DeformForWedge, KappaZeroLeavesEveryWedgeUndeformed) {
  const auto f = reference_model();
  Rng rng(5);
  const auto a = models::random_operator(rng, f.dim());
  for (const Wedge& w : {Wedge::standard(2), Wedge::standard(2).translated(vec2(1, 2)),
                         Wedge::standard(2).causal_complement()})
    EXPECT_EQ((deform_for_wedge(w, a, f.decomposition(), 0.0) - a).norm(), 0.0);
}

TEST(DeformForWedge, RotatedWedgeCarriesTheOppositeTwist) {
  Rng rng(7);
  const auto rep = models::rotation_closed_d3(rng, 3, 1, /*physical=*/true);
  const auto a = models::random_operator(rng, rep.base.dim());
  const Wedge rotated = Wedge::standard(3).transformed(
      PoincareElement::pure_lorentz(LorentzTransform::pi_rotation12(3)));
  const auto lhs = deform_for_wedge(rotated, a, rep.base, 0.8);
  const geometry::SkewWarpMatrix qneg{-warp_matrix(0.8, 3).matrix, std::nullopt};
  EXPECT_LT((lhs - spectral::warp_right(rep.base, qneg, a)).norm(), 1e-13);
}

TEST(DefinitionConsistency, BoostComposedRepresentativeAgrees) {
  const auto f = reference_model();
  Rng rng(11);
  const auto a = models::random_operator(rng, f.dim());
  const MinkowskiVector shift = vec2(0.0, 1.5);
  const Wedge w = Wedge::standard(2).translated(shift);
  // alt = (B_eta, shift) also maps W0 onto w
  const PoincareElement alt{LorentzTransform::boost01(2, 0.9), shift};
  const auto r = check_definition_consistency(w, a, f.decomposition(), 1.0, alt);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(DefinitionConsistency, TranslationRepresentativeIsTrivial) {
  const auto f = reference_model();
  Rng rng(13);
  const auto a = models::random_operator(rng, f.dim());
  const Wedge w = Wedge::standard(2).translated(vec2(0.5, 2.0));
  const auto r = check_definition_consistency(w, a, f.decomposition(), 1.0, w.representative());
  EXPECT_TRUE(r.pass);
}

TEST(DefinitionConsistency, RejectsMismatchedPresentations) {
  const auto f = reference_model();
  Rng rng(17);
  const auto a = models::random_operator(rng, f.dim());
  const Wedge w = Wedge::standard(2).translated(vec2(0, 1));
  const PoincareElement wrong = PoincareElement::pure_translation(vec2(0, 2));
  EXPECT_THROW(check_definition_consistency(w, a, f.decomposition(), 1.0, wrong),
               std::invalid_argument);
  // d = 2 left-class wedges have no identity-component presentation at all
  const Wedge left = Wedge::standard(2).causal_complement();
  EXPECT_THROW(check_definition_consistency(left, a, f.decomposition(), 1.0,
                                            left.representative()),
               std::invalid_argument);
}

TEST(Isotony, IdenticalWedgesHaveVanishingResidual) {
  const auto f = reference_model();
  std::vector<spectral::OperatorMatrix> gens;
  for (int m = 0; m < 3; ++m) gens.push_back(f.free_field(unit_amplitude(3, m)));
  const auto alg = WedgeAlgebra::make(Wedge::standard(2), gens, 1.0, 2);
  const auto r = check_isotony(alg, alg, f.decomposition());
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Isotony, SubsetConstructionIsExact) {
  const auto f = reference_model();
  std::vector<spectral::OperatorMatrix> outer_gens, inner_gens;
  for (int m = 0; m < 3; ++m) {
    outer_gens.push_back(f.free_field(unit_amplitude(3, m)));
    outer_gens.push_back(f.free_field(unit_amplitude(3, m, cplx(0, 1))));
  }
  inner_gens.push_back(outer_gens[0]);
  inner_gens.push_back(outer_gens[3]);
  const Wedge w0 = Wedge::standard(2);
  const auto inner = WedgeAlgebra::make(w0.translated(vec2(0, 1)), inner_gens, 1.0, 2);
  const auto outer = WedgeAlgebra::make(w0, outer_gens, 1.0, 2);
  const auto r = check_isotony(inner, outer, f.decomposition());
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Isotony, TranslatedFieldsStayInTheSpan) {
  const auto f = reference_model();
  const auto& s = f.decomposition();
  const MinkowskiVector shift = vec2(0, 1);
  std::vector<spectral::OperatorMatrix> outer_gens, inner_gens;
  for (int m = 0; m < 3; ++m) {
    outer_gens.push_back(f.free_field(unit_amplitude(3, m)));
    outer_gens.push_back(f.free_field(unit_amplitude(3, m, cplx(0, 1))));
  }
  // fields of the inner wedge: translates of fields with mixed amplitudes
  Rng rng(19);
  for (int t = 0; t < 3; ++t) {
    Eigen::VectorXcd amp(3);
    for (int m = 0; m < 3; ++m) amp(m) = rng.cnormal();
    inner_gens.push_back(spectral::adjoint_action(s, shift, f.free_field(amp)));
  }
  const auto inner = WedgeAlgebra::make(Wedge::standard(2).translated(shift), inner_gens, 1.0, 3);
  const auto outer = WedgeAlgebra::make(Wedge::standard(2), outer_gens, 1.0, 3);
  const auto r = check_isotony(inner, outer, s);
  EXPECT_TRUE(r.pass) << r.residual;
  EXPECT_LT(r.residual, 1e-10);
}

TEST(Isotony, PreconditionsAreEnforced) {
  const auto f = reference_model();
  std::vector<spectral::OperatorMatrix> gens = {f.free_field(unit_amplitude(3, 0))};
  const auto a1 = WedgeAlgebra::make(Wedge::standard(2), gens, 1.0, 2);
  const auto a2 = WedgeAlgebra::make(Wedge::standard(2).translated(vec2(0, 1)), gens, 1.0, 2);
  EXPECT_THROW(check_isotony(a1, a2, f.decomposition()), std::invalid_argument);  // not nested
  const auto a3 = WedgeAlgebra::make(Wedge::standard(2).causal_complement(), gens, 1.0, 2);
  EXPECT_THROW(check_isotony(a3, a1, f.decomposition()), std::invalid_argument);  // different twist
}

TEST(Locality, TensorSplitInstanceIsExact) {
  Rng rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const auto inst = models::tensor_split(rng, 3, 3, 2);
    const auto r = check_locality({inst.f, inst.f.adjoint()}, {inst.g, inst.g.adjoint()},
                                  inst.decomposition, 1.0);
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.hard);
    EXPECT_LT(r.params.at("hypothesis_max").get<double>(), 1e-12);
    EXPECT_LT(r.residual, 1e-12);
  }
}

TEST(Locality, DisjointModeBilinearsOnTheFockModelAreExact) {
  const auto f = TruncatedFockSpace::lattice(2, 1.0, 2, 1.0, 2);  // modes -2..2
  const auto a_gens = bilinear_generators(f, 3, 4);  // right movers
  const auto b_gens = bilinear_generators(f, 0, 1);  // left movers
  const auto r = check_locality(a_gens, b_gens, f.decomposition(), 1.0);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.hard);
  EXPECT_LT(r.params.at("hypothesis_max").get<double>(), 1e-12);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Locality, UndeformedCommutingPairHasZeroResidual) {
  const auto f = reference_model();
  spectral::OperatorMatrix na = f.creation(0) * f.annihilation(0);
  spectral::OperatorMatrix nb = f.creation(2) * f.annihilation(2);
  const auto r = check_locality({na}, {nb}, f.decomposition(), 0.0);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.residual, 0.0);
}

TEST(Locality, ApproximateInstancesAreReportedNotAsserted) {
  // smeared fields on the lattice violate the hypothesis at truncation order;
  // the check must flag the instance as soft instead of failing it
  const auto f = reference_model();
  Eigen::VectorXcd fa = Eigen::VectorXcd::Zero(3), fb = Eigen::VectorXcd::Zero(3);
  fa(2) = 1.0;
  fb(0) = 1.0;
  const auto r = check_locality({f.free_field(fa)}, {f.free_field(fb)}, f.decomposition(), 1.0);
  EXPECT_FALSE(r.hard);
  EXPECT_GT(r.params.at("hypothesis_max").get<double>(), 1e-6);
  EXPECT_FALSE(r.note.empty());
}

TEST(ReehSchlieder, LadderOperatorIsExact) {
  const auto f = reference_model();
  for (int m = 0; m < 3; ++m) {
    const auto r = check_reeh_schlieder(f.creation(m), f.decomposition(), 1.0);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.residual, 0.0);
  }
}

TEST(ReehSchlieder, RandomOperators) {
  const auto f = reference_model();
  Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r =
        check_reeh_schlieder(models::random_operator(rng, f.dim()), f.decomposition(),
                             rng.uniform(0.0, 2.0));
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.residual, 1e-12);
  }
}

TEST(ReehSchlieder, CyclicSubspaceContainment) {
  const auto f = reference_model();
  std::vector<spectral::OperatorMatrix> gens;
  for (int m = 0; m < 3; ++m) gens.push_back(f.free_field(unit_amplitude(3, m)));
  const auto r = check_cyclic_subspace(gens, f.decomposition(), 1.0, 2);
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, 1e-10);
  // kappa = 0: the two subspaces are identical, residual at rounding level
  const auto r0 = check_cyclic_subspace(gens, f.decomposition(), 0.0, 2);
  EXPECT_LT(r0.residual, 1e-14);
}

TEST(AssignmentCovariance, TranslationsOnTheFockModel) {
  const auto f = reference_model();
  Rng rng(31);
  const auto& s = f.decomposition();
  for (int trial = 0; trial < 10; ++trial) {
    const MinkowskiVector x = rng.vector(2, -2, 2);
    const PoincareElement lam = PoincareElement::pure_translation(x);
    const auto u = spectral::translation_unitary(s, x);
    const Wedge w = Wedge::standard(2).translated(rng.vector(2, -1, 1));
    const auto r = check_assignment_covariance(w, models::random_operator(rng, f.dim()), lam, u,
                                               s, s, 1.0);
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.residual, 1e-12);
  }
}

TEST(AssignmentCovariance, RotationsOnClosedSpectra) {
  Rng rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    const auto rep = models::rotation_closed_d3(rng, 3, 1, /*physical=*/true);
    const auto& entry = rep.actions.front();
    const MinkowskiVector x = rng.vector(3, -2, 2);
    const PoincareElement lam{entry.lambda, x};
    const auto u = rep.poincare_unitary(0, x);
    const Wedge w = Wedge::standard(3);
    const auto r = check_assignment_covariance(w, models::random_operator(rng, rep.base.dim()),
                                               lam, u, rep.base, rep.base, 0.7);
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.residual, 1e-12);
  }
}

TEST(AdjointStability, DeformedGeneratorSetsStayStarClosed) {
  const auto f = reference_model();
  Rng rng(41);
  std::vector<spectral::OperatorMatrix> gens = {models::random_operator(rng, f.dim())};
  const auto alg = WedgeAlgebra::make(Wedge::standard(2), gens, 1.0, 2);
  EXPECT_EQ(alg.generators.size(), 2u);  // adjoint appended
  const auto r = check_adjoint_stability(alg, f.decomposition());
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Germ, DeformedFactorAlgebraSatisfiesBothConditions) {
  Rng rng(43);
  const auto inst = models::swap_reflection_d3(rng, 3);
  const auto& s = inst.decomposition;
  const auto q = warp_matrix(1.0, 3);
  std::vector<spectral::OperatorMatrix> gens;
  for (const auto& g : inst.factor_algebra) gens.push_back(spectral::warp_right(s, q, g));

  std::vector<GermElement> preserving, reflecting;
  for (int i = 0; i < 3; ++i) {
    MinkowskiVector a(3);
    a(0) = rng.uniform(-1, 1);
    a(1) = std::abs(a(0)) + rng.uniform(0, 1);
    a(2) = rng.uniform(-1, 1);
    preserving.push_back({PoincareElement::pure_translation(a), spectral::translation_unitary(s, a)});
  }
  {
    MinkowskiVector b(3);
    b(0) = 0.3;
    b(1) = -(std::abs(b(0)) + 0.5);
    b(2) = -0.2;
    const PoincareElement lam{inst.rotation, b};
    reflecting.push_back({lam, spectral::translation_unitary(s, b) * inst.reflection_unitary});
  }
  const auto r = validate_germ(gens, s, preserving, reflecting, 2);
  EXPECT_TRUE(r.pass) << r.params.dump();
  EXPECT_LT(r.residual, 1e-10);
}

TEST(Germ, FullMatrixAlgebraFailsTheReflectionCondition) {
  Rng rng(47);
  const auto inst = models::swap_reflection_d3(rng, 2);
  const auto& s = inst.decomposition;
  // hermitian basis of the full matrix algebra
  std::vector<spectral::OperatorMatrix> gens;
  const int n = s.dim();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      spectral::OperatorMatrix e = spectral::OperatorMatrix::Zero(n, n);
      if (a == b) {
        e(a, a) = 1.0;
        gens.push_back(e);
      } else {
        e(a, b) = e(b, a) = 1.0;
        gens.push_back(e);
        e(a, b) = cplx(0, 1);
        e(b, a) = cplx(0, -1);
        gens.push_back(e);
      }
    }
  std::vector<GermElement> preserving, reflecting;
  MinkowskiVector a = MinkowskiVector::Zero(3);
  a(1) = 1.0;
  preserving.push_back({PoincareElement::pure_translation(a), spectral::translation_unitary(s, a)});
  reflecting.push_back({PoincareElement::pure_lorentz(inst.rotation), inst.reflection_unitary});
  const auto r = validate_germ(gens, s, preserving, reflecting, 1);
  EXPECT_FALSE(r.pass);
  EXPECT_LT(r.params.at("span_residual").get<double>(), 1e-10);      // (a) trivially fine
  EXPECT_GT(r.params.at("commutant_residual").get<double>(), 1e-3);  // (b) fails
}

TEST(Germ, EmptyElementListsAreAVacuousPass) {
  Rng rng(53);
  const auto inst = models::swap_reflection_d3(rng, 2);
  const auto r = validate_germ(inst.factor_algebra, inst.decomposition, {}, {}, 1);
  EXPECT_TRUE(r.pass);
  EXPECT_NE(r.note.find("vacuous"), std::string::npos);
}

TEST(Germ, GeometricPreconditionsAreVerified) {
  Rng rng(59);
  const auto inst = models::swap_reflection_d3(rng, 2);
  const auto& s = inst.decomposition;
  MinkowskiVector bad = MinkowskiVector::Zero(3);
  bad(1) = -5.0;  // translation out of the wedge
  std::vector<GermElement> preserving = {
      {PoincareElement::pure_translation(bad), spectral::translation_unitary(s, bad)}};
  EXPECT_THROW(validate_germ(inst.factor_algebra, s, preserving, {}, 1), std::invalid_argument);
}

TEST(KappaZero, DeformedFamilyCollapsesToTheUndeformedOne) {
  const auto f = reference_model();
  Rng rng(61);
  const auto& s = f.decomposition();
  const auto a = models::random_operator(rng, f.dim());
  for (const Wedge& w : {Wedge::standard(2), Wedge::standard(2).causal_complement(),
                         Wedge::standard(2).translated(vec2(1, -1))})
    EXPECT_LT((deform_for_wedge(w, a, s, 0.0) - a).norm(), 1e-14);
  EXPECT_EQ(check_reeh_schlieder(a, s, 0.0).residual, 0.0);
}

}  // namespace
