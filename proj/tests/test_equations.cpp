#include "pctlab/clifford.hpp"
#include "pctlab/equations.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pctlab;

namespace {

const GammaSet& g() {
  static const GammaSet set = gamma_set("rep26");
  return set;
}

double e3(const MomentumPoint& p) { return p[2] > 0 ? 1.0 : -1.0; }
double energy(const MomentumPoint& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

CMatrix dirac(const MomentumPoint& p) {
  CMatrix h = zeros(4);
  for (int k = 1; k <= 3; ++k) h += g()[0] * g()[k] * p[k - 1];
  return h;
}

CMatrix chi_4c(const MomentumPoint& p) {
  return g()[0] * (g()[1] * p[0] + g()[2] * p[1]) + g()[0] * std::abs(p[2]);
}

}  // namespace

TEST(Catalog, HamiltonianValues) {
  EXPECT_LT(max_abs_diff(catalog_equation("chi_plus").hamiltonian.eval({1, 0, 2}), -pauli(2) + 2.0 * pauli(3)),
            1e-15);
  EXPECT_LT(max_abs_diff(catalog_equation("weyl_plus").hamiltonian.eval({0, 0, 1}), pauli(3)), 1e-15);
  EXPECT_LT(max_abs_diff(catalog_equation("spinless_plus").hamiltonian.eval({0, 0, 0.5}),
                         std::sqrt(1.25) * pauli(3)),
            1e-15);
  EXPECT_ANY_THROW(catalog_equation("nope"));
  EXPECT_ANY_THROW(catalog_unitary("nope"));
}

TEST(Catalog, FourComponentFormsFromGammas) {
  for (const auto& p : sample_momenta(3, 8, 17)) {
    EXPECT_LT(max_abs_diff(catalog_equation("dirac_massless").hamiltonian.eval(p), dirac(p)), 1e-14);
    EXPECT_LT(max_abs_diff(catalog_equation("chi_4c").hamiltonian.eval(p), chi_4c(p)), 1e-14);
    EXPECT_LT(max_abs_diff(catalog_equation("phi_diag").hamiltonian.eval(p), g()[0] * energy(p)), 1e-13);
  }
}

TEST(Catalog, WeylPairExpandsDirac) {
  // In the Weyl gamma set the massless Dirac operator is diag(σ·p, -σ·p).
  const GammaSet w = gamma_set("weyl");
  for (const auto& p : sample_momenta(3, 4, 19)) {
    CMatrix h = zeros(4);
    for (int k = 1; k <= 3; ++k) h += w[0] * w[k] * p[k - 1];
    EXPECT_LT(max_abs_diff(h.topLeftCorner(2, 2), catalog_equation("weyl_plus").hamiltonian.eval(p)), 1e-14);
    EXPECT_LT(max_abs_diff(h.bottomRightCorner(2, 2), catalog_equation("weyl_minus").hamiltonian.eval(p)), 1e-14);
  }
}

TEST(Transforms, ClosedFormsAgainstIndependentFormulas) {
  const OperatorField u1 = catalog_unitary("U1").closed, u2 = catalog_unitary("U2").closed;
  for (const auto& p : sample_momenta(3, 12, 23)) {
    const CMatrix want1 = oracle::expm_series((M_PI / 4) * e3(p) * g()[3]);
    EXPECT_LT(max_abs_diff(u1.eval(p), want1), 1e-14);
    const double e = energy(p), a = std::abs(p[2]);
    const CMatrix want2 = ((e + a) * identity(4) + g()[1] * p[0] + g()[2] * p[1]) / std::sqrt(2 * e * (e + a));
    EXPECT_LT(max_abs_diff(u2.eval(p), want2), 1e-14);
    EXPECT_LT(max_abs_diff(want1 * dirac(p) * want1.adjoint(), chi_4c(p)), 1e-12);
    EXPECT_LT(max_abs_diff(want2 * chi_4c(p) * want2.adjoint(), g()[0] * e), 1e-12);
  }
}

TEST(Transforms, CatalogSuitePasses) {
  const auto samples = sample_momenta(3, 12, 42);
  for (const auto& name : unitary_names()) {
    const CheckList checks = verify_transform(catalog_unitary(name), samples, 1e-9);
    EXPECT_TRUE(all_passed(checks)) << name;
    EXPECT_FALSE(checks.empty());
  }
}

TEST(Transforms, ExponentialFormsPresent) {
  for (const std::string name : {"U1", "U2", "V1"}) EXPECT_TRUE(catalog_unitary(name).exponential.has_value()) << name;
}

TEST(Transforms, CorruptedChiBreaksV1) {
  CatalogParams bad;
  bad.corrupt_chi = true;
  EXPECT_FALSE(all_passed(verify_transform(catalog_unitary("V1", bad), sample_momenta(3, 12, 42))));
  EXPECT_TRUE(all_passed(verify_transform(catalog_unitary("V1"), sample_momenta(3, 12, 42))));
}

TEST(Projectors, SuitePasses) {
  EXPECT_TRUE(all_passed(verify_projectors(sample_momenta(3, 12, 42))));
  const OperatorField k = subsidiary_k(1.0);
  for (const auto& p : sample_momenta(3, 6, 5)) {
    const CMatrix kp = k.eval(p);
    EXPECT_LT(max_abs_diff(kp * kp, identity(4)), 1e-12);
    const CMatrix a = subsidiary_e3(1).eval(p), b = subsidiary_e3(-1).eval(p);
    EXPECT_LT(max_abs_diff(a + b, identity(4)), 1e-15);
    EXPECT_LT(max_abs(a * b), 1e-15);
  }
}

TEST(Dispersion, AllIdentitiesHold) {
  CatalogParams params;
  params.mass = 0.7;
  params.kappa = 1.5;
  int covered = 0;
  for (const auto& name : equation_names()) {
    const EquationSpec eq = catalog_equation(name, params);
    if (!eq.dispersion) continue;
    ++covered;
    EXPECT_LT(dispersion_residual(eq, samples_for(eq, 12, 42)), 1e-10) << name;
  }
  EXPECT_GE(covered, 14);
  const EquationSpec ds = catalog_equation("desitter", params);
  const MomentumPoint p{1, 2, 3, 4};
  EXPECT_NEAR(ds.dispersion(p), 30.0 + 2.25, 1e-12);
  EXPECT_LT(lambda_consistency_residual(sample_momenta(3, 12, 42)), 1e-12);
}

TEST(Dispersion, ChiBlocksMatchTwoComponentForms) {
  const CMatrix qp = projector_q(g(), 1);
  const auto samples = sample_momenta(3, 6, 29);
  for (const auto& p : samples) {
    const CMatrix h = chi_4c(p);
    EXPECT_LT(max_abs_diff(qp * h, h * qp), 1e-12);
  }
}
