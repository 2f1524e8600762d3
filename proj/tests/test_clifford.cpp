#include "pctlab/clifford.hpp"

#include <gtest/gtest.h>

using namespace pctlab;

namespace {

CMatrix diag_blocks(const CMatrix& a, const CMatrix& d) { return block2x2(a, zeros(2), zeros(2), d); }
CMatrix off_blocks(const CMatrix& b, const CMatrix& c) { return block2x2(zeros(2), b, c, zeros(2)); }

}  // namespace

TEST(Pauli, Algebra) {
  EXPECT_EQ(max_abs_diff(pauli(3), CMatrix(Eigen::Vector2cd(1.0, -1.0).asDiagonal())), 0.0);
  for (int j = 1; j <= 3; ++j) {
    EXPECT_EQ(max_abs_diff(pauli(j) * pauli(j), identity(2)), 0.0);
    const int k = j % 3 + 1, l = k % 3 + 1;
    EXPECT_EQ(max_abs_diff(pauli(j) * pauli(k), kI * pauli(l)), 0.0);
  }
}

TEST(Gamma, Rep26Blocks) {
  const GammaSet& g = gamma_set("rep26");
  const CMatrix i2 = identity(2);
  EXPECT_EQ(max_abs_diff(g[0], diag_blocks(pauli(3), -pauli(3))), 0.0);
  EXPECT_EQ(max_abs_diff(g[1], diag_blocks(kI * pauli(1), -kI * pauli(1))), 0.0);
  EXPECT_EQ(max_abs_diff(g[2], diag_blocks(kI * pauli(2), -kI * pauli(2))), 0.0);
  EXPECT_EQ(max_abs_diff(g[3], off_blocks(kI * i2, kI * i2)), 0.0);
  EXPECT_EQ(max_abs_diff(g[4], off_blocks(kI * i2, -kI * i2)), 0.0);
}

TEST(Gamma, WeylProducts) {
  const GammaSet& g = gamma_set("weyl");
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(max_abs_diff(g[0] * g[k], diag_blocks(pauli(k), -pauli(k))), 0.0) << k;
}

TEST(Gamma, UnknownSetThrows) { EXPECT_ANY_THROW(gamma_set("nope")); }

TEST(Clifford, BothSetsExact) {
  for (const std::string name : {"rep26", "weyl"}) {
    const CliffordReport r = verify_clifford(gamma_set(name));
    EXPECT_EQ(r.residual, 0.0) << name;
    EXPECT_TRUE(r.passed);
  }
}

TEST(Clifford, PerturbedSetFails) {
  GammaSet g = gamma_set("rep26");
  g.gammas[1] *= 1.01;
  const CliffordReport r = verify_clifford(g);
  EXPECT_FALSE(r.passed);
  EXPECT_NEAR(r.residual, 1.01 * 1.01 - 1.0, 1e-12);
}

TEST(Spin, FormulaEntries) {
  const GammaSet& g = gamma_set("rep26");
  EXPECT_LT(max_abs_diff(spin_matrix(g, 5, 3).value, -0.5 * kI * g[3]), 1e-15);
  EXPECT_LT(max_abs_diff(spin_matrix(g, 4, 5).value, 0.5 * kI * g[4]), 1e-15);
  EXPECT_LT(max_abs_diff(spin_matrix(g, 1, 2).value, 0.25 * kI * commutator(g[1], g[2])), 1e-15);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      if (a != b) {
        EXPECT_LT(max_abs_diff(spin_matrix(g, a, b).value, -spin_matrix(g, b, a).value), 1e-15);
      }
  EXPECT_ANY_THROW(spin_matrix(g, 2, 2));
}

TEST(Spin, PauliSpin) {
  EXPECT_LT(max_abs_diff(pauli_spin(1, 2), 0.5 * pauli(3)), 1e-15);
  EXPECT_LT(max_abs_diff(pauli_spin(2, 3), 0.5 * pauli(1)), 1e-15);
  EXPECT_LT(max_abs_diff(pauli_spin(3, 1), 0.5 * pauli(2)), 1e-15);
  EXPECT_EQ(max_abs_diff(pauli_spin(2, 2), zeros(2)), 0.0);
}

TEST(Spin, LorentzClosure) {
  // [S_ab, S_cd] = -i(η_ac S_bd - η_ad S_bc - η_bc S_ad + η_bd S_ac) for a, b, c, d ≤ 4
  // with η = diag of the gamma squares.
  const GammaSet& g = gamma_set("rep26");
  auto eta = [&](int a, int b) { return a == b ? static_cast<double>(g.square_sign[a]) : 0.0; };
  auto s = [&](int a, int b) { return a == b ? zeros(4) : spin_matrix(g, a, b).value; };
  double worst = 0.0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          if (a == b || c == d) continue;
          const CMatrix rhs = -kI * (eta(a, c) * s(b, d) - eta(a, d) * s(b, c) - eta(b, c) * s(a, d) +
                                     eta(b, d) * s(a, c));
          worst = std::max(worst, max_abs_diff(commutator(s(a, b), s(c, d)), rhs));
        }
  EXPECT_LT(worst, 1e-14);
}

TEST(Projectors, QPlusMinus) {
  const GammaSet& g = gamma_set("rep26");
  const CMatrix g34 = g[3] * g[4];
  EXPECT_LT(max_abs_diff(g34 * g34, identity(4)), 1e-15);
  const CMatrix qp = projector_q(g, 1), qm = projector_q(g, -1);
  EXPECT_LT(max_abs_diff(qp * qp, qp), 1e-15);
  EXPECT_LT(max_abs_diff(qm * qm, qm), 1e-15);
  EXPECT_LT(max_abs(qp * qm), 1e-15);
  EXPECT_LT(max_abs_diff(qp + qm, identity(4)), 1e-15);
}
