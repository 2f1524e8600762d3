#include "pctlab/clifford.hpp"
#include "pctlab/position.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pctlab;

namespace {

double energy2(const MomentumPoint& p) { return p[0] * p[0] + p[1] * p[1] + p[2] * p[2]; }
double e3(const MomentumPoint& p) { return p[2] > 0 ? 1.0 : -1.0; }

}  // namespace

TEST(Position, IdentityUnitaryGivesPlainX) {
  const PositionOperator x = position_from_unitary(OperatorField::constant(identity(2), 3));
  ASSERT_EQ(x.components.size(), 3u);
  for (const auto& p : sample_momenta(3, 3, 1))
    for (int k = 0; k < 3; ++k)
      EXPECT_LT(max_abs_diff(evaluate(x.components[static_cast<std::size_t>(k)], p, 0.0),
                             evaluate(DiffOp1::position(k, 2, 3), p, 0.0)),
                1e-15);
}

TEST(Position, XchiThirdComponent) {
  const GammaSet g = gamma_set("rep26");
  const PositionOperator x = position_from_unitary("Xchi");
  for (const auto& p : sample_momenta(3, 8, 2)) {
    // e3 S_5c p_c / E² with S_5c = -(i/2)γ_c, c = 1, 2
    const CMatrix want = e3(p) * (-0.5 * kI) * (g[1] * p[0] + g[2] * p[1]) / energy2(p);
    EXPECT_LT(max_abs_diff(evaluate(x.components[2], p, 0.0).a, want), 1e-12) << p[2];
  }
}

TEST(Position, XWeylThirdComponent) {
  const PositionOperator x = position_from_unitary("XW");
  for (const auto& p : sample_momenta(3, 8, 3)) {
    const CMatrix want = -kI * pauli(3) * (pauli(1) * p[0] + pauli(2) * p[1]) / (2 * energy2(p));
    EXPECT_LT(max_abs_diff(evaluate(x.components[2], p, 0.0).a, want), 1e-12) << p[2];
  }
}

TEST(Position, ClosedFormsMatchConjugationOnBothHalfSpaces) {
  const auto samples = sample_momenta(3, 12, 42);
  for (const auto& name : position_names()) {
    const PositionOperator built = position_from_unitary(name), closed = position_closed_form(name);
    ASSERT_EQ(built.components.size(), closed.components.size());
    for (const auto& p : samples)
      for (std::size_t k = 0; k < built.components.size(); ++k)
        EXPECT_LT(max_abs_diff(evaluate(built.components[k], p, 0.0), evaluate(closed.components[k], p, 0.0)), 1e-9)
            << name << " p3 " << p[2];
    EXPECT_TRUE(all_passed(verify_position(name, samples))) << name;
  }
}

TEST(Position, CanonicalCommutators) {
  for (const auto& name : position_names()) {
    const PositionOperator x = position_closed_form(name);
    const int dim = x.components[0].dim();
    for (const auto& p : sample_momenta(3, 6, 4))
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const auto c = diffop_commutator(x.components[static_cast<std::size_t>(j)], DiffOp1::momentum(k, dim, 3), p);
          EXPECT_LT(max_abs_diff(c.first_order.a, j == k ? CMatrix(kI * identity(dim)) : zeros(dim)), 1e-10);
        }
  }
}

TEST(Position, UnknownNameThrows) {
  EXPECT_ANY_THROW(position_closed_form("Xnope"));
  EXPECT_ANY_THROW(position_unitary("Xnope"));
}
