#include "pctlab/clifford.hpp"

#include <algorithm>
#include <stdexcept>

namespace pctlab {

CMatrix pauli(int k) {
  CMatrix s(2, 2);
  switch (k) {
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -kI, kI, 0.0; break;
    case 3: s << 1.0, 0.0, 0.0, -1.0; break;
    default: throw std::out_of_range("pauli: index must be 1, 2 or 3");
  }
  return s;
}

GammaSet gamma_set(const std::string& name) {
  const CMatrix one = identity(2);
  const CMatrix zero = zeros(2);
  GammaSet g;
  g.name = name;
  if (name == "rep26") {
    g.gammas[0] = block2x2(pauli(3), zero, zero, -pauli(3));
    g.gammas[1] = block2x2(kI * pauli(1), zero, zero, -kI * pauli(1));
    g.gammas[2] = block2x2(kI * pauli(2), zero, zero, -kI * pauli(2));
    g.gammas[3] = block2x2(zero, kI * one, kI * one, zero);
    g.gammas[4] = block2x2(zero, kI * one, -kI * one, zero);
  } else if (name == "weyl") {
    g.gammas[0] = block2x2(zero, one, one, zero);
    for (int k = 1; k <= 3; ++k)
      g.gammas[static_cast<std::size_t>(k)] = block2x2(zero, -pauli(k), pauli(k), zero);
    g.gammas[4] = block2x2(one, zero, zero, -one);
  } else {
    throw std::invalid_argument("gamma_set: unknown representation '" + name + "'");
  }
  return g;
}

SpinMatrix spin_matrix(const GammaSet& g, int a, int b) {
  if (a < 0 || a > 5 || b < 0 || b > 5)
    throw std::out_of_range("spin_matrix: indices must lie in 0..5");
  if (a == b) throw std::invalid_argument("spin_matrix: indices must differ");
  SpinMatrix s{a, b, {}};
  if (b == 5) {
    s.value = 0.5 * kI * g[a];
  } else if (a == 5) {
    s.value = -0.5 * kI * g[b];
  } else {
    s.value = 0.25 * kI * commutator(g[a], g[b]);
  }
  return s;
}

CMatrix pauli_spin(int k, int l) {
  if (k == l) return zeros(2);
  return 0.25 * kI * (pauli(l) * pauli(k) - pauli(k) * pauli(l));
}

CliffordReport verify_clifford(const GammaSet& g) {
  double r = 0.0;
  const CMatrix one = identity(4);
  for (int a = 0; a < 5; ++a) {
    const double sq = g.square_sign[static_cast<std::size_t>(a)];
    r = std::max(r, max_abs_diff(g[a] * g[a], sq * one));
    for (int b = a + 1; b < 5; ++b) r = std::max(r, max_abs(anticommutator(g[a], g[b])));
  }
  r = std::max(r, hermiticity_residual(g[0]));
  for (int k = 1; k <= 3; ++k) r = std::max(r, max_abs(g[k] + g[k].adjoint()));
  return {r, r <= 1e-12};
}

CMatrix projector_q(const GammaSet& g, int sign) {
  return 0.5 * (identity(4) + static_cast<double>(sign) * g[3] * g[4]);
}

}  // namespace pctlab
