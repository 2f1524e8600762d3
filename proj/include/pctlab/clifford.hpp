#pragma once

// Pauli and Dirac matrices, spin matrices S_AB, Clifford-relation checks.

#include "pctlab/linalg.hpp"

#include <array>
#include <string>

namespace pctlab {

/// Pauli matrix σ_k, k ∈ {1, 2, 3}.
CMatrix pauli(int k);

/// Five anticommuting 4×4 matrices γ0..γ4 in a named representation.
///
/// "rep26" is the block representation with γ0 = diag(σ3, -σ3),
/// γa = diag(iσa, -iσa) (a = 1, 2), γ3 = offdiag(i, i), γ4 = offdiag(i, -i).
///
/// "weyl" is frozen as γ0 = offdiag(1, 1), γk = offdiag(-σk, σk) (upper-right
/// block -σk), γ4 = diag(1, -1). It satisfies γ0γk = diag(σk, -σk), so the
/// massless Dirac operator splits into the ±σ·p Weyl operators.
struct GammaSet {
  std::string name;
  std::array<CMatrix, 5> gammas;
  /// Expected square of each γ_A: (+1, -1, -1, -1, +1).
  std::array<int, 5> square_sign{1, -1, -1, -1, 1};

  const CMatrix& operator[](int a) const { return gammas.at(static_cast<std::size_t>(a)); }
};

GammaSet gamma_set(const std::string& name);

struct SpinMatrix {
  int a = 0;
  int b = 0;
  CMatrix value;
};

/// S_AB for A, B ∈ {0..5}, A ≠ B:
///   S_AB = (i/4)(γ_Aγ_B - γ_Bγ_A) for A, B ≤ 4,
///   S_A5 = (i/2)γ_A,  S_5A = -S_A5.
SpinMatrix spin_matrix(const GammaSet& g, int a, int b);

/// Two-component spin matrix S_kl = (i/4)(σ_lσ_k - σ_kσ_l) = ½ε_klm σ_m,
/// k, l ∈ {1, 2, 3}; zero when k = l.
CMatrix pauli_spin(int k, int l);

struct CliffordReport {
  double residual = 0.0;
  bool passed = false;
};

/// Max residual over γ_A² = ±1, {γ_A, γ_B} = 0, γ0 Hermitian and γ1..γ3
/// anti-Hermitian. Passes at 1e-12.
CliffordReport verify_clifford(const GammaSet& g);

/// Q± = ½(1 ± γ3γ4).
CMatrix projector_q(const GammaSet& g, int sign);

}  // namespace pctlab
