#pragma once

// Discrete symmetries (axis reflections, Wigner/Pauli time reversal, charge
// conjugation) and the constant intertwiners that realize them.
//
// Conventions. For an element with reflection S (diagonal ±1 from `flips`),
// time sign ε_t = -1 iff `time_flip`, the invariance condition on a constant
// invertible M is
//
//   linear     (conjugate = false):   ε_t · M H(S p) M⁻¹         = H(p)
//   antilinear (conjugate = true):   -ε_t · M conj(H(-S p)) M⁻¹  = H(p)
//
// The extra p → -p in the antilinear case is the Fourier image of complex
// conjugation of a position-space wave function. Labels: Pk flips axis k,
// T1 = time_flip + conjugate (Wigner), T2 = time_flip (Pauli), C = conjugate.

#include "pctlab/equations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pctlab {

class IndeterminateError : public NumericError {
 public:
  using NumericError::NumericError;
};

struct SymmetryElement {
  std::vector<bool> flips;
  bool time_flip = false;
  bool conjugate = false;

  int dim() const { return static_cast<int>(flips.size()); }
  /// Canonical label: P-factors in axis order, then T1, T2 or C; "E" for the identity.
  std::string label() const;

  /// Parses `P1|P2|P3|P4|T1|T2|C|E` joined by `*`, composing by XOR; order-insensitive.
  static SymmetryElement parse(const std::string& label, int d);
  /// All 2^d · 4 elements in a fixed order (identity first).
  static std::vector<SymmetryElement> all(int d);

  friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b);

struct IntertwineCondition {
  CMatrix transformed;  // H̃(p), sign folded in
  CMatrix original;     // H(p)
};

/// Invariance ⇔ ∃ invertible constant M with M·H̃(p) = H(p)·M for all p.
IntertwineCondition intertwine_condition(const EquationSpec& eq, const SymmetryElement& g,
                                         const MomentumPoint& p);

struct Intertwiner {
  CMatrix matrix;       // phase-fixed: largest entry real positive
  CMatrix unitary_rep;  // polar factor, same phase convention
  double residual = 0.0;          // on the fit samples
  double holdout_residual = 0.0;  // relative, on fresh samples
};

struct SolveOptions {
  int n_fit = 12;
  int n_holdout = 4;
  std::uint64_t seed = 42;
  double nullspace_tol = kNullspaceTol;
  double certificate_tol = 1e-4;
  double holdout_tol = 1e-7;
};

struct SolveResult {
  bool invariant = false;
  std::optional<Intertwiner> intertwiner;
  /// σ_min/σ_max of the stacked linear map.
  double certificate = 0.0;
  int nullity = 0;
  /// Set when a nullspace exists but contains no invertible matrix.
  bool singular_nullspace = false;
};

/// Stacked map vec(M) ↦ vec(M·H̃(p_i) - H(p_i)·M) over the given points
/// (row-major vectorization, each block scaled by 1/‖H(p_i)‖_F).
CMatrix stacked_condition(const EquationSpec& eq, const SymmetryElement& g,
                          const std::vector<MomentumPoint>& points);

/// Relative residual max_p ‖M H̃ - H M‖ / (‖H‖·‖M‖) (entrywise max norms).
double intertwiner_residual(const EquationSpec& eq, const SymmetryElement& g, const CMatrix& m,
                            const std::vector<MomentumPoint>& points);

/// Throws IndeterminateError when σ_min/σ_max falls between the nullspace
/// cutoff and the certificate threshold.
SolveResult solve_intertwiner(const EquationSpec& eq, const SymmetryElement& g,
                              const SolveOptions& opt = {});

struct Verdict {
  SymmetryElement element;
  SolveResult result;
};

struct ClaimCheck {
  Claim claim;
  std::string canonical;
  bool observed = false;
  bool agrees = false;
};

struct ClassificationReport {
  std::string equation;
  int d = 0;
  std::vector<Verdict> verdicts;
  std::vector<ClaimCheck> claims;
  bool agreement = true;
  /// Group coherence: products of invariant elements are invariant and the
  /// composed intertwiners are valid.
  bool coherent = true;
  double coherence_residual = 0.0;

  const Verdict& verdict(const std::string& label) const;
};

ClassificationReport classify_equation(const EquationSpec& eq, const SolveOptions& opt = {});

/// Intertwiner for the composition g1∘g2 from the intertwiners of its factors:
/// M1·M2, with M2 conjugated when g1 is antilinear.
CMatrix compose_intertwiners(const SymmetryElement& g1, const CMatrix& m1, const CMatrix& m2);

/// Relations between Q± and the 4×4 intertwiners solved for chi_4c:
/// reflections of axes 1, 2 and both time reversals swap Q+ ↔ Q-, while P3
/// and C commute with them.
CheckList verify_projection_relations(const SolveOptions& opt = {}, double tol = 1e-9);

}  // namespace pctlab
