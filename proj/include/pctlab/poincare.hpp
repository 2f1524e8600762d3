#pragma once

// Poincaré generator realizations as collections of first-order operators,
// closure of their algebra, helicity, and energy-sign/helicity content.

#include "pctlab/check.hpp"
#include "pctlab/equations.hpp"

#include <map>
#include <string>
#include <vector>

namespace pctlab {

/// Generators keyed by label: "P0" (= H), "P1".."Pd", "Jkl" (1 ≤ k < l ≤ d), "J0k".
struct GeneratorSet {
  std::string name;
  int dim = 0;
  int d = 0;
  std::vector<std::string> labels;
  std::map<std::string, DiffOp1> generators;

  const DiffOp1& operator[](const std::string& label) const;
  /// J_{μν} for any μ ≠ ν, using J_{μν} = -J_{νμ}.
  DiffOp1 j(int mu, int nu) const;
};

struct GeneratorParams {
  double mass = 1.0;
  CatalogParams catalog;
};

/// Names: psi, chi, phi, phi_one, phi_minus_one, chi2, chi2_printed, flat, weyl.
/// "phi_one"/"phi_minus_one" replace γ0 by +1/-1 throughout; "weyl" is the
/// upper 2×2 block of "psi" built on the Weyl gamma set. "chi2" is the χ+
/// block of "chi"; "chi2_printed" flips the sign of its S_a3 γ3 term.
GeneratorSet generator_set(const std::string& name, const GeneratorParams& params = {});

const std::vector<std::string>& generator_set_names();

/// Labels in the canonical order used for structure constants.
std::vector<std::string> generator_labels(int d);

/// [G_a, G_b] = Σ_c c_abc G_c, fitted on the orbital scalar representation
/// and rounded to {0, ±1, ±i}.
struct StructureConstants {
  int d = 0;
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, std::vector<Complex>> c;  // a < b
  double fit_residual = 0.0;
};

/// Orbital scalar set: P0 = √(p² + m²), Jkl = x_k p_l - x_l p_k, J0k = x0 p_k - ½[x_k, P0]₊.
GeneratorSet orbital_scalar_set(int d, double mass);

StructureConstants calibrate_structure_constants(int d, double mass = 0.0,
                                                 std::uint64_t seed = 0xca1b);

struct AlgebraReport {
  double residual = 0.0;
  double second_order = 0.0;
  std::string worst_pair;
};

AlgebraReport algebra_residual(const GeneratorSet& gs, const StructureConstants& sc,
                               const std::vector<MomentumPoint>& samples,
                               const std::vector<double>& x0_values = {0.0, 1.37});

/// Calibrates on the matching scalar set (massless for d = 3, `mass` otherwise) first.
AlgebraReport algebra_residual(const GeneratorSet& gs, const std::vector<MomentumPoint>& samples,
                               const std::vector<double>& x0_values = {0.0, 1.37},
                               double mass = 1.0);

/// Realization on u·ψ: every generator G becomes u G u⁻¹.
GeneratorSet conjugate_set(const GeneratorSet& gs, const OperatorField& u, std::string name);

/// Member-wise max difference at the samples and x0 values.
double covariance_residual(const GeneratorSet& a, const GeneratorSet& b,
                           const std::vector<MomentumPoint>& samples,
                           const std::vector<double>& x0_values = {0.0, 1.37});

/// h(p) = Σ_k (p_k/E) J_k with J1 = J23, J2 = J31, J3 = J12. Throws
/// NumericError("not a scalar helicity") if derivative parts survive.
OperatorField helicity_field(const GeneratorSet& gs);

struct IrrepLabel {
  int energy_sign = 0;
  double helicity = 0.0;
  std::string str() const;
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

using IrrepContent = std::vector<IrrepLabel>;  // sorted multiset

/// Throws NumericError("content not invariant") if the multiset varies over samples.
IrrepContent irrep_content(const OperatorField& hamiltonian, const OperatorField& helicity,
                           const std::vector<MomentumPoint>& samples);
IrrepContent irrep_content(const EquationSpec& eq, const GeneratorSet& gs,
                           const std::vector<MomentumPoint>& samples);

/// Closure of every generator set, second-order residuals, U2 covariance of
/// chi → phi, U1 covariance of psi → chi, helicity properties.
CheckList verify_poincare(int n_samples = 8, std::uint64_t seed = 7, double tol = 1e-8);

}  // namespace pctlab
