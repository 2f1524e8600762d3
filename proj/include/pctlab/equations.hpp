#pragma once

// Catalog of the Hamiltonians, unitary transformations and projectors, and
// the checks that tie them together.

#include "pctlab/check.hpp"
#include "pctlab/clifford.hpp"
#include "pctlab/opcalc.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pctlab {

struct CatalogParams {
  double mass = 1.0;
  double kappa = 1.0;
  /// Negative control: builds the two-component χ± Hamiltonians with σ2·p2 in
  /// place of σ1·p2.
  bool corrupt_chi = false;
};

/// An invariance (or non-invariance) statement about one discrete element.
struct Claim {
  std::string label;
  bool invariant = false;
  std::string source;
};

struct EquationSpec {
  std::string name;
  int dim = 0;
  int d = 0;
  OperatorField hamiltonian;
  CatalogParams params;
  std::vector<Claim> claims;
  /// False only for the κ-equations, whose Hamiltonian form is not Hermitian.
  bool hermitian = true;
  /// Expected scalar value of H(p)²; empty when no dispersion identity applies.
  std::function<double(const MomentumPoint&)> dispersion;
  std::string description;
};

/// Names: dirac_massless, weyl_plus, weyl_minus, chi_4c, chi_plus, chi_minus,
/// chi_canonical, phi_diag, weyl_canonical, flat_plus, flat_minus, desitter,
/// dirac_massive, hprime, spinless_plus, spinless_minus, kappa_plus, kappa_minus.
EquationSpec catalog_equation(const std::string& name, const CatalogParams& params = {});

const std::vector<std::string>& equation_names();

struct UnitarySpec {
  std::string name;
  int dim = 0;
  int d = 3;
  OperatorField closed;
  std::optional<OperatorField> exponential;
  std::string source;  // empty when the transformation is checked for unitarity only
  std::string target;
  /// Verification restricted to p3 > 0.
  bool positive_p3_only = false;
  CatalogParams params;
  std::string description;
};

/// Names: U1, U2, U2U1, tU1, tU2, tU, V1, V, V2.
UnitarySpec catalog_unitary(const std::string& name, const CatalogParams& params = {});

const std::vector<std::string>& unitary_names();

/// Unitarity, closed = exponential, and u·H_src·u⁻¹ = H_tgt over the samples.
CheckList verify_transform(const UnitarySpec& u, const std::vector<MomentumPoint>& samples,
                           double tol = 1e-9);

/// Momentum-dependent projector K-form of the massive subsidiary condition,
/// K(p) = (γ3γ4 m + γ4 p3)/q3.
OperatorField subsidiary_k(double mass);

/// ½(1 + sign·e3·γ4), the massless subsidiary projectors.
OperatorField subsidiary_e3(int sign);

CheckList verify_projectors(const std::vector<MomentumPoint>& samples,
                            const CatalogParams& params = {}, double tol = 1e-9);

/// max ‖H(p)² - dispersion(p)·1‖ over the samples.
double dispersion_residual(const EquationSpec& eq, const std::vector<MomentumPoint>& samples);

/// max ‖λ·S_0l·p_l - γ0γl·p_l‖ with λ = -2i.
double lambda_consistency_residual(const std::vector<MomentumPoint>& samples);

/// Samples appropriate for an equation: its momentum dimension, default exclusions.
std::vector<MomentumPoint> samples_for(const EquationSpec& eq, int n, std::uint64_t seed);

}  // namespace pctlab
