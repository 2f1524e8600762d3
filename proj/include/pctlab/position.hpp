#pragma once

// Position operators X_k = u⁻¹ x_k u and their closed forms.

#include "pctlab/check.hpp"
#include "pctlab/equations.hpp"

#include <string>
#include <vector>

namespace pctlab {

/// Components of the form x_k + matrix field.
struct PositionOperator {
  std::string name;
  std::vector<DiffOp1> components;
};

/// Names: Xchi (U2), Xpsi (U2·U1), Xchi2 (V1), XW (V).
const std::vector<std::string>& position_names();

/// Name of the catalog unitary a position operator is built from.
std::string position_unitary(const std::string& name);

PositionOperator position_from_unitary(const OperatorField& u, std::string name = "X");
PositionOperator position_from_unitary(const std::string& name);

PositionOperator position_closed_form(const std::string& name);

/// Closed form = conjugation-built operator, [X_j, p_k] = iδ_jk, plus
/// informational [X_j, X_k] norms and Hermiticity of the matrix parts.
CheckList verify_position(const std::string& name, const std::vector<MomentumPoint>& samples,
                          double tol = 1e-9, double ccr_tol = 1e-10);

}  // namespace pctlab
