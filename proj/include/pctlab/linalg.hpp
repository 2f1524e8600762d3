#pragma once

// Dense complex matrix kernel shared by every other module.

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace pctlab {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Default absolute tolerance for entrywise equality of O(10) matrices.
inline constexpr double kEqualityTol = 1e-9;
/// Default relative cutoff for nullspace extraction.
inline constexpr double kNullspaceTol = 1e-8;

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CMatrix identity(int n);
CMatrix zeros(int n);

bool is_finite(const CMatrix& m);

/// Largest absolute entry.
double max_abs(const CMatrix& m);

/// Largest absolute entry of a - b. Shapes must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

CMatrix commutator(const CMatrix& a, const CMatrix& b);
CMatrix anticommutator(const CMatrix& a, const CMatrix& b);

/// Block matrix [[a, b], [c, d]] from four equally sized square blocks.
CMatrix block2x2(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                 const CMatrix& d);

/// Residual of m·m† against the identity.
double unitarity_residual(const CMatrix& m);

/// Residual of m against its adjoint.
double hermiticity_residual(const CMatrix& m);

/// Matrix exponential. Throws NumericError("non-finite matrix") on NaN/Inf input.
CMatrix expm(const CMatrix& m);

/// Fréchet derivative of the exponential at `a` in direction `e`, from the
/// upper-right block of exp([[a, e], [0, a]]).
CMatrix expm_frechet(const CMatrix& a, const CMatrix& e);

/// Second mixed derivative d²/dsdt exp(a + s·e + t·f + s·t·g) at s = t = 0.
/// Uses the faithful 4n-dimensional representation of the commutative ring
/// generated by two nilpotents.
CMatrix expm_second(const CMatrix& a, const CMatrix& e, const CMatrix& f,
                    const CMatrix& g);

struct Nullspace {
  std::vector<CVector> basis;    // orthonormal
  std::vector<double> singular;  // all singular values, descending
  double sigma_max = 0.0;
  bool rank_zero = false;
};

/// Orthonormal basis of the right singular subspace with singular values
/// below tol·σ_max. For an all-zero input the full standard basis is returned
/// and `rank_zero` is set.
Nullspace svd_nullspace(const CMatrix& m, double tol = kNullspaceTol);

/// Unitary factor U of the polar decomposition m = U·H.
/// Throws NumericError("no unitary representative") when m is singular.
CMatrix polar_unitary(const CMatrix& m);

/// Ratio σ_min/σ_max; zero for the zero matrix.
double inverse_condition(const CMatrix& m);

/// Row-major vectorization helpers (vec(M)[i*n + j] = M(i, j)).
CVector vec_row_major(const CMatrix& m);
CMatrix unvec_row_major(const CVector& v, int n);

/// Kronecker product.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace pctlab
