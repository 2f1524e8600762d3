#include "pctlab/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace pctlab {

CMatrix identity(int n) { return CMatrix::Identity(n, n); }

CMatrix zeros(int n) { return CMatrix::Zero(n, n); }

bool is_finite(const CMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_abs(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  return max_abs(a - b);
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

CMatrix anticommutator(const CMatrix& a, const CMatrix& b) {
  return a * b + b * a;
}

CMatrix block2x2(const CMatrix& a, const CMatrix& b, const CMatrix& c,
                 const CMatrix& d) {
  const auto n = a.rows();
  CMatrix out(2 * n, 2 * n);
  out << a, b, c, d;
  return out;
}

double unitarity_residual(const CMatrix& m) {
  return max_abs_diff(m * m.adjoint(), identity(static_cast<int>(m.rows())));
}

double hermiticity_residual(const CMatrix& m) {
  return max_abs_diff(m, m.adjoint());
}

CMatrix expm(const CMatrix& m) {
  if (!is_finite(m)) throw NumericError("non-finite matrix");
  if (m.rows() != m.cols()) throw std::invalid_argument("expm: not square");
  CMatrix out = m.exp();
  if (!is_finite(out)) throw NumericError("non-finite matrix");
  return out;
}

CMatrix expm_frechet(const CMatrix& a, const CMatrix& e) {
  const auto n = a.rows();
  CMatrix big = CMatrix::Zero(2 * n, 2 * n);
  big.topLeftCorner(n, n) = a;
  big.bottomRightCorner(n, n) = a;
  big.topRightCorner(n, n) = e;
  return expm(big).topRightCorner(n, n);
}

CMatrix expm_second(const CMatrix& a, const CMatrix& e, const CMatrix& f,
                    const CMatrix& g) {
  // Element a + e·ε1 + f·ε2 + g·ε1ε2 as a ⊗ 1 + e ⊗ (N⊗1) + f ⊗ (1⊗N) + g ⊗ (N⊗N)
  // with N = [[0, 1], [0, 0]]; the ε1ε2 coefficient of the exponential sits in
  // the (0, 3) block.
  const auto n = a.rows();
  CMatrix big = CMatrix::Zero(4 * n, 4 * n);
  for (int b = 0; b < 4; ++b) big.block(b * n, b * n, n, n) = a;
  big.block(0 * n, 1 * n, n, n) = e;  // ε1: 0->1, 2->3
  big.block(2 * n, 3 * n, n, n) = e;
  big.block(0 * n, 2 * n, n, n) = f;  // ε2: 0->2, 1->3
  big.block(1 * n, 3 * n, n, n) = f;
  big.block(0 * n, 3 * n, n, n) = g;
  return expm(big).block(0, 3 * n, n, n);
}

Nullspace svd_nullspace(const CMatrix& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("svd_nullspace: tol must be > 0");
  if (m.rows() < 1) throw std::invalid_argument("svd_nullspace: empty matrix");
  Nullspace out;
  const auto cols = m.cols();
  if (max_abs(m) == 0.0) {
    out.rank_zero = true;
    for (Eigen::Index j = 0; j < cols; ++j)
      out.basis.push_back(CVector::Unit(cols, j));
    out.singular.assign(static_cast<std::size_t>(std::min(m.rows(), cols)), 0.0);
    return out;
  }
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  out.singular.assign(sv.data(), sv.data() + sv.size());
  out.sigma_max = sv(0);
  const CMatrix& v = svd.matrixV();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const double s = j < sv.size() ? sv(j) : 0.0;
    if (s < tol * out.sigma_max) out.basis.push_back(v.col(j));
  }
  return out;
}

CMatrix polar_unitary(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0 || sv(sv.size() - 1) <= 1e-10 * sv(0))
    throw NumericError("no unitary representative");
  return svd.matrixU() * svd.matrixV().adjoint();
}

double inverse_condition(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

CVector vec_row_major(const CMatrix& m) {
  const auto n = m.rows();
  CVector v(n * m.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

CMatrix unvec_row_major(const CVector& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n)
    throw std::invalid_argument("unvec_row_major: size mismatch");
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v(i * n + j);
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace pctlab
