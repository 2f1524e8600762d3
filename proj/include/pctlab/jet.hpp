#pragma once

// Second-order forward-mode jets: value, gradient and Hessian with respect to
// the momentum components. Matrix-valued fields are built from these, so
// every field derivative used by the operator calculus is exact.
//
// `order` counts how many derivative levels are valid (2: value, gradient,
// Hessian). Taking a partial derivative lowers it by one; binary operations
// keep the minimum. Reading a level that is not valid throws.

#include "pctlab/linalg.hpp"

#include <array>

namespace pctlab {

inline constexpr int kMaxMomentumDim = 4;

struct ScalarJet {
  double v = 0.0;
  std::array<double, kMaxMomentumDim> g{};
  std::array<std::array<double, kMaxMomentumDim>, kMaxMomentumDim> h{};

  static ScalarJet constant(double c) { return ScalarJet{c, {}, {}}; }
  static ScalarJet variable(double value, int axis);
};

ScalarJet operator+(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator-(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator-(const ScalarJet& a);
ScalarJet operator*(const ScalarJet& a, const ScalarJet& b);
ScalarJet operator*(double c, const ScalarJet& a);
ScalarJet operator+(const ScalarJet& a, double c);
ScalarJet operator/(const ScalarJet& a, const ScalarJet& b);

/// Applies a scalar function given its value and first two derivatives at a.v.
ScalarJet chain(const ScalarJet& a, double f, double df, double d2f);

ScalarJet sqrt(const ScalarJet& a);
ScalarJet atan(const ScalarJet& a);
ScalarJet reciprocal(const ScalarJet& a);
/// |a| with derivative sign(a); throws at a.v == 0.
ScalarJet abs(const ScalarJet& a);

class MatrixJet {
 public:
  MatrixJet() = default;
  MatrixJet(int dim, int momentum_dim, int order = 2);

  static MatrixJet constant(const CMatrix& m, int momentum_dim);
  static MatrixJet scaled(const ScalarJet& s, const CMatrix& m, int momentum_dim);

  int dim() const { return dim_; }
  int momentum_dim() const { return d_; }
  int order() const { return order_; }

  const CMatrix& value() const { return v_; }
  const CMatrix& grad(int k) const;
  const CMatrix& hess(int k, int l) const;

  CMatrix& value_mut() { return v_; }
  CMatrix& grad_mut(int k) { return g_.at(static_cast<std::size_t>(k)); }
  CMatrix& hess_mut(int k, int l) {
    return h_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(l));
  }
  void set_order(int order) { order_ = order; }

  /// Jet of ∂_k of this field; order drops by one.
  MatrixJet partial(int k) const;

  MatrixJet adjoint() const;

  MatrixJet& operator+=(const MatrixJet& o);
  MatrixJet& operator-=(const MatrixJet& o);

 private:
  int dim_ = 0;
  int d_ = 0;
  int order_ = 0;
  CMatrix v_;
  std::array<CMatrix, kMaxMomentumDim> g_;
  std::array<std::array<CMatrix, kMaxMomentumDim>, kMaxMomentumDim> h_;
};

MatrixJet operator+(MatrixJet a, const MatrixJet& b);
MatrixJet operator-(MatrixJet a, const MatrixJet& b);
MatrixJet operator-(const MatrixJet& a);
MatrixJet operator*(const MatrixJet& a, const MatrixJet& b);
MatrixJet operator*(const ScalarJet& s, const MatrixJet& a);
MatrixJet operator*(Complex c, const MatrixJet& a);

/// Jet of M(p)^-1; throws NumericError on a singular value.
MatrixJet inverse(const MatrixJet& a);

/// Jet of exp(M(p)) via block-triangular Fréchet representations.
MatrixJet expm(const MatrixJet& a);

}  // namespace pctlab
