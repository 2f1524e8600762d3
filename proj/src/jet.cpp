#include "pctlab/jet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pctlab {

namespace {
constexpr auto kDim = static_cast<std::size_t>(kMaxMomentumDim);
}

ScalarJet ScalarJet::variable(double value, int axis) {
  ScalarJet s = constant(value);
  s.g.at(static_cast<std::size_t>(axis)) = 1.0;
  return s;
}

ScalarJet operator+(const ScalarJet& a, const ScalarJet& b) {
  ScalarJet r;
  r.v = a.v + b.v;
  for (std::size_t k = 0; k < kDim; ++k) {
    r.g[k] = a.g[k] + b.g[k];
    for (std::size_t l = 0; l < kDim; ++l) r.h[k][l] = a.h[k][l] + b.h[k][l];
  }
  return r;
}

ScalarJet operator-(const ScalarJet& a) { return -1.0 * a; }

ScalarJet operator-(const ScalarJet& a, const ScalarJet& b) { return a + (-b); }

ScalarJet operator*(const ScalarJet& a, const ScalarJet& b) {
  ScalarJet r;
  r.v = a.v * b.v;
  for (std::size_t k = 0; k < kDim; ++k) {
    r.g[k] = a.g[k] * b.v + a.v * b.g[k];
    for (std::size_t l = 0; l < kDim; ++l)
      r.h[k][l] = a.h[k][l] * b.v + a.g[k] * b.g[l] + a.g[l] * b.g[k] + a.v * b.h[k][l];
  }
  return r;
}

ScalarJet operator*(double c, const ScalarJet& a) {
  ScalarJet r;
  r.v = c * a.v;
  for (std::size_t k = 0; k < kDim; ++k) {
    r.g[k] = c * a.g[k];
    for (std::size_t l = 0; l < kDim; ++l) r.h[k][l] = c * a.h[k][l];
  }
  return r;
}

ScalarJet operator+(const ScalarJet& a, double c) {
  ScalarJet r = a;
  r.v += c;
  return r;
}

ScalarJet chain(const ScalarJet& a, double f, double df, double d2f) {
  ScalarJet r;
  r.v = f;
  for (std::size_t k = 0; k < kDim; ++k) {
    r.g[k] = df * a.g[k];
    for (std::size_t l = 0; l < kDim; ++l)
      r.h[k][l] = d2f * a.g[k] * a.g[l] + df * a.h[k][l];
  }
  return r;
}

ScalarJet reciprocal(const ScalarJet& a) {
  if (a.v == 0.0) throw NumericError("singular point");
  const double inv = 1.0 / a.v;
  return chain(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}

ScalarJet operator/(const ScalarJet& a, const ScalarJet& b) { return a * reciprocal(b); }

ScalarJet sqrt(const ScalarJet& a) {
  if (a.v <= 0.0) throw NumericError("singular point");
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s, -0.25 / (s * a.v));
}

ScalarJet atan(const ScalarJet& a) {
  const double den = 1.0 + a.v * a.v;
  return chain(a, std::atan(a.v), 1.0 / den, -2.0 * a.v / (den * den));
}

ScalarJet abs(const ScalarJet& a) {
  if (a.v == 0.0) throw NumericError("singular point");
  return a.v > 0.0 ? a : -a;
}

MatrixJet::MatrixJet(int dim, int momentum_dim, int order)
    : dim_(dim), d_(momentum_dim), order_(order), v_(CMatrix::Zero(dim, dim)) {
  if (momentum_dim < 1 || momentum_dim > kMaxMomentumDim)
    throw std::invalid_argument("MatrixJet: momentum dimension out of range");
  for (std::size_t k = 0; k < kDim; ++k) {
    g_[k] = CMatrix::Zero(dim, dim);
    for (std::size_t l = 0; l < kDim; ++l) h_[k][l] = CMatrix::Zero(dim, dim);
  }
}

MatrixJet MatrixJet::constant(const CMatrix& m, int momentum_dim) {
  MatrixJet j(static_cast<int>(m.rows()), momentum_dim);
  j.v_ = m;
  return j;
}

MatrixJet MatrixJet::scaled(const ScalarJet& s, const CMatrix& m, int momentum_dim) {
  MatrixJet j(static_cast<int>(m.rows()), momentum_dim);
  j.v_ = s.v * m;
  for (std::size_t k = 0; k < kDim; ++k) {
    j.g_[k] = s.g[k] * m;
    for (std::size_t l = 0; l < kDim; ++l) j.h_[k][l] = s.h[k][l] * m;
  }
  return j;
}

const CMatrix& MatrixJet::grad(int k) const {
  if (order_ < 1) throw std::logic_error("MatrixJet: gradient not available at this order");
  return g_.at(static_cast<std::size_t>(k));
}

const CMatrix& MatrixJet::hess(int k, int l) const {
  if (order_ < 2) throw std::logic_error("MatrixJet: Hessian not available at this order");
  return h_.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(l));
}

MatrixJet MatrixJet::partial(int k) const {
  if (order_ < 1) throw std::logic_error("MatrixJet: cannot differentiate an order-0 jet");
  MatrixJet r(dim_, d_, order_ - 1);
  r.v_ = g_.at(static_cast<std::size_t>(k));
  for (std::size_t l = 0; l < kDim; ++l) r.g_[l] = h_.at(static_cast<std::size_t>(k))[l];
  return r;
}

MatrixJet MatrixJet::adjoint() const {
  MatrixJet r(dim_, d_, order_);
  r.v_ = v_.adjoint();
  for (std::size_t k = 0; k < kDim; ++k) {
    r.g_[k] = g_[k].adjoint();
    for (std::size_t l = 0; l < kDim; ++l) r.h_[k][l] = h_[k][l].adjoint();
  }
  return r;
}

MatrixJet& MatrixJet::operator+=(const MatrixJet& o) {
  if (dim_ != o.dim_ || d_ != o.d_) throw std::invalid_argument("MatrixJet: shape mismatch");
  order_ = std::min(order_, o.order_);
  v_ += o.v_;
  for (std::size_t k = 0; k < kDim; ++k) {
    g_[k] += o.g_[k];
    for (std::size_t l = 0; l < kDim; ++l) h_[k][l] += o.h_[k][l];
  }
  return *this;
}

MatrixJet& MatrixJet::operator-=(const MatrixJet& o) { return *this += -o; }

MatrixJet operator+(MatrixJet a, const MatrixJet& b) { return a += b; }

MatrixJet operator-(MatrixJet a, const MatrixJet& b) { return a -= b; }

MatrixJet operator-(const MatrixJet& a) { return Complex(-1.0) * a; }

MatrixJet operator*(const MatrixJet& a, const MatrixJet& b) {
  if (a.dim() != b.dim() || a.momentum_dim() != b.momentum_dim())
    throw std::invalid_argument("MatrixJet: shape mismatch");
  MatrixJet r(a.dim(), a.momentum_dim(), std::min(a.order(), b.order()));
  r.value_mut() = a.value() * b.value();
  if (r.order() >= 1) {
    for (int k = 0; k < kMaxMomentumDim; ++k)
      r.grad_mut(k) = a.grad(k) * b.value() + a.value() * b.grad(k);
  }
  if (r.order() >= 2) {
    for (int k = 0; k < kMaxMomentumDim; ++k)
      for (int l = 0; l < kMaxMomentumDim; ++l)
        r.hess_mut(k, l) = a.hess(k, l) * b.value() + a.grad(k) * b.grad(l) +
                           a.grad(l) * b.grad(k) + a.value() * b.hess(k, l);
  }
  return r;
}

MatrixJet operator*(const ScalarJet& s, const MatrixJet& a) {
  return MatrixJet::scaled(s, identity(a.dim()), a.momentum_dim()) * a;
}

MatrixJet operator*(Complex c, const MatrixJet& a) {
  MatrixJet r(a.dim(), a.momentum_dim(), a.order());
  r.value_mut() = c * a.value();
  for (int k = 0; k < kMaxMomentumDim; ++k) {
    if (a.order() >= 1) r.grad_mut(k) = c * a.grad(k);
    for (int l = 0; l < kMaxMomentumDim; ++l)
      if (a.order() >= 2) r.hess_mut(k, l) = c * a.hess(k, l);
  }
  return r;
}

MatrixJet inverse(const MatrixJet& a) {
  if (inverse_condition(a.value()) < 1e-14) throw NumericError("singular matrix in inverse");
  MatrixJet r(a.dim(), a.momentum_dim(), a.order());
  const CMatrix inv = a.value().inverse();
  r.value_mut() = inv;
  if (a.order() >= 1)
    for (int k = 0; k < kMaxMomentumDim; ++k) r.grad_mut(k) = -inv * a.grad(k) * inv;
  if (a.order() >= 2)
    for (int k = 0; k < kMaxMomentumDim; ++k)
      for (int l = 0; l < kMaxMomentumDim; ++l)
        r.hess_mut(k, l) = inv * (a.grad(k) * inv * a.grad(l) + a.grad(l) * inv * a.grad(k) -
                                  a.hess(k, l)) *
                           inv;
  return r;
}

MatrixJet expm(const MatrixJet& a) {
  MatrixJet r(a.dim(), a.momentum_dim(), a.order());
  r.value_mut() = pctlab::expm(a.value());
  const int d = a.momentum_dim();
  if (a.order() >= 1)
    for (int k = 0; k < d; ++k) r.grad_mut(k) = expm_frechet(a.value(), a.grad(k));
  if (a.order() >= 2)
    for (int k = 0; k < d; ++k)
      for (int l = k; l < d; ++l) {
        r.hess_mut(k, l) = expm_second(a.value(), a.grad(k), a.grad(l), a.hess(k, l));
        r.hess_mut(l, k) = r.hess(k, l);
      }
  return r;
}

}  // namespace pctlab
