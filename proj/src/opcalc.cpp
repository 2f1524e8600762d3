#include "pctlab/opcalc.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pctlab {

MomentumPoint::MomentumPoint(std::vector<double> components) : p_(std::move(components)) {
  if (p_.empty() || p_.size() > static_cast<std::size_t>(kMaxMomentumDim))
    throw std::invalid_argument("MomentumPoint: dimension must be 1..4");
}

MomentumPoint::MomentumPoint(std::initializer_list<double> components)
    : MomentumPoint(std::vector<double>(components)) {}

MomentumPoint MomentumPoint::reflected(const std::vector<bool>& flips, bool negate_all) const {
  std::vector<double> q = p_;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (k < flips.size() && flips[k]) q[k] = -q[k];
    if (negate_all) q[k] = -q[k];
  }
  return MomentumPoint(std::move(q));
}

std::vector<MomentumPoint> sample_momenta(int d, int n, std::uint64_t seed, const Exclusions& ex) {
  if (n < 1) throw std::invalid_argument("sample_momenta: n must be >= 1");
  if (d < 1 || d > kMaxMomentumDim) throw std::invalid_argument("sample_momenta: bad dimension");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.1, 10.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<MomentumPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(out.size()) < n) {
    std::vector<double> q(static_cast<std::size_t>(d));
    for (auto& c : q) c = coin(rng) ? mag(rng) : -mag(rng);
    if (d >= 3) {
      const bool positive = out.size() % 2 == 0;
      q[2] = positive ? std::abs(q[2]) : -std::abs(q[2]);
      if (std::abs(q[2]) < ex.min_abs_p3) continue;
    }
    if (d >= 2 && q[0] * q[0] + q[1] * q[1] < ex.min_transverse_sq) continue;
    out.emplace_back(std::move(q));
  }
  return out;
}

ScalarJet energy(Coords p) {
  ScalarJet s;
  for (const auto& c : p) s = s + c * c;
  if (s.v == 0.0) throw SingularPointError();
  return sqrt(s);
}

ScalarJet energy3(Coords p) {
  if (p.size() < 3) throw std::invalid_argument("energy3: needs three components");
  const ScalarJet s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  if (s.v == 0.0) throw SingularPointError();
  return sqrt(s);
}

ScalarJet transverse_norm(Coords p) {
  const ScalarJet s = p[0] * p[0] + p[1] * p[1];
  if (s.v == 0.0) throw SingularPointError();
  return sqrt(s);
}

ScalarJet abs_p3(Coords p) {
  if (p.size() < 3) throw std::invalid_argument("abs_p3: needs three components");
  if (p[2].v == 0.0) throw SingularPointError();
  return abs(p[2]);
}

double sign_p3(Coords p) {
  if (p.size() < 3) throw std::invalid_argument("sign_p3: needs three components");
  if (p[2].v == 0.0) throw SingularPointError();
  return p[2].v > 0.0 ? 1.0 : -1.0;
}

OperatorField::OperatorField(int dim, int momentum_dim, Builder builder)
    : dim_(dim), d_(momentum_dim), builder_(std::move(builder)) {
  if (dim < 1) throw std::invalid_argument("OperatorField: dim must be >= 1");
  if (momentum_dim < 1 || momentum_dim > kMaxMomentumDim)
    throw std::invalid_argument("OperatorField: bad momentum dimension");
}

OperatorField OperatorField::constant(const CMatrix& m, int momentum_dim) {
  return OperatorField(static_cast<int>(m.rows()), momentum_dim,
                       [m, momentum_dim](Coords) { return MatrixJet::constant(m, momentum_dim); });
}

OperatorField OperatorField::zero(int dim, int momentum_dim) {
  return constant(zeros(dim), momentum_dim);
}

OperatorField OperatorField::scalar(std::function<ScalarJet(Coords)> s, const CMatrix& m,
                                    int momentum_dim) {
  return OperatorField(static_cast<int>(m.rows()), momentum_dim,
                       [s = std::move(s), m, momentum_dim](Coords p) {
                         return MatrixJet::scaled(s(p), m, momentum_dim);
                       });
}

MatrixJet OperatorField::jet(const MomentumPoint& p) const {
  if (p.dim() != d_) throw std::invalid_argument("OperatorField: momentum dimension mismatch");
  std::vector<ScalarJet> coords;
  coords.reserve(static_cast<std::size_t>(d_));
  for (int k = 0; k < d_; ++k) coords.push_back(ScalarJet::variable(p[k], k));
  MatrixJet j = builder_(coords);
  if (!is_finite(j.value())) throw SingularPointError();
  return j;
}

CMatrix OperatorField::eval(const MomentumPoint& p) const { return jet(p).value(); }

CMatrix OperatorField::deriv(const MomentumPoint& p, int k) const { return jet(p).grad(k); }

namespace {
void require_compatible(const OperatorField& a, const OperatorField& b) {
  if (a.dim() != b.dim() || a.momentum_dim() != b.momentum_dim())
    throw std::invalid_argument("OperatorField: shape mismatch");
}
}  // namespace

OperatorField operator+(const OperatorField& a, const OperatorField& b) {
  require_compatible(a, b);
  return OperatorField(a.dim(), a.momentum_dim(), [a, b](Coords p) { return a.jet(p) + b.jet(p); });
}

OperatorField operator-(const OperatorField& a, const OperatorField& b) {
  require_compatible(a, b);
  return OperatorField(a.dim(), a.momentum_dim(), [a, b](Coords p) { return a.jet(p) - b.jet(p); });
}

OperatorField operator*(const OperatorField& a, const OperatorField& b) {
  require_compatible(a, b);
  return OperatorField(a.dim(), a.momentum_dim(), [a, b](Coords p) { return a.jet(p) * b.jet(p); });
}

OperatorField operator*(Complex c, const OperatorField& a) {
  return OperatorField(a.dim(), a.momentum_dim(), [a, c](Coords p) { return c * a.jet(p); });
}

OperatorField adjoint(const OperatorField& a) {
  return OperatorField(a.dim(), a.momentum_dim(), [a](Coords p) { return a.jet(p).adjoint(); });
}

OperatorField partial(const OperatorField& a, int k) {
  if (k < 0 || k >= a.momentum_dim()) throw std::out_of_range("partial: axis out of range");
  return OperatorField(a.dim(), a.momentum_dim(), [a, k](Coords p) { return a.jet(p).partial(k); });
}

OperatorField upper_block(const OperatorField& a, int n) {
  if (n < 1 || n > a.dim()) throw std::out_of_range("upper_block: bad block size");
  return OperatorField(n, a.momentum_dim(), [a, n](Coords p) {
    const MatrixJet full = a.jet(p);
    MatrixJet r(n, full.momentum_dim(), full.order());
    r.value_mut() = full.value().topLeftCorner(n, n);
    for (int k = 0; k < kMaxMomentumDim; ++k) {
      if (full.order() >= 1) r.grad_mut(k) = full.grad(k).topLeftCorner(n, n);
      for (int l = 0; l < kMaxMomentumDim; ++l)
        if (full.order() >= 2) r.hess_mut(k, l) = full.hess(k, l).topLeftCorner(n, n);
    }
    return r;
  });
}

CMatrix field_derivative(const OperatorField& f, const MomentumPoint& p, int k) {
  return f.deriv(p, k);
}

DiffOp1 DiffOp1::multiplication(const OperatorField& f) {
  DiffOp1 g;
  g.a = f;
  g.b.assign(static_cast<std::size_t>(f.momentum_dim()), OperatorField::zero(f.dim(), f.momentum_dim()));
  g.x0 = OperatorField::zero(f.dim(), f.momentum_dim());
  return g;
}

DiffOp1 DiffOp1::position(int k, int dim, int momentum_dim) {
  DiffOp1 g = multiplication(OperatorField::zero(dim, momentum_dim));
  g.b.at(static_cast<std::size_t>(k)) = OperatorField::constant(identity(dim), momentum_dim);
  return g;
}

DiffOp1 DiffOp1::momentum(int k, int dim, int momentum_dim) {
  return multiplication(
      OperatorField::scalar([k](Coords p) { return p[static_cast<std::size_t>(k)]; },
                            identity(dim), momentum_dim));
}

DiffOp1 DiffOp1::time_times(const OperatorField& f) {
  DiffOp1 g = multiplication(OperatorField::zero(f.dim(), f.momentum_dim()));
  g.x0 = f;
  return g;
}

DiffOp1 operator+(const DiffOp1& g, const DiffOp1& h) {
  DiffOp1 r;
  r.a = g.a + h.a;
  r.x0 = g.x0 + h.x0;
  for (std::size_t k = 0; k < g.b.size(); ++k) r.b.push_back(g.b[k] + h.b.at(k));
  return r;
}

DiffOp1 operator*(Complex c, const DiffOp1& g) {
  DiffOp1 r;
  r.a = c * g.a;
  r.x0 = c * g.x0;
  for (const auto& bk : g.b) r.b.push_back(c * bk);
  return r;
}

DiffOp1 operator-(const DiffOp1& g, const DiffOp1& h) { return g + Complex(-1.0) * h; }

DiffOp1 operator*(const OperatorField& f, const DiffOp1& g) {
  DiffOp1 r;
  r.a = f * g.a;
  r.x0 = f * g.x0;
  for (const auto& bk : g.b) r.b.push_back(f * bk);
  return r;
}

DiffOp1 orbital(int k, int l, int dim, int momentum_dim) {
  if (k == l) throw std::invalid_argument("orbital: indices must differ");
  DiffOp1 g = DiffOp1::multiplication(OperatorField::zero(dim, momentum_dim));
  const CMatrix one = identity(dim);
  g.b.at(static_cast<std::size_t>(k)) = OperatorField::scalar(
      [l](Coords p) { return p[static_cast<std::size_t>(l)]; }, one, momentum_dim);
  g.b.at(static_cast<std::size_t>(l)) = OperatorField::scalar(
      [k](Coords p) { return -p[static_cast<std::size_t>(k)]; }, one, momentum_dim);
  return g;
}

DiffOp1 minus_half_anticommutator(int k, const OperatorField& h) {
  DiffOp1 g = DiffOp1::multiplication(Complex(-0.5) * kI * partial(h, k));
  g.b.at(static_cast<std::size_t>(k)) = Complex(-1.0) * h;
  return g;
}

DiffOpAt evaluate(const DiffOp1& g, const MomentumPoint& p, double x0) {
  DiffOpAt r;
  r.a = g.a.eval(p) + x0 * g.x0.eval(p);
  for (const auto& bk : g.b) r.b.push_back(bk.eval(p));
  return r;
}

DiffOpAt operator+(const DiffOpAt& g, const DiffOpAt& h) {
  DiffOpAt r{g.a + h.a, {}};
  for (std::size_t k = 0; k < g.b.size(); ++k) r.b.push_back(g.b[k] + h.b.at(k));
  return r;
}

DiffOpAt operator*(Complex c, const DiffOpAt& g) {
  DiffOpAt r{c * g.a, {}};
  for (const auto& bk : g.b) r.b.push_back(c * bk);
  return r;
}

double max_abs_diff(const DiffOpAt& g, const DiffOpAt& h) {
  double r = max_abs_diff(g.a, h.a);
  for (std::size_t k = 0; k < g.b.size(); ++k) r = std::max(r, max_abs_diff(g.b[k], h.b.at(k)));
  return r;
}

double max_abs(const DiffOpAt& g) {
  double r = max_abs(g.a);
  for (const auto& bk : g.b) r = std::max(r, max_abs(bk));
  return r;
}

CommutatorAt diffop_commutator(const DiffOp1& g1, const DiffOp1& g2, const MomentumPoint& p,
                               double x0) {
  if (g1.dim() != g2.dim() || g1.momentum_dim() != g2.momentum_dim())
    throw std::invalid_argument("diffop_commutator: operator shapes differ");
  const int d = g1.momentum_dim();
  const auto du = static_cast<std::size_t>(d);

  const MatrixJet a1 = g1.a.jet(p) + Complex(x0) * g1.x0.jet(p);
  const MatrixJet a2 = g2.a.jet(p) + Complex(x0) * g2.x0.jet(p);
  std::vector<MatrixJet> b1, b2;
  for (std::size_t k = 0; k < du; ++k) {
    b1.push_back(g1.b.at(k).jet(p));
    b2.push_back(g2.b.at(k).jet(p));
  }

  CommutatorAt out;
  DiffOpAt& r = out.first_order;
  r.a = commutator(a1.value(), a2.value());
  for (int k = 0; k < d; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    r.a += kI * (b1[ku].value() * a2.grad(k) - b2[ku].value() * a1.grad(k));
  }
  for (int k = 0; k < d; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    CMatrix c = commutator(a1.value(), b2[ku].value()) - commutator(a2.value(), b1[ku].value());
    for (int l = 0; l < d; ++l) {
      const auto lu = static_cast<std::size_t>(l);
      c += kI * (b1[lu].value() * b2[ku].grad(l) - b2[lu].value() * b1[ku].grad(l));
    }
    r.b.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < du; ++k)
    for (std::size_t l = k; l < du; ++l) {
      const CMatrix s = 0.5 * (b1[k].value() * b2[l].value() - b2[k].value() * b1[l].value() +
                               b1[l].value() * b2[k].value() - b2[l].value() * b1[k].value());
      out.second_order_residual = std::max(out.second_order_residual, max_abs(s));
    }
  return out;
}

DiffOp1 conjugate_by_unitary(const OperatorField& u, const DiffOp1& g) {
  if (u.dim() != g.dim() || u.momentum_dim() != g.momentum_dim())
    throw std::invalid_argument("conjugate_by_unitary: shape mismatch");
  const int dim = g.dim();
  const int d = g.momentum_dim();
  auto checked = [u](Coords p) {
    MatrixJet j = u.jet(p);
    if (unitarity_residual(j.value()) > 1e-8) throw NumericError("non-unitary field");
    return j;
  };
  auto sandwich = [checked](const OperatorField& f) {
    return OperatorField(f.dim(), f.momentum_dim(), [checked, f](Coords p) {
      const MatrixJet uj = checked(p);
      return uj.adjoint() * f.jet(p) * uj;
    });
  };

  DiffOp1 r;
  const auto b = g.b;
  const auto a = g.a;
  r.a = OperatorField(dim, d, [checked, a, b, d](Coords p) {
    const MatrixJet uj = checked(p);
    const MatrixJet ud = uj.adjoint();
    MatrixJet acc = ud * a.jet(p) * uj;
    for (int k = 0; k < d; ++k)
      acc += ud * b[static_cast<std::size_t>(k)].jet(p) * (kI * uj.partial(k));
    return acc;
  });
  for (const auto& bk : g.b) r.b.push_back(sandwich(bk));
  r.x0 = sandwich(g.x0);
  return r;
}

}  // namespace pctlab
