#pragma once

// Momentum-space operator calculus. Every operator is a matrix-valued field
// of p, optionally composed with x_k = i∂/∂p_k and the formal time x0.

#include "pctlab/jet.hpp"
#include "pctlab/linalg.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace pctlab {

class SingularPointError : public NumericError {
 public:
  SingularPointError() : NumericError("singular point") {}
};

class MomentumPoint {
 public:
  MomentumPoint() = default;
  explicit MomentumPoint(std::vector<double> components);
  MomentumPoint(std::initializer_list<double> components);

  int dim() const { return static_cast<int>(p_.size()); }
  double operator[](int k) const { return p_.at(static_cast<std::size_t>(k)); }
  const std::vector<double>& components() const { return p_; }

  /// Componentwise sign flip (flips[k] ⇒ p_k → -p_k), then overall negation
  /// when `negate_all` is set.
  MomentumPoint reflected(const std::vector<bool>& flips, bool negate_all = false) const;

 private:
  std::vector<double> p_;
};

/// Exclusion rules for sampled momenta. Zero disables a rule.
struct Exclusions {
  double min_abs_p3 = 0.05;
  double min_transverse_sq = 0.0025;
  static Exclusions none() { return {0.0, 0.0}; }
};

/// Deterministic seeded momenta with components in [-10, -0.1] ∪ [0.1, 10].
/// For d ≥ 3 the sign of p3 alternates (+, -, +, ...), so both signs occur
/// whenever n ≥ 2.
std::vector<MomentumPoint> sample_momenta(int d, int n, std::uint64_t seed,
                                          const Exclusions& ex = {});

/// Seeded coordinates handed to field builders.
using Coords = std::span<const ScalarJet>;

/// Frequently used scalar building blocks. All throw SingularPointError where
/// the expression is undefined.
ScalarJet energy(Coords p);               // √(Σ p_k²), all components
ScalarJet energy3(Coords p);              // √(p1²+p2²+p3²)
ScalarJet transverse_norm(Coords p);      // √(p1²+p2²)
ScalarJet abs_p3(Coords p);               // |p3|
double sign_p3(Coords p);                 // e3 = p3/|p3|

/// A pure map p ↦ CMatrix with exact first and second derivatives.
class OperatorField {
 public:
  using Builder = std::function<MatrixJet(Coords)>;

  OperatorField() = default;
  OperatorField(int dim, int momentum_dim, Builder builder);

  static OperatorField constant(const CMatrix& m, int momentum_dim);
  static OperatorField zero(int dim, int momentum_dim);
  /// s(p)·m for a scalar builder s.
  static OperatorField scalar(std::function<ScalarJet(Coords)> s, const CMatrix& m,
                              int momentum_dim);

  int dim() const { return dim_; }
  int momentum_dim() const { return d_; }
  bool valid() const { return static_cast<bool>(builder_); }

  MatrixJet jet(const MomentumPoint& p) const;
  MatrixJet jet(Coords p) const { return builder_(p); }
  CMatrix eval(const MomentumPoint& p) const;
  CMatrix deriv(const MomentumPoint& p, int k) const;

 private:
  int dim_ = 0;
  int d_ = 0;
  Builder builder_;
};

OperatorField operator+(const OperatorField& a, const OperatorField& b);
OperatorField operator-(const OperatorField& a, const OperatorField& b);
OperatorField operator*(const OperatorField& a, const OperatorField& b);
OperatorField operator*(Complex c, const OperatorField& a);
OperatorField adjoint(const OperatorField& a);
OperatorField partial(const OperatorField& a, int k);
/// Restriction to the upper-left `n`×`n` block (used for two-component reductions).
OperatorField upper_block(const OperatorField& a, int n);

/// Exact ∂f/∂p_k at p.
CMatrix field_derivative(const OperatorField& f, const MomentumPoint& p, int k);

/// First-order differential operator A(p) + Σ_k B_k(p)·(i∂/∂p_k) + x0·C(p),
/// with x0 a commuting formal scalar.
struct DiffOp1 {
  OperatorField a;
  std::vector<OperatorField> b;
  OperatorField x0;

  int dim() const { return a.dim(); }
  int momentum_dim() const { return a.momentum_dim(); }

  /// Pure multiplication operator.
  static DiffOp1 multiplication(const OperatorField& f);
  /// x_k = i∂/∂p_k acting on dim-component functions.
  static DiffOp1 position(int k, int dim, int momentum_dim);
  /// p_k times the identity.
  static DiffOp1 momentum(int k, int dim, int momentum_dim);
  /// x0 times f(p).
  static DiffOp1 time_times(const OperatorField& f);
};

DiffOp1 operator+(const DiffOp1& g, const DiffOp1& h);
DiffOp1 operator-(const DiffOp1& g, const DiffOp1& h);
DiffOp1 operator*(Complex c, const DiffOp1& g);
/// Left multiplication f(p)·g.
DiffOp1 operator*(const OperatorField& f, const DiffOp1& g);

/// Orbital part x_k p_l - x_l p_k (k ≠ l) times the identity.
DiffOp1 orbital(int k, int l, int dim, int momentum_dim);

/// -½[x_k, H]₊ = -H·x_k - ½ i∂_k H.
DiffOp1 minus_half_anticommutator(int k, const OperatorField& h);

/// A DiffOp1 evaluated at one momentum and one value of x0 (folded into `a`).
struct DiffOpAt {
  CMatrix a;
  std::vector<CMatrix> b;
};

DiffOpAt evaluate(const DiffOp1& g, const MomentumPoint& p, double x0);

DiffOpAt operator+(const DiffOpAt& g, const DiffOpAt& h);
DiffOpAt operator*(Complex c, const DiffOpAt& g);
double max_abs_diff(const DiffOpAt& g, const DiffOpAt& h);
double max_abs(const DiffOpAt& g);

struct CommutatorAt {
  DiffOpAt first_order;
  /// max_{k,l} ‖½(B1k B2l - B2k B1l + B1l B2k - B2l B1k)‖, the coefficient of
  /// the symmetric second-derivative term that a first-order result omits.
  double second_order_residual = 0.0;
};

/// [g1, g2] at momentum p and time x0.
CommutatorAt diffop_commutator(const DiffOp1& g1, const DiffOp1& g2, const MomentumPoint& p,
                               double x0 = 0.0);

/// u⁻¹ g u for a unitary field u. The unitarity of u(p) is checked at every
/// evaluation (residual > 1e-8 throws NumericError("non-unitary field")).
DiffOp1 conjugate_by_unitary(const OperatorField& u, const DiffOp1& g);

}  // namespace pctlab
