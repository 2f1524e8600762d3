#include "pctlab/position.hpp"

#include <algorithm>
#include <stdexcept>

namespace pctlab {

const std::vector<std::string>& position_names() {
  static const std::vector<std::string> names{"Xchi", "Xpsi", "Xchi2", "XW"};
  return names;
}

std::string position_unitary(const std::string& name) {
  if (name == "Xchi") return "U2";
  if (name == "Xpsi") return "U2U1";
  if (name == "Xchi2") return "V1";
  if (name == "XW") return "V";
  throw std::invalid_argument("position: unknown operator '" + name + "'");
}

PositionOperator position_from_unitary(const OperatorField& u, std::string name) {
  PositionOperator x{std::move(name), {}};
  for (int k = 0; k < u.momentum_dim(); ++k)
    x.components.push_back(
        conjugate_by_unitary(u, DiffOp1::position(k, u.dim(), u.momentum_dim())));
  return x;
}

PositionOperator position_from_unitary(const std::string& name) {
  return position_from_unitary(catalog_unitary(position_unitary(name)).closed, name);
}

namespace {

using MatrixBuilder = std::function<MatrixJet(Coords, int a)>;

PositionOperator assemble(const std::string& name, int dim, const MatrixBuilder& part) {
  PositionOperator x{name, {}};
  for (int k = 0; k < 3; ++k) {
    DiffOp1 g = DiffOp1::position(k, dim, 3);
    g.a = OperatorField(dim, 3, [part, k](Coords p) { return part(p, k); });
    x.components.push_back(std::move(g));
  }
  return x;
}

MatrixJet term(const ScalarJet& s, const CMatrix& m) { return MatrixJet::scaled(s, m, 3); }

// Σ_c M_c p_c over the transverse axes.
MatrixJet transverse_sum(Coords p, const CMatrix& m1, const CMatrix& m2) {
  return term(p[0], m1) + term(p[1], m2);
}

}  // namespace

PositionOperator position_closed_form(const std::string& name) {
  const GammaSet g = gamma_set("rep26");
  const CMatrix s51 = spin_matrix(g, 5, 1).value, s52 = spin_matrix(g, 5, 2).value;
  const CMatrix s12 = spin_matrix(g, 1, 2).value;
  const CMatrix sig[3] = {pauli(1), pauli(2), pauli(3)};

  if (name == "Xchi" || name == "Xpsi") {
    const bool psi = name == "Xpsi";
    const CMatrix g3 = g[3];
    return assemble(name, 4, [=](Coords p, int a) {
      const ScalarJet e = energy3(p);
      const ScalarJet ea = e + abs_p3(p);
      const double e3 = sign_p3(p);
      const MatrixJet s5p = transverse_sum(p, s51, s52);
      if (a == 2) {
        const ScalarJet w = reciprocal(e * e);
        return psi ? Complex(-1.0) * term(w, g3) * s5p : term(e3 * w, identity(4)) * s5p;
      }
      const CMatrix s5a = a == 0 ? s51 : s52;
      const int c = 1 - a;
      const CMatrix sac = a == 0 ? s12 : CMatrix(-s12);
      const ScalarJet pa = p[static_cast<std::size_t>(a)];
      const ScalarJet pc = p[static_cast<std::size_t>(c)];
      MatrixJet out = term(pc / (e * ea), sac);
      if (psi) {
        out += term(e3 * reciprocal(e), g3 * s5a);
        out -= term(e3 * pa / (e * e * ea), g3) * s5p;
      } else {
        out -= term(reciprocal(e), s5a);
        out += term(pa / (e * e * ea), identity(4)) * s5p;
      }
      return out;
    });
  }
  if (name == "Xchi2" || name == "XW") {
    const bool weyl = name == "XW";
    return assemble(name, 2, [=](Coords p, int a) {
      const ScalarJet e = energy3(p);
      const ScalarJet ea = e + abs_p3(p);
      const double e3 = sign_p3(p);
      const MatrixJet sp = transverse_sum(p, sig[0], sig[1]);
      if (a == 2) {
        const ScalarJet w = reciprocal(2.0 * e * e);
        return weyl ? term(w, -kI * sig[2]) * sp : term(e3 * w, identity(2)) * sp;
      }
      const CMatrix& sa = sig[a];
      const int c = 1 - a;
      const CMatrix comm = sa * sig[c] - sig[c] * sa;
      const ScalarJet pa = p[static_cast<std::size_t>(a)];
      const ScalarJet pc = p[static_cast<std::size_t>(c)];
      MatrixJet out = term(pc / (4.0 * e * ea), -kI * comm);
      if (weyl) {
        out += term(e3 * reciprocal(2.0 * e), kI * sig[2] * sa);
        out -= term(e3 * pa / (2.0 * e * e * ea), kI * sig[2]) * sp;
      } else {
        out -= term(reciprocal(2.0 * e), sa);
        out += term(pa / (2.0 * e * e * ea), identity(2)) * sp;
      }
      return out;
    });
  }
  throw std::invalid_argument("position_closed_form: unknown operator '" + name + "'");
}

CheckList verify_position(const std::string& name, const std::vector<MomentumPoint>& samples,
                          double tol, double ccr_tol) {
  const PositionOperator conj = position_from_unitary(name);
  const PositionOperator closed = position_closed_form(name);
  const int dim = conj.components.front().dim();
  const int d = static_cast<int>(conj.components.size());

  double diff = 0.0, ccr = 0.0, xx = 0.0, herm = 0.0, deriv = 0.0;
  for (const auto& p : samples) {
    std::vector<DiffOpAt> a, b;
    for (int k = 0; k < d; ++k) {
      a.push_back(evaluate(conj.components[static_cast<std::size_t>(k)], p, 0.0));
      b.push_back(evaluate(closed.components[static_cast<std::size_t>(k)], p, 0.0));
      diff = std::max(diff, max_abs_diff(a.back(), b.back()));
      herm = std::max(herm, hermiticity_residual(a.back().a));
      for (int l = 0; l < d; ++l) {
        const CMatrix expected = l == k ? identity(dim) : zeros(dim);
        deriv = std::max(deriv, max_abs_diff(a.back().b[static_cast<std::size_t>(l)], expected));
      }
    }
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const auto c = diffop_commutator(conj.components[static_cast<std::size_t>(j)],
                                         DiffOp1::momentum(k, dim, d), p);
        DiffOpAt expected{j == k ? CMatrix(kI * identity(dim)) : zeros(dim),
                          std::vector<CMatrix>(static_cast<std::size_t>(d), zeros(dim))};
        ccr = std::max(ccr, max_abs_diff(c.first_order, expected));
        if (j < k)
          xx = std::max(xx, max_abs(diffop_commutator(conj.components[static_cast<std::size_t>(j)],
                                                      conj.components[static_cast<std::size_t>(k)], p)
                                        .first_order));
      }
  }
  CheckList out;
  out.push_back(make_check(name + " closed form = conjugation", diff, tol));
  out.push_back(make_check(name + " derivative part = identity", deriv, ccr_tol));
  out.push_back(make_check(name + " [X_j, p_k] = i delta_jk", ccr, ccr_tol));
  out.push_back(make_info(name + " max |[X_j, X_k]|", xx));
  out.push_back(make_info(name + " Hermiticity residual of matrix parts", herm));
  return out;
}

}  // namespace pctlab
