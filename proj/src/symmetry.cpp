#include "pctlab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pctlab {

std::string SymmetryElement::label() const {
  std::string out;
  auto add = [&out](const std::string& t) { out += (out.empty() ? "" : "*") + t; };
  for (std::size_t k = 0; k < flips.size(); ++k)
    if (flips[k]) add("P" + std::to_string(k + 1));
  if (time_flip && conjugate) add("T1");
  else if (time_flip) add("T2");
  else if (conjugate) add("C");
  return out.empty() ? "E" : out;
}

SymmetryElement SymmetryElement::parse(const std::string& label, int d) {
  if (d < 1 || d > kMaxMomentumDim) throw std::invalid_argument("SymmetryElement: bad dimension");
  SymmetryElement g{std::vector<bool>(static_cast<std::size_t>(d), false), false, false};
  std::stringstream ss(label);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, '*')) {
    any = true;
    if (tok == "E") continue;
    if (tok == "C") {
      g.conjugate = !g.conjugate;
    } else if (tok == "T1") {
      g.time_flip = !g.time_flip;
      g.conjugate = !g.conjugate;
    } else if (tok == "T2") {
      g.time_flip = !g.time_flip;
    } else if (tok.size() == 2 && tok[0] == 'P' && tok[1] >= '1' && tok[1] <= '4') {
      const int k = tok[1] - '1';
      if (k >= d) throw std::invalid_argument("SymmetryElement: axis " + tok + " exceeds dimension");
      g.flips[static_cast<std::size_t>(k)] = !g.flips[static_cast<std::size_t>(k)];
    } else {
      throw std::invalid_argument("SymmetryElement: bad token '" + tok + "' in '" + label + "'");
    }
  }
  if (!any) throw std::invalid_argument("SymmetryElement: empty label");
  return g;
}

std::vector<SymmetryElement> SymmetryElement::all(int d) {
  std::vector<SymmetryElement> out;
  for (int extra = 0; extra < 4; ++extra)
    for (int bits = 0; bits < (1 << d); ++bits) {
      SymmetryElement g;
      for (int k = 0; k < d; ++k) g.flips.push_back(bits & (1 << k));
      g.time_flip = extra & 1;
      g.conjugate = extra & 2;
      out.push_back(std::move(g));
    }
  return out;
}

SymmetryElement compose(const SymmetryElement& a, const SymmetryElement& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("compose: dimension mismatch");
  SymmetryElement r = a;
  for (std::size_t k = 0; k < r.flips.size(); ++k) r.flips[k] = a.flips[k] != b.flips[k];
  r.time_flip = a.time_flip != b.time_flip;
  r.conjugate = a.conjugate != b.conjugate;
  return r;
}

IntertwineCondition intertwine_condition(const EquationSpec& eq, const SymmetryElement& g,
                                         const MomentumPoint& p) {
  if (g.dim() != eq.d) throw std::invalid_argument("intertwine_condition: dimension mismatch");
  const double et = g.time_flip ? -1.0 : 1.0;
  IntertwineCondition c;
  c.original = eq.hamiltonian.eval(p);
  if (g.conjugate) {
    c.transformed = -et * eq.hamiltonian.eval(p.reflected(g.flips, true)).conjugate();
  } else {
    c.transformed = et * eq.hamiltonian.eval(p.reflected(g.flips));
  }
  return c;
}

CMatrix stacked_condition(const EquationSpec& eq, const SymmetryElement& g,
                          const std::vector<MomentumPoint>& points) {
  const int n = eq.dim;
  const CMatrix one = identity(n);
  CMatrix a(static_cast<Eigen::Index>(points.size()) * n * n, n * n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto c = intertwine_condition(eq, g, points[i]);
    const double scale = 1.0 / c.original.norm();
    a.block(static_cast<Eigen::Index>(i) * n * n, 0, n * n, n * n) =
        scale * (kron(one, c.transformed.transpose()) - kron(c.original, one));
  }
  return a;
}

double intertwiner_residual(const EquationSpec& eq, const SymmetryElement& g, const CMatrix& m,
                            const std::vector<MomentumPoint>& points) {
  double r = 0.0;
  const double mn = max_abs(m);
  for (const auto& p : points) {
    const auto c = intertwine_condition(eq, g, p);
    r = std::max(r, max_abs(m * c.transformed - c.original * m) / (max_abs(c.original) * mn));
  }
  return r;
}

namespace {

CMatrix fix_phase(const CMatrix& m) {
  const double top = max_abs(m);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (std::abs(z) >= top * (1.0 - 1e-9)) return m * (std::conj(z) / std::abs(z));
  }
  return m;
}

}  // namespace

SolveResult solve_intertwiner(const EquationSpec& eq, const SymmetryElement& g,
                              const SolveOptions& opt) {
  if (opt.n_fit < 2) throw std::invalid_argument("solve_intertwiner: need at least two fit samples");
  if (opt.n_holdout < 1) throw std::invalid_argument("solve_intertwiner: need holdout samples");
  const auto fit = sample_momenta(eq.d, opt.n_fit, opt.seed);
  const auto holdout = sample_momenta(eq.d, opt.n_holdout, opt.seed ^ 0x9e3779b97f4a7c15ULL);

  const CMatrix a = stacked_condition(eq, g, fit);
  const Nullspace ns = svd_nullspace(a, opt.nullspace_tol);
  SolveResult out;
  out.certificate = ns.sigma_max > 0.0 ? ns.singular.back() / ns.sigma_max : 0.0;
  out.nullity = static_cast<int>(ns.basis.size());

  if (ns.basis.empty()) {
    if (out.certificate < opt.certificate_tol) {
      std::ostringstream msg;
      msg << "indeterminate - increase samples (" << eq.name << ", " << g.label()
          << ", sigma_min/sigma_max = " << out.certificate << ")";
      throw IndeterminateError(msg.str());
    }
    return out;
  }

  // A generic member of the nullspace is invertible iff any member is.
  std::vector<CMatrix> candidates;
  for (const auto& v : ns.basis) candidates.push_back(unvec_row_major(v, eq.dim));
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 8; ++t) {
    CVector v = CVector::Zero(eq.dim * eq.dim);
    for (const auto& b : ns.basis) v += Complex(normal(rng), normal(rng)) * b;
    candidates.push_back(unvec_row_major(v, eq.dim));
  }
  double best_cond = 0.0;
  for (const auto& m : candidates) {
    const double ic = inverse_condition(m);
    best_cond = std::max(best_cond, ic);
    if (ic < 1e-6) continue;
    Intertwiner it;
    it.matrix = fix_phase(m / max_abs(m));
    it.unitary_rep = fix_phase(polar_unitary(it.matrix));
    it.residual = intertwiner_residual(eq, g, it.matrix, fit);
    it.holdout_residual = intertwiner_residual(eq, g, it.matrix, holdout);
    if (it.holdout_residual > opt.holdout_tol) {
      std::ostringstream msg;
      msg << "indeterminate - increase samples (" << eq.name << ", " << g.label()
          << ": nullspace fails holdout, residual " << it.holdout_residual << ")";
      throw IndeterminateError(msg.str());
    }
    out.invariant = true;
    out.intertwiner = std::move(it);
    return out;
  }
  out.singular_nullspace = true;
  out.certificate = best_cond;
  return out;
}

const Verdict& ClassificationReport::verdict(const std::string& label) const {
  const SymmetryElement g = SymmetryElement::parse(label, d);
  for (const auto& v : verdicts)
    if (v.element == g) return v;
  throw std::out_of_range("ClassificationReport: no verdict for " + label);
}

CMatrix compose_intertwiners(const SymmetryElement& g1, const CMatrix& m1, const CMatrix& m2) {
  return g1.conjugate ? CMatrix(m1 * m2.conjugate()) : CMatrix(m1 * m2);
}

ClassificationReport classify_equation(const EquationSpec& eq, const SolveOptions& opt) {
  ClassificationReport rep;
  rep.equation = eq.name;
  rep.d = eq.d;
  for (const auto& g : SymmetryElement::all(eq.d))
    rep.verdicts.push_back({g, solve_intertwiner(eq, g, opt)});

  for (const auto& c : eq.claims) {
    const Verdict& v = rep.verdict(c.label);
    ClaimCheck cc{c, v.element.label(), v.result.invariant, v.result.invariant == c.invariant};
    rep.agreement = rep.agreement && cc.agrees;
    rep.claims.push_back(std::move(cc));
  }

  const auto holdout = sample_momenta(eq.d, opt.n_holdout, opt.seed ^ 0x5bd1e995ULL);
  for (const auto& v1 : rep.verdicts) {
    if (!v1.result.invariant) continue;
    for (const auto& v2 : rep.verdicts) {
      if (!v2.result.invariant) continue;
      const SymmetryElement g = compose(v1.element, v2.element);
      const Verdict& v12 = rep.verdict(g.label());
      if (!v12.result.invariant) {
        rep.coherent = false;
        continue;
      }
      const CMatrix m = compose_intertwiners(v1.element, v1.result.intertwiner->matrix,
                                             v2.result.intertwiner->matrix);
      const double r = intertwiner_residual(eq, g, m, holdout);
      rep.coherence_residual = std::max(rep.coherence_residual, r);
      if (r > opt.holdout_tol) rep.coherent = false;
    }
  }
  return rep;
}

CheckList verify_projection_relations(const SolveOptions& opt, double tol) {
  const EquationSpec eq = catalog_equation("chi_4c");
  const GammaSet g = gamma_set("rep26");
  const CMatrix qp = projector_q(g, +1), qm = projector_q(g, -1);

  struct Relation {
    const char* label;
    bool swaps;
  };
  const Relation relations[] = {{"P1", true}, {"P2", true}, {"T1", true},
                                {"T2", true}, {"P3", false}, {"C", false}};
  CheckList out;
  for (const auto& rel : relations) {
    const SymmetryElement el = SymmetryElement::parse(rel.label, 3);
    const SolveResult s = solve_intertwiner(eq, el, opt);
    if (!s.invariant)
      throw std::runtime_error(std::string("verify_projection_relations: no 4x4 intertwiner for ") +
                               rel.label);
    const CMatrix& m = s.intertwiner->matrix;
    const CMatrix minv = m.inverse();
    double r = 0.0;
    for (int sign : {+1, -1}) {
      const CMatrix q = sign > 0 ? qp : qm;
      const CMatrix q_in = el.conjugate ? CMatrix(q.conjugate()) : q;
      const CMatrix expected = rel.swaps ? (sign > 0 ? qm : qp) : q;
      r = std::max(r, max_abs_diff(m * q_in * minv, expected));
    }
    out.push_back(make_check(std::string(rel.label) + (rel.swaps ? " Q± = Q∓ " : " Q± = Q± ") +
                                 rel.label,
                             r, tol));
  }
  return out;
}

}  // namespace pctlab
