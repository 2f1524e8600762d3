#include "pctlab/poincare.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pctlab {

const DiffOp1& GeneratorSet::operator[](const std::string& label) const {
  const auto it = generators.find(label);
  if (it == generators.end())
    throw std::out_of_range("GeneratorSet " + name + ": no generator " + label);
  return it->second;
}

DiffOp1 GeneratorSet::j(int mu, int nu) const {
  if (mu == nu) throw std::invalid_argument("GeneratorSet::j: indices must differ");
  if (mu > nu) return Complex(-1.0) * j(nu, mu);
  return (*this)["J" + std::to_string(mu) + std::to_string(nu)];
}

std::vector<std::string> generator_labels(int d) {
  std::vector<std::string> out{"P0"};
  for (int k = 1; k <= d; ++k) out.push_back("P" + std::to_string(k));
  for (int k = 1; k <= d; ++k)
    for (int l = k + 1; l <= d; ++l) out.push_back("J" + std::to_string(k) + std::to_string(l));
  for (int k = 1; k <= d; ++k) out.push_back("J0" + std::to_string(k));
  return out;
}

const std::vector<std::string>& generator_set_names() {
  static const std::vector<std::string> names{
      "psi", "chi", "phi", "phi_one", "phi_minus_one", "chi2", "chi2_printed", "flat", "weyl"};
  return names;
}

namespace {

using SpinFn = std::function<std::optional<OperatorField>(int k, int l)>;  // 0-based k < l
using BoostFn = std::function<std::optional<OperatorField>(int k)>;

GeneratorSet build_set(std::string name, const OperatorField& h, const SpinFn& spin,
                       const BoostFn& boost_extra) {
  GeneratorSet gs;
  gs.name = std::move(name);
  gs.dim = h.dim();
  gs.d = h.momentum_dim();
  gs.labels = generator_labels(gs.d);
  const int n = gs.dim, d = gs.d;
  const CMatrix one = identity(n);

  gs.generators["P0"] = DiffOp1::multiplication(h);
  for (int k = 0; k < d; ++k)
    gs.generators["P" + std::to_string(k + 1)] = DiffOp1::momentum(k, n, d);
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) {
      DiffOp1 g = orbital(k, l, n, d);
      if (auto s = spin(k, l)) g = g + DiffOp1::multiplication(*s);
      gs.generators["J" + std::to_string(k + 1) + std::to_string(l + 1)] = g;
    }
  for (int k = 0; k < d; ++k) {
    DiffOp1 g = DiffOp1::time_times(OperatorField::scalar(
                    [k](Coords p) { return p[static_cast<std::size_t>(k)]; }, one, d)) +
                minus_half_anticommutator(k, h);
    if (auto e = boost_extra(k)) g = g + DiffOp1::multiplication(*e);
    gs.generators["J0" + std::to_string(k + 1)] = g;
  }
  return gs;
}

const BoostFn kNoBoostExtra = [](int) { return std::optional<OperatorField>{}; };

SpinFn gamma_spin(const GammaSet& g, int d) {
  return [g, d](int k, int l) -> std::optional<OperatorField> {
    return OperatorField::constant(spin_matrix(g, k + 1, l + 1).value, d);
  };
}

ScalarJet e3_jet(Coords p) { return ScalarJet::constant(sign_p3(p)); }

// p_b/(E + |p3|) for the transverse partner b of a.
ScalarJet transverse_ratio(Coords p, int b) {
  return p[static_cast<std::size_t>(b)] / (energy3(p) + abs_p3(p));
}

GeneratorSet phi_set(const std::string& name, const CMatrix& g0sub) {
  const GammaSet g = gamma_set("rep26");
  const OperatorField h = OperatorField::scalar([](Coords p) { return energy3(p); }, g0sub, 3);
  auto sab = [&g](int a, int b) { return spin_matrix(g, a + 1, b + 1).value; };
  SpinFn spin = [sab](int k, int l) -> std::optional<OperatorField> {
    if (l < 2) return OperatorField::constant(sab(k, l), 3);
    const int b = 1 - k;
    return OperatorField::scalar([b](Coords p) { return e3_jet(p) * transverse_ratio(p, b); },
                                 -sab(k, b), 3);
  };
  BoostFn extra = [sab, g0sub](int k) -> std::optional<OperatorField> {
    if (k == 2) return std::nullopt;
    const int b = 1 - k;
    return OperatorField::scalar([b](Coords p) { return transverse_ratio(p, b); },
                                 CMatrix(-g0sub * sab(k, b)), 3);
  };
  return build_set(name, h, spin, extra);
}

GeneratorSet upper_set(GeneratorSet gs, std::string name, int n) {
  gs.name = std::move(name);
  gs.dim = n;
  for (auto& [label, op] : gs.generators) {
    op.a = upper_block(op.a, n);
    op.x0 = upper_block(op.x0, n);
    for (auto& bk : op.b) bk = upper_block(bk, n);
  }
  return gs;
}

}  // namespace

GeneratorSet generator_set(const std::string& name, const GeneratorParams& params) {
  if (name == "psi") {
    const GammaSet g = gamma_set("rep26");
    CatalogParams cp = params.catalog;
    return build_set(name, catalog_equation("dirac_massless", cp).hamiltonian, gamma_spin(g, 3),
                     kNoBoostExtra);
  }
  if (name == "weyl") {
    const GammaSet g = gamma_set("weyl");
    const OperatorField h(4, 3, [g](Coords p) {
      MatrixJet acc(4, 3);
      for (int k = 0; k < 3; ++k)
        acc += MatrixJet::scaled(p[static_cast<std::size_t>(k)], g[0] * g[k + 1], 3);
      return acc;
    });
    return upper_set(build_set("weyl_full", h, gamma_spin(g, 3), kNoBoostExtra), name, 2);
  }
  if (name == "chi") {
    const GammaSet g = gamma_set("rep26");
    const EquationSpec eq = catalog_equation("chi_4c", params.catalog);
    SpinFn spin = [g](int k, int l) -> std::optional<OperatorField> {
      if (l < 2) return OperatorField::constant(spin_matrix(g, k + 1, l + 1).value, 3);
      const CMatrix s = spin_matrix(g, k + 1, 3).value * g[3];
      return OperatorField::scalar(e3_jet, CMatrix(-s), 3);
    };
    return build_set(name, eq.hamiltonian, spin, kNoBoostExtra);
  }
  if (name == "phi") return phi_set(name, gamma_set("rep26")[0]);
  if (name == "phi_one") return phi_set(name, identity(4));
  if (name == "phi_minus_one") return phi_set(name, -identity(4));
  if (name == "chi2" || name == "chi2_printed") {
    const EquationSpec eq = catalog_equation("chi_plus", params.catalog);
    // S_ab → pauli_spin(a, b). On the χ+ block S_a3 γ3 = +½σ_a; the printed
    // variant keeps -½σ_a, which is the χ- block.
    const double s_a3 = name == "chi2" ? 0.5 : -0.5;
    SpinFn spin = [s_a3](int k, int l) -> std::optional<OperatorField> {
      if (l < 2) return OperatorField::constant(pauli_spin(k + 1, l + 1), 3);
      return OperatorField::scalar(e3_jet, CMatrix(-s_a3 * pauli(k + 1)), 3);
    };
    return build_set(name, eq.hamiltonian, spin, kNoBoostExtra);
  }
  if (name == "flat") {
    CatalogParams cp = params.catalog;
    cp.mass = params.mass;
    const EquationSpec eq = catalog_equation("flat_plus", cp);
    SpinFn spin = [](int, int) -> std::optional<OperatorField> {
      return OperatorField::constant(pauli_spin(1, 2), 2);
    };
    return build_set(name, eq.hamiltonian, spin, kNoBoostExtra);
  }
  throw std::invalid_argument("generator_set: unknown set '" + name + "'");
}

GeneratorSet orbital_scalar_set(int d, double mass) {
  const double m2 = mass * mass;
  const OperatorField h = OperatorField::scalar(
      [m2](Coords p) {
        ScalarJet s = ScalarJet::constant(m2);
        for (const auto& c : p) s = s + c * c;
        return sqrt(s);
      },
      identity(1), d);
  SpinFn none = [](int, int) { return std::optional<OperatorField>{}; };
  return build_set("orbital", h, none, kNoBoostExtra);
}

namespace {

using Evaluated = std::vector<DiffOpAt>;

Evaluated evaluate_all(const GeneratorSet& gs, const std::vector<std::string>& labels,
                       const MomentumPoint& p, double x0) {
  Evaluated out;
  for (const auto& l : labels) out.push_back(evaluate(gs[l], p, x0));
  return out;
}

CVector flatten(const DiffOpAt& g) {
  const Eigen::Index n = g.a.size();
  CVector v(n * static_cast<Eigen::Index>(1 + g.b.size()));
  v.head(n) = Eigen::Map<const CVector>(g.a.data(), n);
  for (std::size_t k = 0; k < g.b.size(); ++k)
    v.segment(n * static_cast<Eigen::Index>(k + 1), n) = Eigen::Map<const CVector>(g.b[k].data(), n);
  return v;
}

}  // namespace

StructureConstants calibrate_structure_constants(int d, double mass, std::uint64_t seed) {
  const GeneratorSet gs = orbital_scalar_set(d, mass);
  StructureConstants sc;
  sc.d = d;
  sc.labels = gs.labels;
  const auto points = sample_momenta(d, 6, seed);
  const std::vector<double> x0s{0.0, 1.37};
  const auto nl = static_cast<int>(sc.labels.size());

  std::vector<Evaluated> basis;
  for (const auto& p : points)
    for (double x0 : x0s) basis.push_back(evaluate_all(gs, sc.labels, p, x0));
  const Eigen::Index rows_per = flatten(basis.front().front()).size();
  CMatrix design(rows_per * static_cast<Eigen::Index>(basis.size()), nl);
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (int c = 0; c < nl; ++c)
      design.block(rows_per * static_cast<Eigen::Index>(s), c, rows_per, 1) =
          flatten(basis[s][static_cast<std::size_t>(c)]);
  const auto solver = design.completeOrthogonalDecomposition();

  for (int a = 0; a < nl; ++a)
    for (int b = a + 1; b < nl; ++b) {
      CVector rhs(design.rows());
      std::size_t s = 0;
      for (const auto& p : points)
        for (double x0 : x0s) {
          const auto c = diffop_commutator(gs[sc.labels[static_cast<std::size_t>(a)]],
                                           gs[sc.labels[static_cast<std::size_t>(b)]], p, x0);
          rhs.segment(rows_per * static_cast<Eigen::Index>(s++), rows_per) = flatten(c.first_order);
        }
      CVector coef = solver.solve(rhs);
      for (auto& z : coef) z = Complex(std::round(z.real()), std::round(z.imag()));
      const double r = (design * coef - rhs).cwiseAbs().maxCoeff();
      sc.fit_residual = std::max(sc.fit_residual, r);
      if (r > 1e-9) {
        std::ostringstream msg;
        msg << "calibrate_structure_constants: [" << sc.labels[static_cast<std::size_t>(a)] << ", "
            << sc.labels[static_cast<std::size_t>(b)] << "] is not an integer combination (residual "
            << r << ")";
        throw NumericError(msg.str());
      }
      sc.c[{a, b}] = std::vector<Complex>(coef.data(), coef.data() + coef.size());
    }
  return sc;
}

AlgebraReport algebra_residual(const GeneratorSet& gs, const StructureConstants& sc,
                               const std::vector<MomentumPoint>& samples,
                               const std::vector<double>& x0_values) {
  if (gs.d != sc.d) throw std::invalid_argument("algebra_residual: dimension mismatch");
  AlgebraReport rep;
  for (const auto& p : samples)
    for (double x0 : x0_values) {
      const Evaluated ev = evaluate_all(gs, sc.labels, p, x0);
      for (const auto& [ab, coef] : sc.c) {
        const auto& la = sc.labels[static_cast<std::size_t>(ab.first)];
        const auto& lb = sc.labels[static_cast<std::size_t>(ab.second)];
        const CommutatorAt c = diffop_commutator(gs[la], gs[lb], p, x0);
        DiffOpAt expected = Complex(0.0) * ev.front();
        for (std::size_t i = 0; i < coef.size(); ++i)
          if (coef[i] != Complex(0.0)) expected = expected + coef[i] * ev[i];
        const double r = max_abs_diff(c.first_order, expected);
        if (r > rep.residual) {
          rep.residual = r;
          rep.worst_pair = "[" + la + ", " + lb + "]";
        }
        rep.second_order = std::max(rep.second_order, c.second_order_residual);
      }
    }
  return rep;
}

AlgebraReport algebra_residual(const GeneratorSet& gs, const std::vector<MomentumPoint>& samples,
                               const std::vector<double>& x0_values, double mass) {
  const StructureConstants sc = calibrate_structure_constants(gs.d, gs.d == 3 ? 0.0 : mass);
  return algebra_residual(gs, sc, samples, x0_values);
}

GeneratorSet conjugate_set(const GeneratorSet& gs, const OperatorField& u, std::string name) {
  GeneratorSet out = gs;
  out.name = std::move(name);
  const OperatorField ud = adjoint(u);
  for (auto& [label, op] : out.generators) op = conjugate_by_unitary(ud, op);
  return out;
}

double covariance_residual(const GeneratorSet& a, const GeneratorSet& b,
                           const std::vector<MomentumPoint>& samples,
                           const std::vector<double>& x0_values) {
  double r = 0.0;
  for (const auto& label : a.labels)
    for (const auto& p : samples)
      for (double x0 : x0_values)
        r = std::max(r, max_abs_diff(evaluate(a[label], p, x0), evaluate(b[label], p, x0)));
  return r;
}

OperatorField helicity_field(const GeneratorSet& gs) {
  if (gs.d != 3) throw std::invalid_argument("helicity_field: needs three momentum components");
  const CMatrix one = identity(gs.dim);
  auto ratio = [&one](int k) {
    return OperatorField::scalar(
        [k](Coords p) { return p[static_cast<std::size_t>(k)] / energy3(p); }, one, 3);
  };
  const DiffOp1 h = ratio(0) * gs.j(2, 3) + ratio(1) * gs.j(3, 1) + ratio(2) * gs.j(1, 2);
  for (const auto& p : sample_momenta(3, 4, 0x4e11))
    for (const auto& bk : h.b)
      if (max_abs(bk.eval(p)) > 1e-10) throw NumericError("not a scalar helicity");
  return h.a;
}

std::string IrrepLabel::str() const {
  std::ostringstream os;
  os << "(" << (energy_sign > 0 ? "+" : "-") << ", " << (helicity > 0 ? "+" : "-")
     << std::abs(helicity * 2.0) << "/2)";
  return os.str();
}

IrrepContent irrep_content(const OperatorField& hamiltonian, const OperatorField& helicity,
                           const std::vector<MomentumPoint>& samples) {
  std::optional<IrrepContent> first;
  for (const auto& p : samples) {
    const CMatrix hm = hamiltonian.eval(p);
    const CMatrix hel = helicity.eval(p);
    const double scale = std::max(1.0, max_abs(hm));
    if (hermiticity_residual(hm) > 1e-9 * scale) throw NumericError("non-Hermitian Hamiltonian");
    if (max_abs(commutator(hm, hel)) > 1e-8 * scale)
      throw NumericError("helicity does not commute with H");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (hm + hm.adjoint()));
    IrrepContent content;
    for (int sign : {-1, +1}) {
      std::vector<Eigen::Index> cols;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()(i);
        if (std::abs(ev) < 1e-8 * scale) throw NumericError("zero energy eigenvalue");
        if ((ev > 0) == (sign > 0)) cols.push_back(i);
      }
      if (cols.empty()) continue;
      CMatrix v(hm.rows(), static_cast<Eigen::Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c)
        v.col(static_cast<Eigen::Index>(c)) = es.eigenvectors().col(cols[c]);
      const CMatrix sub = v.adjoint() * hel * v;
      Eigen::SelfAdjointEigenSolver<CMatrix> hs(0.5 * (sub + sub.adjoint()));
      for (Eigen::Index i = 0; i < hs.eigenvalues().size(); ++i) {
        const double twice = 2.0 * hs.eigenvalues()(i);
        if (std::abs(twice - std::round(twice)) > 1e-8)
          throw NumericError("helicity eigenvalue is not a half-integer");
        content.push_back({sign, std::round(twice) / 2.0});
      }
    }
    std::sort(content.begin(), content.end());
    if (!first) first = content;
    else if (*first != content) throw NumericError("content not invariant");
  }
  if (!first) throw std::invalid_argument("irrep_content: no samples");
  return *first;
}

IrrepContent irrep_content(const EquationSpec& eq, const GeneratorSet& gs,
                           const std::vector<MomentumPoint>& samples) {
  return irrep_content(eq.hamiltonian, helicity_field(gs), samples);
}

CheckList verify_poincare(int n_samples, std::uint64_t seed, double tol) {
  CheckList out;
  const auto samples = sample_momenta(3, n_samples, seed);
  const StructureConstants sc3 = calibrate_structure_constants(3, 0.0);
  out.push_back(make_check("structure constants d=3 fit", sc3.fit_residual, 1e-10));

  for (const std::string name : {"psi", "chi", "phi", "phi_one", "phi_minus_one", "chi2", "weyl"}) {
    const GeneratorSet gs = generator_set(name);
    const AlgebraReport r = algebra_residual(gs, sc3, samples);
    out.push_back(make_check("closure " + name, r.residual, tol, r.worst_pair));
    out.push_back(make_check("second order " + name, r.second_order, 1e-10));
  }
  {
    const GeneratorParams gp;
    const GeneratorSet flat = generator_set("flat", gp);
    const StructureConstants sc2 = calibrate_structure_constants(2, gp.mass);
    const AlgebraReport r = algebra_residual(flat, sc2, sample_momenta(2, n_samples, seed));
    out.push_back(make_check("closure flat (P(1,2))", r.residual, tol, r.worst_pair));
    out.push_back(make_check("second order flat", r.second_order, 1e-10));
  }

  {
    const AlgebraReport r = algebra_residual(generator_set("chi2_printed"), sc3, samples);
    out.push_back(make_info("closure chi2_printed (S_a3 γ3 → -½σ_a)", r.residual, r.worst_pair));
  }

  const GeneratorSet chi = generator_set("chi");
  out.push_back(make_check("chi2 = Q+ block of chi",
                           covariance_residual(generator_set("chi2"), upper_set(chi, "chi_upper", 2),
                                               samples),
                           tol));
  const GeneratorSet phi = generator_set("phi");
  const GeneratorSet psi = generator_set("psi");
  out.push_back(make_check("U2 chi -> phi member-wise",
                           covariance_residual(conjugate_set(chi, catalog_unitary("U2").closed, "U2 chi"),
                                               phi, samples),
                           tol));
  out.push_back(make_check("U1 psi -> chi member-wise",
                           covariance_residual(conjugate_set(psi, catalog_unitary("U1").closed, "U1 psi"),
                                               chi, samples),
                           tol));

  const OperatorField h = helicity_field(psi);
  const OperatorField hamiltonian = psi["P0"].a;
  double herm = 0.0, comm = 0.0, square = 0.0;
  for (const auto& p : samples) {
    const CMatrix hm = h.eval(p);
    herm = std::max(herm, hermiticity_residual(hm));
    comm = std::max(comm, max_abs(commutator(hm, hamiltonian.eval(p))));
    square = std::max(square, max_abs_diff(hm * hm, 0.25 * identity(4)));
  }
  out.push_back(make_check("helicity psi Hermitian", herm, 1e-10));
  out.push_back(make_check("helicity psi commutes with H", comm, 1e-10));
  out.push_back(make_check("helicity psi squared = 1/4", square, 1e-10));
  return out;
}

}  // namespace pctlab
