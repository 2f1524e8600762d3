#include "pctlab/equations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pctlab {

namespace {

const GammaSet& rep26() {
  static const GammaSet g = gamma_set("rep26");
  return g;
}

MatrixJet scaled(const ScalarJet& s, const CMatrix& m, int d) { return MatrixJet::scaled(s, m, d); }

MatrixJet constant(const CMatrix& m, int d) { return MatrixJet::constant(m, d); }

double norm2(const MomentumPoint& p, int count) {
  double s = 0.0;
  for (int k = 0; k < count; ++k) s += p[k] * p[k];
  return s;
}

// -σ2 p1 + σ1 p2 + sign·σ3·mass(p); the corrupted variant uses σ2 for p2.
OperatorField two_component(int sign, std::function<ScalarJet(Coords)> mass, int d, bool corrupt) {
  const CMatrix s1 = pauli(1), s2 = pauli(2), s3 = pauli(3);
  return OperatorField(2, d, [=](Coords p) {
    return scaled(p[0], -s2, d) + scaled(p[1], corrupt ? s2 : s1, d) +
           scaled(mass(p), static_cast<double>(sign) * s3, d);
  });
}

// γ0γk p_k over the first `count` components with the given spatial gammas.
MatrixJet alpha_dot_p(Coords p, const std::vector<CMatrix>& spatial, int d) {
  const CMatrix& g0 = rep26()[0];
  MatrixJet acc(4, d);
  for (std::size_t k = 0; k < spatial.size(); ++k) acc += scaled(p[k], g0 * spatial[k], d);
  return acc;
}

std::vector<Claim> weyl_claims() {
  const std::string src = "two-component Weyl equation: P and C broken, CP and T1 kept";
  return {{"P1*P2*P3", false, src}, {"C", false, src}, {"P1*P2*P3*C", true, src}, {"T1", true, src}};
}

std::vector<Claim> chi_plus_claims() {
  const std::string src = "chi_plus verdict list";
  std::vector<Claim> c;
  for (const char* l : {"P3", "C", "P3*C", "P1*P2*P3*C", "P1*C*T1", "P2*C*T2"}) c.push_back({l, true, src});
  for (const char* l : {"P1", "P2", "T1", "T2", "P1*C", "P2*C", "P3*C*T1", "P3*C*T2"})
    c.push_back({l, false, src});
  return c;
}

std::vector<Claim> flat_claims() {
  const std::string src = "flat neutrino verdict list";
  std::vector<Claim> c;
  for (const char* l : {"P1*P2", "C", "P1*P2*C", "P1*C*T1", "P1*C*T2", "P2*C*T1", "P2*C*T2"})
    c.push_back({l, true, src});
  for (const char* l : {"P1", "P2", "T1", "T2", "P1*C", "P2*C", "C*T1", "C*T2"}) c.push_back({l, false, src});
  return c;
}

std::vector<Claim> desitter_claims() {
  const std::string src = "five-dimensional Dirac equation verdict list";
  std::vector<Claim> c{{"T1", true, src}, {"T2*C", true, src}};
  for (const char* l : {"P1", "P2", "P3", "P4", "T2", "C"}) c.push_back({l, false, src});
  return c;
}

std::vector<Claim> kappa_claims() {
  const std::string src = "kappa equations: P(a), T(b) broken, P3 and C kept";
  std::vector<Claim> c;
  for (const char* l : {"P1", "P2", "T1", "T2"}) c.push_back({l, false, src});
  for (const char* l : {"P3", "C"}) c.push_back({l, true, src});
  return c;
}

std::vector<Claim> all_invariant(int d) {
  std::vector<Claim> c;
  const std::string src = "massless Dirac equation: invariant under all reflections";
  const int count = 1 << (d + 2);
  for (int bits = 0; bits < count; ++bits) {
    std::string label;
    for (int k = 0; k < d; ++k)
      if (bits & (1 << k)) label += (label.empty() ? "" : "*") + std::string("P") + std::to_string(k + 1);
    const bool t = bits & (1 << d), cj = bits & (1 << (d + 1));
    const char* extra = t && cj ? "T1" : t ? "T2" : cj ? "C" : nullptr;
    if (extra) label += (label.empty() ? "" : "*") + std::string(extra);
    if (label.empty()) label = "E";
    c.push_back({label, true, src});
  }
  return c;
}

}  // namespace

const std::vector<std::string>& equation_names() {
  static const std::vector<std::string> names{
      "dirac_massless", "weyl_plus",     "weyl_minus",     "chi_4c",        "chi_plus",
      "chi_minus",      "chi_canonical", "phi_diag",       "weyl_canonical", "flat_plus",
      "flat_minus",     "desitter",      "dirac_massive",  "hprime",        "spinless_plus",
      "spinless_minus", "kappa_plus",    "kappa_minus"};
  return names;
}

EquationSpec catalog_equation(const std::string& name, const CatalogParams& params) {
  if (params.mass < 0.0) throw std::invalid_argument("catalog_equation: mass must be >= 0");
  const GammaSet& g = rep26();
  const double m = params.mass;
  const double kappa = params.kappa;
  const std::vector<CMatrix> g123{g[1], g[2], g[3]};
  const std::vector<CMatrix> g12{g[1], g[2]};
  const CMatrix& g0 = g[0];

  EquationSpec eq;
  eq.name = name;
  eq.params = params;
  auto massless = [](const MomentumPoint& p) { return norm2(p, 3); };
  auto massive = [m](const MomentumPoint& p) { return norm2(p, 3) + m * m; };

  if (name == "dirac_massless") {
    eq.dim = 4, eq.d = 3;
    eq.hamiltonian = OperatorField(4, 3, [g123](Coords p) { return alpha_dot_p(p, g123, 3); });
    eq.claims = all_invariant(3);
    eq.dispersion = massless;
    eq.description = "massless Dirac equation, H = γ0γk pk";
  } else if (name == "weyl_plus" || name == "weyl_minus") {
    const double s = name == "weyl_plus" ? 1.0 : -1.0;
    eq.dim = 2, eq.d = 3;
    eq.hamiltonian = OperatorField(2, 3, [s](Coords p) {
      MatrixJet acc(2, 3);
      for (int k = 0; k < 3; ++k) acc += scaled(p[static_cast<std::size_t>(k)], s * pauli(k + 1), 3);
      return acc;
    });
    eq.claims = weyl_claims();
    eq.dispersion = massless;
    eq.description = "Weyl equation, H = ±σ·p";
  } else if (name == "chi_4c") {
    eq.dim = 4, eq.d = 3;
    eq.hamiltonian = OperatorField(4, 3, [g12, g0](Coords p) {
      return alpha_dot_p(p, g12, 3) + scaled(abs_p3(p), g0, 3);
    });
    eq.dispersion = massless;
    eq.description = "U1 image of the massless Dirac equation, H = γ0γa pa + γ0|p3|";
  } else if (name == "chi_plus" || name == "chi_minus") {
    const int s = name == "chi_plus" ? 1 : -1;
    eq.dim = 2, eq.d = 3;
    eq.hamiltonian = two_component(s, [](Coords p) { return abs_p3(p); }, 3, params.corrupt_chi);
    if (s > 0) eq.claims = chi_plus_claims();
    eq.dispersion = massless;
    eq.description = "two-component equation, H = -σ2p1 + σ1p2 ± σ3|p3|";
  } else if (name == "chi_canonical") {
    eq.dim = 2, eq.d = 3;
    eq.hamiltonian = OperatorField::scalar([](Coords p) { return energy3(p); }, pauli(3), 3);
    eq.dispersion = massless;
    eq.description = "V1 image of chi_plus, H = σ3 E";
  } else if (name == "phi_diag") {
    eq.dim = 4, eq.d = 3;
    eq.hamiltonian = OperatorField::scalar([](Coords p) { return energy3(p); }, g0, 3);
    eq.dispersion = massless;
    eq.description = "Foldy-Wouthuysen form, H = γ0 E";
  } else if (name == "weyl_canonical") {
    eq.dim = 2, eq.d = 3;
    eq.hamiltonian = OperatorField::scalar(
        [](Coords p) { return sign_p3(p) * energy3(p); }, pauli(3), 3);
    eq.dispersion = massless;
    eq.description = "canonical Weyl form, H = σ3 e3 E";
  } else if (name == "flat_plus" || name == "flat_minus") {
    const int s = name == "flat_plus" ? 1 : -1;
    eq.dim = 2, eq.d = 2;
    eq.hamiltonian = two_component(s, [m](Coords) { return ScalarJet::constant(m); }, 2, false);
    eq.claims = flat_claims();
    eq.dispersion = [m](const MomentumPoint& p) { return norm2(p, 2) + m * m; };
    eq.description = "flat neutrino on P(1,2), H = -σ2p1 + σ1p2 ± σ3 m";
  } else if (name == "desitter") {
    eq.dim = 4, eq.d = 4;
    // The fourth spatial gamma must square to -1 like γ1..γ3; iγ4 does.
    const std::vector<CMatrix> spatial{g[1], g[2], g[3], kI * g[4]};
    eq.hamiltonian = OperatorField(4, 4, [spatial, g0, kappa](Coords p) {
      return alpha_dot_p(p, spatial, 4) + constant(kappa * g0, 4);
    });
    eq.claims = desitter_claims();
    eq.dispersion = [kappa](const MomentumPoint& p) { return norm2(p, 4) + kappa * kappa; };
    eq.description = "Dirac equation in four spatial dimensions, H = γ0γk pk + γ0κ";
  } else if (name == "dirac_massive") {
    eq.dim = 4, eq.d = 3;
    eq.hamiltonian = OperatorField(4, 3, [g123, g0, m](Coords p) {
      return alpha_dot_p(p, g123, 3) + constant(m * g0, 3);
    });
    eq.dispersion = massive;
    eq.description = "massive Dirac equation, H = γ0γk pk + γ0 m";
  } else if (name == "hprime") {
    eq.dim = 4, eq.d = 3;
    eq.hamiltonian = OperatorField(4, 3, [g12, g0, m](Coords p) {
      return alpha_dot_p(p, g12, 3) + scaled(sqrt(p[2] * p[2] + m * m), g0, 3);
    });
    eq.dispersion = massive;
    eq.description = "V2 image of the massive Dirac equation, H' = γ0γa pa + γ0 q3";
  } else if (name == "spinless_plus" || name == "spinless_minus") {
    const int s = name == "spinless_plus" ? 1 : -1;
    eq.dim = 2, eq.d = 3;
    eq.hamiltonian = two_component(s, [m](Coords p) { return sqrt(p[2] * p[2] + m * m); }, 3, false);
    eq.dispersion = massive;
    eq.description = "spinless two-component pair, H = -σ2p1 + σ1p2 ± σ3 q3";
  } else if (name == "kappa_plus" || name == "kappa_minus") {
    const double s = name == "kappa_plus" ? 1.0 : -1.0;
    eq.dim = 4, eq.d = 3;
    const CMatrix g4 = g[4];
    eq.hamiltonian = OperatorField(4, 3, [g123, g0, g4, kappa, s](Coords p) {
      const double e3 = sign_p3(p);
      return alpha_dot_p(p, g123, 3) -
             constant(kappa * g0 * (identity(4) + s * e3 * g4), 3);
    });
    eq.claims = kappa_claims();
    eq.hermitian = false;
    eq.description = "{γμ p^μ + κ(1 ± e3γ4)}Ψ = 0 in Hamiltonian form γ0[γk pk - κ(1 ± e3γ4)]";
  } else {
    throw std::invalid_argument("catalog_equation: unknown equation '" + name + "'");
  }

  if (eq.hermitian) {
    for (const auto& p : samples_for(eq, 6, 0x5eed))
      if (hermiticity_residual(eq.hamiltonian.eval(p)) > 1e-10)
        throw std::logic_error("catalog_equation: non-Hermitian Hamiltonian for " + name);
  }
  return eq;
}

std::vector<MomentumPoint> samples_for(const EquationSpec& eq, int n, std::uint64_t seed) {
  return sample_momenta(eq.d, n, seed);
}

const std::vector<std::string>& unitary_names() {
  static const std::vector<std::string> names{"U1", "U2", "U2U1", "tU1", "tU2", "tU", "V1", "V", "V2"};
  return names;
}

namespace {

OperatorField u1_closed() {
  const CMatrix g3 = rep26()[3];
  return OperatorField(4, 3, [g3](Coords p) {
    return constant((identity(4) + sign_p3(p) * g3) / std::numbers::sqrt2, 3);
  });
}

OperatorField u1_exponential() {
  const CMatrix s53 = spin_matrix(rep26(), 5, 3).value;
  return OperatorField(4, 3, [s53](Coords p) {
    return expm(constant(0.5 * kI * std::numbers::pi * sign_p3(p) * s53, 3));
  });
}

// (E + mass + γa pa)/√(2E(E + mass)), mass = |p3| (U2) or p3 (tU2).
OperatorField fw_closed(bool signed_p3) {
  const CMatrix g1 = rep26()[1], g2 = rep26()[2];
  return OperatorField(4, 3, [g1, g2, signed_p3](Coords p) {
    const ScalarJet e = energy3(p);
    const ScalarJet mass = signed_p3 ? p[2] : abs_p3(p);
    const ScalarJet norm = reciprocal(sqrt(2.0 * e * (e + mass)));
    return scaled(norm * (e + mass), identity(4), 3) + scaled(norm * p[0], g1, 3) +
           scaled(norm * p[1], g2, 3);
  });
}

// exp{i·G_a p_a/|p_a| · arctan(|p_a|/|p3|)} for generator matrices G_1, G_2.
OperatorField rotation_exponential(const CMatrix& gen1, const CMatrix& gen2) {
  const int dim = static_cast<int>(gen1.rows());
  return OperatorField(dim, 3, [gen1, gen2](Coords p) {
    const ScalarJet t = transverse_norm(p);
    const ScalarJet angle = atan(t / abs_p3(p)) / t;
    const MatrixJet exponent = kI * (scaled(angle * p[0], gen1, 3) + scaled(angle * p[1], gen2, 3));
    return expm(exponent);
  });
}

OperatorField v1_closed() {
  const CMatrix s1 = pauli(1), s2 = pauli(2);
  return OperatorField(2, 3, [s1, s2](Coords p) {
    const ScalarJet e = energy3(p);
    const ScalarJet a = abs_p3(p);
    const ScalarJet norm = reciprocal(sqrt(2.0 * e * (e + a)));
    return scaled(norm * (e + a), identity(2), 3) + scaled(norm * p[0], kI * s1, 3) +
           scaled(norm * p[1], kI * s2, 3);
  });
}

OperatorField v_closed() {
  return OperatorField(2, 3, [](Coords p) {
    const ScalarJet e = energy3(p);
    const ScalarJet a = abs_p3(p);
    const double e3 = sign_p3(p);
    const ScalarJet xi1 = p[0] - e3 * p[1];
    const ScalarJet xi2 = p[1] + e3 * p[0];
    const ScalarJet xi3 = e3 * (e + a);
    const ScalarJet norm = reciprocal(2.0 * sqrt(xi1 * p[0] + xi2 * p[1] + xi3 * p[2]));
    return scaled(norm * (e + a), identity(2), 3) + scaled(norm * xi1, kI * pauli(1), 3) +
           scaled(norm * xi2, kI * pauli(2), 3) + scaled(norm * xi3, kI * pauli(3), 3);
  });
}

OperatorField v2_closed(double m) {
  const CMatrix g3 = rep26()[3];
  return OperatorField(4, 3, [g3, m](Coords p) {
    const ScalarJet q3 = sqrt(p[2] * p[2] + m * m);
    const ScalarJet norm = reciprocal(sqrt(2.0 * q3 * (q3 + m)));
    return scaled(norm * p[2], g3, 3) + scaled(norm * (q3 + m), identity(4), 3);
  });
}

}  // namespace

UnitarySpec catalog_unitary(const std::string& name, const CatalogParams& params) {
  UnitarySpec u;
  u.name = name;
  u.d = 3;
  u.params = params;
  const GammaSet& g = rep26();
  if (name == "U1") {
    u.dim = 4;
    u.closed = u1_closed();
    u.exponential = u1_exponential();
    u.source = "dirac_massless", u.target = "chi_4c";
    u.description = "U1 = (1 + γ3 e3)/√2 = exp{(iπ/2) S53 e3}";
  } else if (name == "U2") {
    u.dim = 4;
    u.closed = fw_closed(false);
    u.exponential = rotation_exponential(spin_matrix(g, 5, 1).value, spin_matrix(g, 5, 2).value);
    u.source = "chi_4c", u.target = "phi_diag";
    u.description = "U2 = (E + |p3| + γa pa)/√(2E(E+|p3|)) = exp{i S5a pa/|pa| arctan(|pa|/|p3|)}";
  } else if (name == "U2U1") {
    u.dim = 4;
    u.closed = fw_closed(false) * u1_closed();
    u.source = "dirac_massless", u.target = "phi_diag";
    u.description = "U2·U1";
  } else if (name == "tU1") {
    u.dim = 4;
    u.closed = OperatorField::constant((identity(4) + g[3]) / std::numbers::sqrt2, 3);
    u.description = "Ũ1 = (1 + γ3)/√2";
  } else if (name == "tU2") {
    u.dim = 4;
    u.closed = fw_closed(true);
    u.positive_p3_only = true;
    u.description = "Ũ2 = (E + p3 + γa pa)/√(2E(E+p3))";
  } else if (name == "tU") {
    u.dim = 4;
    u.closed = fw_closed(true) * OperatorField::constant((identity(4) + g[3]) / std::numbers::sqrt2, 3);
    u.source = "dirac_massless", u.target = "phi_diag";
    u.positive_p3_only = true;
    u.description = "Ũ2·Ũ1";
  } else if (name == "V1") {
    u.dim = 2;
    u.closed = v1_closed();
    u.exponential = rotation_exponential(pauli_spin(2, 3), pauli_spin(3, 1));
    u.source = "chi_plus", u.target = "chi_canonical";
    u.description = "V1 = (E + |p3| + iσa pa)/√(2E(E+|p3|)) = exp{i Sa pa/|pa| arctan(|pa|/|p3|)}";
  } else if (name == "V") {
    u.dim = 2;
    u.closed = v_closed();
    u.source = "weyl_plus", u.target = "weyl_canonical";
    u.description = "V = (E + |p3| + iσk ξk)/(2√(ξ·p))";
  } else if (name == "V2") {
    u.dim = 4;
    u.closed = v2_closed(params.mass);
    u.source = "dirac_massive", u.target = "hprime";
    u.description = "V2 = (γ3 p3 + q3 + m)/√(2q3(q3+m))";
  } else {
    throw std::invalid_argument("catalog_unitary: unknown transformation '" + name + "'");
  }
  return u;
}

CheckList verify_transform(const UnitarySpec& u, const std::vector<MomentumPoint>& samples,
                           double tol) {
  std::vector<MomentumPoint> pts;
  for (const auto& p : samples)
    if (!u.positive_p3_only || p[2] > 0.0) pts.push_back(p);
  if (pts.empty()) throw std::invalid_argument("verify_transform: no admissible samples");

  double unit = 0.0, expo = 0.0, map = 0.0;
  const bool has_map = !u.source.empty();
  std::optional<EquationSpec> src, tgt;
  if (has_map) {
    src = catalog_equation(u.source, u.params);
    tgt = catalog_equation(u.target, u.params);
  }
  for (const auto& p : pts) {
    const CMatrix c = u.closed.eval(p);
    unit = std::max(unit, unitarity_residual(c));
    if (u.exponential) expo = std::max(expo, max_abs_diff(c, u.exponential->eval(p)));
    if (has_map)
      map = std::max(map, max_abs_diff(c * src->hamiltonian.eval(p) * c.adjoint(),
                                       tgt->hamiltonian.eval(p)));
  }
  CheckList out;
  const std::string scope = u.positive_p3_only ? " (p3 > 0)" : "";
  out.push_back(make_check(u.name + " unitary" + scope, unit, 1e-10));
  if (u.exponential)
    out.push_back(make_check(u.name + " exponential = closed form", expo, tol));
  if (has_map)
    out.push_back(make_check(u.name + ": " + u.source + " -> " + u.target + scope, map, tol));
  return out;
}

OperatorField subsidiary_k(double mass) {
  const CMatrix g34 = rep26()[3] * rep26()[4];
  const CMatrix g4 = rep26()[4];
  return OperatorField(4, 3, [g34, g4, mass](Coords p) {
    const ScalarJet inv_q3 = reciprocal(sqrt(p[2] * p[2] + mass * mass));
    return scaled(ScalarJet::constant(mass) * inv_q3, g34, 3) + scaled(p[2] * inv_q3, g4, 3);
  });
}

OperatorField subsidiary_e3(int sign) {
  const CMatrix g4 = rep26()[4];
  return OperatorField(4, 3, [g4, sign](Coords p) {
    return constant(0.5 * (identity(4) + static_cast<double>(sign) * sign_p3(p) * g4), 3);
  });
}

CheckList verify_projectors(const std::vector<MomentumPoint>& samples, const CatalogParams& params,
                            double tol) {
  const GammaSet& g = rep26();
  const CMatrix qp = projector_q(g, +1), qm = projector_q(g, -1);
  const CMatrix one = identity(4);
  CheckList out;
  out.push_back(make_check("Q+^2 = Q+", max_abs_diff(qp * qp, qp), tol));
  out.push_back(make_check("Q-^2 = Q-", max_abs_diff(qm * qm, qm), tol));
  out.push_back(make_check("Q+ Q- = 0", max_abs(qp * qm), tol));
  out.push_back(make_check("Q+ + Q- = 1", max_abs_diff(qp + qm, one), tol));
  out.push_back(make_check("(γ3γ4)^2 = 1", max_abs_diff(g[3] * g[4] * g[3] * g[4], one), tol));

  const EquationSpec chi = catalog_equation("chi_4c", params);
  const EquationSpec chi_p = catalog_equation("chi_plus", params);
  const EquationSpec chi_m = catalog_equation("chi_minus", params);
  const EquationSpec dirac_m = catalog_equation("dirac_massive", params);
  const OperatorField k = subsidiary_k(params.mass);
  const OperatorField sp = subsidiary_e3(+1), sm = subsidiary_e3(-1);

  double comm = 0.0, blocks = 0.0, ksq = 0.0, e3_idem = 0.0, e3_comp = 0.0, e3_orth = 0.0;
  double k_comm = 0.0;
  for (const auto& p : samples) {
    const CMatrix h = chi.hamiltonian.eval(p);
    comm = std::max({comm, max_abs(commutator(qp, h)), max_abs(commutator(qm, h))});
    blocks = std::max({blocks, max_abs_diff(h.topLeftCorner(2, 2), chi_p.hamiltonian.eval(p)),
                       max_abs_diff(h.bottomRightCorner(2, 2), chi_m.hamiltonian.eval(p))});
    const CMatrix kv = k.eval(p);
    ksq = std::max(ksq, max_abs_diff(kv * kv, one));
    const CMatrix half = 0.5 * (one - kv);
    k_comm = std::max(k_comm, max_abs(commutator(half, dirac_m.hamiltonian.eval(p))));
    const CMatrix a = sp.eval(p), b = sm.eval(p);
    e3_idem = std::max({e3_idem, max_abs_diff(a * a, a), max_abs_diff(b * b, b)});
    e3_comp = std::max(e3_comp, max_abs_diff(a + b, one));
    e3_orth = std::max(e3_orth, max_abs(a * b));
  }
  out.push_back(make_check("[Q±, H_chi_4c] = 0", comm, tol));
  out.push_back(make_check("chi_4c Q± blocks = chi_plus / chi_minus", blocks, tol));
  out.push_back(make_check("K^2 = 1, K = (γ3γ4 m + γ4 p3)/q3", ksq, tol));
  out.push_back(make_check("½(1 ± e3γ4) idempotent", e3_idem, tol));
  out.push_back(make_check("½(1 + e3γ4) + ½(1 - e3γ4) = 1", e3_comp, tol));
  out.push_back(make_check("½(1 + e3γ4)·½(1 - e3γ4) = 0", e3_orth, tol));
  out.push_back(make_info("[½(1 - K), H_dirac_massive]", k_comm,
                          "reported only; the condition is imposed on solutions"));
  return out;
}

double dispersion_residual(const EquationSpec& eq, const std::vector<MomentumPoint>& samples) {
  if (!eq.dispersion) throw std::invalid_argument("dispersion_residual: no identity for " + eq.name);
  double r = 0.0;
  for (const auto& p : samples) {
    const CMatrix h = eq.hamiltonian.eval(p);
    r = std::max(r, max_abs_diff(h * h, eq.dispersion(p) * identity(eq.dim)));
  }
  return r;
}

double lambda_consistency_residual(const std::vector<MomentumPoint>& samples) {
  const GammaSet& g = rep26();
  const Complex lambda(0.0, -2.0);
  double r = 0.0;
  for (const auto& p : samples) {
    CMatrix lhs = zeros(4), rhs = zeros(4);
    for (int l = 1; l <= 3; ++l) {
      lhs += lambda * spin_matrix(g, 0, l).value * p[l - 1];
      rhs += g[0] * g[l] * p[l - 1];
    }
    r = std::max(r, max_abs_diff(lhs, rhs));
  }
  return r;
}

}  // namespace pctlab
