#include "pctlab/report.hpp"

#include "pctlab/position.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pctlab {

using json = nlohmann::ordered_json;

SolveOptions RunConfig::solve_options() const {
  SolveOptions o;
  o.n_fit = samples;
  o.n_holdout = holdout;
  o.seed = seed;
  return o;
}

namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write(std::ostringstream& os, const json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::number_float:
      os << number(j.get<double>());
      return;
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{" << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << "," << nl;
        first = false;
        os << pad << json(it.key()).dump() << (indent > 0 ? ": " : ":");
        write(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Short numeric rows stay on one line.
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_number(); });
      if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write(os, j[i], indent, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[" << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << "," << nl;
        os << pad;
        write(os, j[i], indent, depth + 1);
      }
      os << nl << close_pad << "]";
      return;
    }
    default:
      os << j.dump();
  }
}

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

std::string dump_json(const json& j, int indent) {
  std::ostringstream os;
  write(os, j, indent, 0);
  return os.str();
}

json to_json(const ClassificationReport& rep) {
  json elements = json::array();
  for (const auto& v : rep.verdicts) {
    json e;
    e["label"] = v.element.label();
    e["invariant"] = v.result.invariant;
    e["residual"] = v.result.intertwiner ? v.result.intertwiner->holdout_residual : v.result.certificate;
    e["certificate"] = v.result.certificate;
    e["nullity"] = v.result.nullity;
    e["matrix"] = v.result.intertwiner ? matrix_json(v.result.intertwiner->unitary_rep) : json(nullptr);
    elements.push_back(std::move(e));
  }
  json claims = json::array();
  for (const auto& c : rep.claims)
    claims.push_back({{"label", c.claim.label},
                      {"element", c.canonical},
                      {"claimed_invariant", c.claim.invariant},
                      {"observed_invariant", c.observed},
                      {"agrees", c.agrees}});
  json out;
  out["equation"] = rep.equation;
  out["elements"] = std::move(elements);
  out["claims"] = std::move(claims);
  out["agreement"] = rep.agreement;
  out["coherent"] = rep.coherent;
  return out;
}

json to_json(const CheckList& checks) {
  json arr = json::array();
  for (const auto& c : checks) {
    json e{{"name", c.name},
           {"residual", c.residual},
           {"passed", c.passed},
           {"informational", c.informational}};
    e["tol"] = c.informational ? json(nullptr) : json(c.tol);
    if (!c.note.empty()) e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  return json{{"checks", arr}, {"passed", all_passed(checks)}};
}

std::string to_markdown(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "## " << rep.equation << "\n\n";
  os << "| element | invariant | residual | certificate | nullity |\n";
  os << "|---|---|---|---|---|\n";
  for (const auto& v : rep.verdicts) {
    const double res = v.result.intertwiner ? v.result.intertwiner->holdout_residual : v.result.certificate;
    os << "| " << v.element.label() << " | " << (v.result.invariant ? "yes" : "no") << " | "
       << sci(res) << " | " << sci(v.result.certificate) << " | " << v.result.nullity << " |\n";
  }
  if (!rep.claims.empty()) {
    os << "\n| claim | element | claimed | observed | agrees |\n|---|---|---|---|---|\n";
    for (const auto& c : rep.claims)
      os << "| " << c.claim.label << " | " << c.canonical << " | "
         << (c.claim.invariant ? "invariant" : "non-invariant") << " | "
         << (c.observed ? "invariant" : "non-invariant") << " | " << (c.agrees ? "yes" : "NO")
         << " |\n";
  }
  os << "\nagreement: " << (rep.agreement ? "true" : "false")
     << ", group coherence: " << (rep.coherent ? "true" : "false") << "\n";
  return os.str();
}

std::string to_markdown(const CheckList& checks, const std::string& title) {
  std::ostringstream os;
  os << "## " << title << "\n\n| check | residual | tol | status |\n|---|---|---|---|\n";
  for (const auto& c : checks)
    os << "| " << c.name << " | " << sci(c.residual) << " | " << (c.informational ? "-" : sci(c.tol))
       << " | " << (c.informational ? "info" : c.passed ? "pass" : "FAIL")
       << (c.note.empty() ? "" : " (" + c.note + ")") << " |\n";
  os << "\n" << (all_passed(checks) ? "all checks passed" : "FAILURES present") << "\n";
  return os.str();
}

std::string content_string(const IrrepContent& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? ", " : "") + c[i].str();
  return out + "}";
}

CheckList content_checks(const RunConfig& cfg) {
  CheckList out;
  const auto samples = sample_momenta(3, cfg.samples, cfg.seed);
  const auto more = sample_momenta(3, cfg.samples, cfg.seed + 1);
  auto mismatch = [](bool ok) { return ok ? 0.0 : 1.0; };

  const GeneratorSet psi = generator_set("psi");
  const EquationSpec dirac = catalog_equation("dirac_massless");
  const IrrepContent dc = irrep_content(dirac, psi, samples);
  const IrrepContent expected{{-1, -0.5}, {-1, 0.5}, {1, -0.5}, {1, 0.5}};
  out.push_back(make_check("content dirac_massless = four labels", mismatch(dc == expected), 0.0,
                           content_string(dc)));
  out.push_back(make_check("content dirac_massless sample-invariant",
                           mismatch(irrep_content(dirac, psi, more) == dc), 0.0));

  const GeneratorSet weyl = generator_set("weyl");
  const IrrepContent wc = irrep_content(catalog_equation("weyl_plus"), weyl, samples);
  const IrrepContent wexp{{-1, -0.5}, {1, 0.5}};
  out.push_back(make_check("content weyl_plus = two labels", mismatch(wc == wexp), 0.0,
                           content_string(wc)));

  struct Conj {
    const char* unitary;
    const GeneratorSet* set;
    const char* target;
    IrrepContent reference;
  };
  const Conj conj[] = {{"U1", &psi, "chi_4c", dc},
                       {"U2U1", &psi, "phi_diag", dc},
                       {"V", &weyl, "weyl_canonical", wc}};
  for (const auto& c : conj) {
    const GeneratorSet g = conjugate_set(*c.set, catalog_unitary(c.unitary).closed, c.unitary);
    const IrrepContent ic = irrep_content(catalog_equation(c.target).hamiltonian, helicity_field(g),
                                          samples);
    out.push_back(make_check(std::string("content invariant under ") + c.unitary,
                             mismatch(ic == c.reference), 0.0, content_string(ic)));
  }

  // The χ+ content is reported per half-space: it differs between p3 > 0 and p3 < 0.
  const EquationSpec chi_plus = catalog_equation("chi_plus");
  const OperatorField chi2_helicity = helicity_field(generator_set("chi2"));
  for (int sign : {+1, -1}) {
    std::vector<MomentumPoint> half;
    for (const auto& p : samples)
      if ((p[2] > 0) == (sign > 0)) half.push_back(p);
    const std::string label = std::string("content chi_plus (chi2 set), p3 ") + (sign > 0 ? "> 0" : "< 0");
    try {
      out.push_back(make_info(label, 0.0, content_string(irrep_content(chi_plus.hamiltonian, chi2_helicity, half))));
    } catch (const NumericError& e) {
      out.push_back(make_info(label, 1.0, e.what()));
    }
  }
  return out;
}

CheckList dispersion_checks(const RunConfig& cfg) {
  CheckList out;
  for (const auto& name : equation_names()) {
    const EquationSpec eq = catalog_equation(name, cfg.catalog());
    if (!eq.dispersion) continue;
    out.push_back(make_check("H^2 identity " + name,
                             dispersion_residual(eq, sample_momenta(eq.d, cfg.samples, cfg.seed)),
                             1e-10));
  }
  out.push_back(make_check("lambda = -2i: λ S_0l p_l = γ0γl p_l",
                           lambda_consistency_residual(sample_momenta(3, cfg.samples, cfg.seed)),
                           1e-12));
  return out;
}

CheckList verify_all(const RunConfig& cfg) {
  CheckList out;
  for (const std::string name : {"rep26", "weyl"}) {
    const CliffordReport r = verify_clifford(gamma_set(name));
    out.push_back(make_check("Clifford relations " + name, r.residual, 1e-12));
  }
  const auto samples = sample_momenta(3, cfg.samples, cfg.seed);
  for (const auto& name : unitary_names())
    append(out, verify_transform(catalog_unitary(name, cfg.catalog()), samples, cfg.tol));
  append(out, verify_projectors(samples, cfg.catalog(), cfg.tol));
  append(out, verify_projection_relations(cfg.solve_options(), cfg.tol));
  append(out, verify_poincare(8, cfg.seed, 1e-8));
  for (const auto& name : position_names()) append(out, verify_position(name, samples, cfg.tol));
  append(out, content_checks(cfg));
  append(out, dispersion_checks(cfg));
  return out;
}

}  // namespace pctlab
