// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include "pctlab/position.hpp"
#include "pctlab/report.hpp"
#include "search_oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

namespace {

using namespace pctlab;

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// Fails on the first failing non-informational check and names it.
Outcome from_checks(const CheckList& checks) {
  Outcome o;
  double worst = 0.0;
  for (const auto& c : checks) {
    if (c.informational) continue;
    if (!c.passed) {
      o.passed = false;
      o.detail += (o.detail.empty() ? "" : "; ") + c.name + " residual " + sci(c.residual);
    } else if (c.tol > 0.0) {
      worst = std::max(worst, c.residual / c.tol);
    }
  }
  if (o.passed) o.detail = std::to_string(checks.size()) + " checks, worst residual/tol " + sci(worst);
  return o;
}

Outcome clifford() {
  CheckList checks;
  for (const std::string name : {"rep26", "weyl"})
    checks.push_back(make_check(name, verify_clifford(gamma_set(name)).residual, 1e-12));
  return from_checks(checks);
}

Outcome transformations() {
  const auto samples = sample_momenta(3, 12, kSeed);
  bool plus = false, minus = false;
  for (const auto& p : samples) (p[2] > 0 ? plus : minus) = true;
  CheckList checks;
  checks.push_back(make_check("both signs of p3 sampled", plus && minus ? 0.0 : 1.0, 0.0));
  for (const std::string name : {"U1", "U2", "V1", "V", "V2"})
    append(checks, verify_transform(catalog_unitary(name), samples, 1e-9));
  for (const auto& name : unitary_names()) {
    const UnitarySpec u = catalog_unitary(name);
    double unit = 0.0;
    for (const auto& p : samples)
      if (!u.positive_p3_only || p[2] > 0) unit = std::max(unit, unitarity_residual(u.closed.eval(p)));
    checks.push_back(make_check(name + " unitary", unit, 1e-10));
  }
  for (const std::string name : {"U1", "U2", "V1"})
    if (!catalog_unitary(name).exponential) checks.push_back(make_check(name + " has exponential form", 1.0, 0.0));
  return from_checks(checks);
}

struct Expected {
  std::string equation;
  std::vector<std::string> invariant;
  std::vector<std::string> non_invariant;
  bool all_invariant = false;
};

Outcome classification() {
  const std::vector<Expected> table{
      {"weyl_plus", {"C*P1*P2*P3", "T1"}, {"P1*P2*P3", "C"}},
      {"chi_plus",
       {"P3", "C", "P3*C", "P1*P2*P3*C", "P1*C*T1", "P2*C*T2"},
       {"P1", "P2", "T1", "T2", "P1*C", "P2*C", "P3*C*T1", "P3*C*T2"}},
      {"dirac_massless", {}, {}, true},
      {"flat_plus",
       {"P1*P2", "C", "P1*P2*C", "P1*C*T1", "P1*C*T2", "P2*C*T1", "P2*C*T2"},
       {"P1", "P2", "T1", "T2", "P1*C", "P2*C", "C*T1", "C*T2"}},
      {"flat_minus",
       {"P1*P2", "C", "P1*P2*C", "P1*C*T1", "P1*C*T2", "P2*C*T1", "P2*C*T2"},
       {"P1", "P2", "T1", "T2", "P1*C", "P2*C", "C*T1", "C*T2"}},
      {"desitter", {"T1", "T2*C"}, {"P1", "P2", "P3", "P4", "T2", "C"}},
  };
  Outcome o;
  int verdicts = 0;
  double worst_holdout = 0.0, min_certificate = INFINITY;
  for (const auto& e : table) {
    const EquationSpec eq = catalog_equation(e.equation);
    const ClassificationReport rep = classify_equation(eq);
    auto fail = [&](const std::string& msg) {
      o.passed = false;
      o.detail += (o.detail.empty() ? "" : "; ") + e.equation + ": " + msg;
    };
    // Every verdict must be certified in its own direction.
    for (const auto& v : rep.verdicts) {
      if (v.result.invariant) {
        const double h = v.result.intertwiner->holdout_residual;
        worst_holdout = std::max(worst_holdout, h);
        if (!(h <= 1e-7)) fail(v.element.label() + " holdout " + sci(h));
      } else {
        min_certificate = std::min(min_certificate, v.result.certificate);
        if (!(v.result.certificate > 1e-4)) fail(v.element.label() + " certificate " + sci(v.result.certificate));
      }
    }
    auto expect = [&](const std::string& label, bool inv) {
      ++verdicts;
      const SymmetryElement g = SymmetryElement::parse(label, eq.d);
      if (rep.verdict(g.label()).result.invariant != inv)
        fail(label + (inv ? " should be invariant" : " should be non-invariant"));
    };
    for (const auto& l : e.invariant) expect(l, true);
    for (const auto& l : e.non_invariant) expect(l, false);
    if (e.all_invariant) {
      if (rep.verdicts.size() != 32) fail("expected 32 elements");
      for (const auto& v : rep.verdicts) expect(v.element.label(), true);
    }
  }
  if (o.passed)
    o.detail = std::to_string(verdicts) + " verdicts, worst holdout " + sci(worst_holdout) +
               ", smallest non-invariant certificate " + sci(min_certificate);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int cases = 0, invariant = 0;
  double worst_invariant = 0.0, best_non_invariant = INFINITY;
  std::uint64_t stream = 0;
  for (const auto& name : equation_names()) {
    const EquationSpec eq = catalog_equation(name);
    if (eq.dim != 2) continue;
    const auto points = samples_for(eq, 6, kSeed + 1000);
    for (const auto& g : SymmetryElement::all(eq.d)) {
      const bool solver = solve_intertwiner(eq, g).invariant;
      const auto r = oracle::random_search(oracle::make_problem(eq, g, points), kSeed + stream++);
      const bool found = r.best < oracle::kOracleThreshold;
      ++cases;
      if (solver) {
        ++invariant;
        worst_invariant = std::max(worst_invariant, r.best);
      } else {
        best_non_invariant = std::min(best_non_invariant, r.best);
      }
      if (found != solver) {
        o.passed = false;
        o.detail += (o.detail.empty() ? "" : "; ") + name + " " + g.label() + " solver " +
                    (solver ? "invariant" : "non-invariant") + ", oracle best " + sci(r.best);
      }
    }
  }
  if (o.passed)
    o.detail = std::to_string(cases) + " cases (" + std::to_string(invariant) +
               " invariant), oracle worst on invariant " + sci(worst_invariant) +
               ", best on non-invariant " + sci(best_non_invariant);
  return o;
}

Outcome projectors() {
  CheckList checks = verify_projectors(sample_momenta(3, 12, kSeed), {}, 1e-9);
  append(checks, verify_projection_relations({}, 1e-9));
  return from_checks(checks);
}

Outcome poincare() {
  const auto samples = sample_momenta(3, 8, kSeed);
  const StructureConstants sc = calibrate_structure_constants(3, 0.0);
  CheckList checks{make_check("structure constants fit", sc.fit_residual, 1e-10)};
  for (const std::string name : {"psi", "chi", "phi", "phi_one", "phi_minus_one", "chi2"}) {
    const AlgebraReport r = algebra_residual(generator_set(name), sc, samples, {0.0, 1.37});
    checks.push_back(make_check("closure " + name, r.residual, 1e-8, r.worst_pair));
    checks.push_back(make_check("second order " + name, r.second_order, 1e-10));
  }
  const GeneratorSet moved = conjugate_set(generator_set("chi"), catalog_unitary("U2").closed, "U2 chi");
  checks.push_back(make_check("U2 chi -> phi", covariance_residual(moved, generator_set("phi"), samples), 1e-8));
  return from_checks(checks);
}

Outcome positions() {
  CheckList checks;
  for (const auto& name : position_names())
    append(checks, verify_position(name, sample_momenta(3, 12, kSeed), 1e-9, 1e-10));
  return from_checks(checks);
}

Outcome content() {
  RunConfig cfg;
  cfg.seed = kSeed;
  return from_checks(content_checks(cfg));
}

Outcome dispersion() {
  RunConfig cfg;
  cfg.seed = kSeed;
  CheckList checks = dispersion_checks(cfg);
  // Every catalog equation with a scalar H² identity must be covered.
  int expected = 0;
  for (const auto& name : equation_names())
    if (catalog_equation(name).dispersion) ++expected;
  checks.push_back(make_check("dispersion coverage", expected + 1 == static_cast<int>(checks.size()) ? 0.0 : 1.0, 0.0));
  return from_checks(checks);
}

Outcome negative_control() {
  CatalogParams bad;
  bad.corrupt_chi = true;
  const ClassificationReport clean = classify_equation(catalog_equation("chi_plus"));
  const ClassificationReport dirty = classify_equation(catalog_equation("chi_plus", bad));
  int flips = 0;
  for (std::size_t i = 0; i < clean.verdicts.size(); ++i)
    if (clean.verdicts[i].result.invariant != dirty.verdicts[i].result.invariant) ++flips;
  const CheckList v1 = verify_transform(catalog_unitary("V1", bad), sample_momenta(3, 12, kSeed), 1e-9);
  Outcome o;
  o.passed = flips >= 1 && !all_passed(v1);
  double v1_worst = 0.0;
  for (const auto& c : v1) v1_worst = std::max(v1_worst, c.residual);
  o.detail = std::to_string(flips) + " verdicts flipped, V1 " + (all_passed(v1) ? "passes" : "fails") +
             " (worst residual " + sci(v1_worst) + ")";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Clifford relations", clifford},
      {"transformations", transformations},
      {"symmetry classification", classification},
      {"intertwiner oracle equivalence", oracle_equivalence},
      {"projectors", projectors},
      {"Poincare closure", poincare},
      {"position operators", positions},
      {"irrep content", content},
      {"dispersion", dispersion},
      {"negative control", negative_control},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s (%.1fs)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
