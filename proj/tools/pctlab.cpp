// pctlab command line: classification reports and verification suites.
//
// Exit codes: 0 pass, 1 check failure, 2 usage error, 3 numerical indeterminacy.

#include "pctlab/position.hpp"
#include "pctlab/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <stdexcept>

namespace {

using namespace pctlab;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const CheckList& checks, const RunConfig& cfg, const std::string& title) {
  if (cfg.format == "json") {
    nlohmann::ordered_json j = to_json(checks);
    j["title"] = title;
    std::cout << dump_json(j) << "\n";
  } else {
    std::cout << to_markdown(checks, title);
  }
  if (!all_passed(checks)) {
    std::cerr << "failing checks:\n";
    for (const auto& c : checks)
      if (!c.informational && !c.passed) std::cerr << "  " << c.name << " (residual " << c.residual << ")\n";
    return 1;
  }
  return 0;
}

void require_known(const std::string& what, const std::string& name,
                   const std::vector<std::string>& known) {
  for (const auto& k : known)
    if (k == name) return;
  std::string list;
  for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
  throw UsageError("unknown " + what + " '" + name + "' (known: " + list + ")");
}

std::string default_generators(const std::string& equation) {
  if (equation == "dirac_massless") return "psi";
  if (equation == "weyl_plus") return "weyl";
  if (equation == "chi_plus") return "chi2";
  if (equation == "chi_4c") return "chi";
  if (equation == "phi_diag") return "phi";
  throw UsageError("no default generator set for '" + equation + "'; pass --generators");
}

int cmd_report(const RunConfig& cfg, const std::string& equation) {
  require_known("equation", equation, equation_names());
  if (cfg.samples < 8) throw UsageError("classification needs --samples >= 8");
  const EquationSpec eq = catalog_equation(equation, cfg.catalog());
  const ClassificationReport rep = classify_equation(eq, cfg.solve_options());
  if (cfg.format == "json") std::cout << dump_json(to_json(rep)) << "\n";
  else std::cout << to_markdown(rep);
  return rep.agreement ? 0 : 1;
}

int cmd_algebra(const RunConfig& cfg, const std::string& name) {
  require_known("generator set", name, generator_set_names());
  GeneratorParams gp;
  gp.mass = cfg.mass;
  gp.catalog = cfg.catalog();
  const GeneratorSet gs = generator_set(name, gp);
  const StructureConstants sc = calibrate_structure_constants(gs.d, gs.d == 3 ? 0.0 : cfg.mass);
  const AlgebraReport r = algebra_residual(gs, sc, sample_momenta(gs.d, cfg.samples, cfg.seed));
  CheckList checks{make_check("structure constants fit", sc.fit_residual, 1e-10),
                   make_check("closure " + name, r.residual, 1e-8, r.worst_pair),
                   make_check("second order " + name, r.second_order, 1e-10)};
  return emit(checks, cfg, "algebra " + name);
}

int cmd_transform(const RunConfig& cfg, const std::string& name) {
  require_known("transformation", name, unitary_names());
  const CheckList checks = verify_transform(catalog_unitary(name, cfg.catalog()),
                                            sample_momenta(3, cfg.samples, cfg.seed), cfg.tol);
  return emit(checks, cfg, "transform " + name);
}

int cmd_position(const RunConfig& cfg, const std::string& name) {
  require_known("position operator", name, position_names());
  return emit(verify_position(name, sample_momenta(3, cfg.samples, cfg.seed), cfg.tol), cfg,
              "position " + name);
}

int cmd_content(const RunConfig& cfg, const std::string& equation, std::string generators) {
  require_known("equation", equation, equation_names());
  if (generators.empty()) generators = default_generators(equation);
  require_known("generator set", generators, generator_set_names());
  const EquationSpec eq = catalog_equation(equation, cfg.catalog());
  const GeneratorSet gs = generator_set(generators);
  if (gs.dim != eq.dim || gs.d != eq.d || eq.d != 3)
    throw UsageError("generator set '" + generators + "' does not act on '" + equation + "'");
  const IrrepContent c = irrep_content(eq, gs, sample_momenta(3, cfg.samples, cfg.seed));
  if (cfg.format == "json") {
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const auto& l : c) labels.push_back({{"energy_sign", l.energy_sign}, {"helicity", l.helicity}});
    std::cout << dump_json({{"equation", equation}, {"generators", generators}, {"content", labels}})
              << "\n";
  } else {
    std::cout << "## content " << equation << " (" << generators << ")\n\n" << content_string(c) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pctlab: discrete symmetries, Poincaré generators and position operators of "
               "relativistic wave equations"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "number of sampled momenta")->capture_default_str();
  app.add_option("--holdout", cfg.holdout, "holdout samples for intertwiner validation")
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "pass tolerance")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "md"}))
      ->capture_default_str();
  app.add_option("--mass", cfg.mass, "mass parameter m")->capture_default_str();
  app.add_option("--kappa", cfg.kappa, "De Sitter / kappa parameter")->capture_default_str();
  app.add_flag("--corrupt-chi", cfg.corrupt_chi,
               "debug: build the two-component equations with σ2·p2 in place of σ1·p2");

  std::string equation, name, generators;
  auto* report = app.add_subcommand("report", "classify an equation under all discrete elements");
  report->add_option("--equation", equation, "catalog equation")->required();
  auto* verify = app.add_subcommand("verify-all", "run every verification");
  auto* algebra = app.add_subcommand("algebra", "closure of a generator set");
  algebra->add_option("--generators", name, "generator set")->required();
  auto* transform = app.add_subcommand("transform", "verify a catalog unitary");
  transform->add_option("--name", name, "transformation")->required();
  auto* position = app.add_subcommand("position", "verify a position operator");
  position->add_option("--name", name, "position operator")->required();
  auto* content = app.add_subcommand("content", "energy-sign/helicity content");
  content->add_option("--equation", equation, "catalog equation")->required();
  content->add_option("--generators", generators, "generator set (default depends on equation)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cfg.samples < 1 || cfg.holdout < 1) throw UsageError("--samples and --holdout must be positive");
    if (!(cfg.tol > 0.0 && cfg.tol <= 1e-6)) throw UsageError("--tol must lie in (0, 1e-6]");
    if (*report) return cmd_report(cfg, equation);
    if (*verify) return emit(verify_all(cfg), cfg, "verify-all");
    if (*algebra) return cmd_algebra(cfg, name);
    if (*transform) return cmd_transform(cfg, name);
    if (*position) return cmd_position(cfg, name);
    if (*content) return cmd_content(cfg, equation, generators);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IndeterminateError& e) {
    std::cerr << "indeterminate: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
