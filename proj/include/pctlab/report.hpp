#pragma once

// Report assembly shared by the CLI and the acceptance suite.

#include "pctlab/check.hpp"
#include "pctlab/poincare.hpp"
#include "pctlab/symmetry.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>

namespace pctlab {

struct RunConfig {
  std::uint64_t seed = 42;
  int samples = 12;
  int holdout = 4;
  double tol = 1e-9;
  std::string format = "md";
  double mass = 1.0;
  double kappa = 1.0;
  bool corrupt_chi = false;

  CatalogParams catalog() const { return {mass, kappa, corrupt_chi}; }
  SolveOptions solve_options() const;
};

/// JSON text with every floating-point number printed with 17 significant digits.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

nlohmann::ordered_json to_json(const ClassificationReport& rep);
nlohmann::ordered_json to_json(const CheckList& checks);
std::string to_markdown(const ClassificationReport& rep);
std::string to_markdown(const CheckList& checks, const std::string& title);

/// Every verification of the library: Clifford sets, transformations,
/// projectors, generator algebras, position operators, projection relations,
/// irrep content, dispersion identities and the λ consistency check.
CheckList verify_all(const RunConfig& cfg);

CheckList content_checks(const RunConfig& cfg);
CheckList dispersion_checks(const RunConfig& cfg);

/// "{(+, +1/2), (-, -1/2)}"
std::string content_string(const IrrepContent& c);

}  // namespace pctlab
