#pragma once

// Derivative-free random search for a 2×2 intertwiner, independent of the
// nullspace solver. Used to cross-check invariance verdicts.

#include "pctlab/equations.hpp"
#include "pctlab/symmetry.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using M2 = Eigen::Matrix2cd;

struct SearchResult {
  double best = 0.0;
  long evaluations = 0;
};

// H̃ built directly from the element's definition.
inline M2 transformed(const pctlab::EquationSpec& eq, const pctlab::SymmetryElement& g,
                      const pctlab::MomentumPoint& p) {
  std::vector<double> q = p.components();
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (g.flips[k]) q[k] = -q[k];
    if (g.conjugate) q[k] = -q[k];
  }
  const double eps_t = g.time_flip ? -1.0 : 1.0;
  const M2 h = eq.hamiltonian.eval(pctlab::MomentumPoint(q));
  return g.conjugate ? M2(-eps_t * h.conjugate()) : M2(eps_t * h);
}

struct Problem {
  std::vector<M2> h, ht;
  std::vector<double> scale;
};

inline Problem make_problem(const pctlab::EquationSpec& eq, const pctlab::SymmetryElement& g,
                            const std::vector<pctlab::MomentumPoint>& points) {
  Problem pr;
  for (const auto& p : points) {
    const M2 h = eq.hamiltonian.eval(p);
    pr.h.push_back(h);
    pr.ht.push_back(transformed(eq, g, p));
    pr.scale.push_back(1.0 / h.norm());
  }
  return pr;
}

// Scale-free objective: max_p ‖M H̃ - H M‖/‖H‖ for ‖M‖ = 1, divided by
// √(2|det M|) so that singular candidates cannot score well.
inline double objective(const Problem& pr, const std::array<double, 8>& x) {
  M2 m;
  m << std::complex<double>(x[0], x[1]), std::complex<double>(x[2], x[3]),
      std::complex<double>(x[4], x[5]), std::complex<double>(x[6], x[7]);
  const double n = m.norm();
  if (n == 0.0) return INFINITY;
  m /= n;
  const double det = std::abs(m.determinant());
  if (det < 1e-300) return INFINITY;
  double r = 0.0;
  for (std::size_t i = 0; i < pr.h.size(); ++i)
    r = std::max(r, (m * pr.ht[i] - pr.h[i] * m).norm() * pr.scale[i]);
  return r / std::sqrt(2.0 * det);
}

// Adaptive-step hill climb with restarts; `budget` objective evaluations.
inline SearchResult random_search(const Problem& pr, std::uint64_t seed, long budget = 100000) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  SearchResult out{INFINITY, 0};
  while (out.evaluations < budget) {
    std::array<double, 8> x;
    for (auto& v : x) v = nd(rng);
    double fx = objective(pr, x);
    ++out.evaluations;
    double step = 0.5;
    int stall = 0;
    while (out.evaluations < budget && step > 1e-12 && stall < 400) {
      std::array<double, 8> y = x;
      for (auto& v : y) v += step * nd(rng);
      const double fy = objective(pr, y);
      ++out.evaluations;
      if (fy < fx) {
        x = y;
        fx = fy;
        step *= 1.5;
        stall = 0;
      } else {
        step *= 0.93;
        ++stall;
      }
    }
    out.best = std::min(out.best, fx);
  }
  return out;
}

inline constexpr double kOracleThreshold = 1e-3;

}  // namespace oracle
