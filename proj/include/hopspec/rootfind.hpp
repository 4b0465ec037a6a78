#pragma once

#include <stdexcept>
#include <vector>

#include "hopspec/cpoly.hpp"

namespace hopspec {

// All roots of a polynomial, sorted by (re, im).
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> residuals;  // |p(root)|, aligned with roots
  int sweeps = 0;
  double tolerance = 0.0;
};

// Raised when the simultaneous iteration fails to converge; carries the best
// iterates so callers can degrade gracefully (e.g. report a curve gap).
struct ConvergenceError : std::runtime_error {
  ConvergenceError(std::string msg, std::vector<Complex> best_roots, int sweeps_done)
      : std::runtime_error(std::move(msg)), best(std::move(best_roots)), sweeps(sweeps_done) {}
  std::vector<Complex> best;
  int sweeps;
};

// Aberth-Ehrlich simultaneous iteration (Jacobi sweeps over all iterates).
// Exact zero coefficients at the low end are stripped first, so exact roots
// at the origin come out exact and never slow the iteration down.  `initial`
// seeds the iterates when its size matches the deflated degree (warm starts
// across a parameter sweep); otherwise iterates start on a circle sized by
// the Fujiwara bound.  Degree must be >= 1.
RootSet find_roots(const CPoly& p, double tol = 1e-12, int max_sweeps = 200,
                   const std::vector<Complex>* initial = nullptr);

}  // namespace hopspec
