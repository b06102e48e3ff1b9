#pragma once

#include <functional>
#include <vector>

namespace haptex {

struct SimplexOptions {
  std::size_t max_iterations = 5000;
  double x_tolerance = 1e-9;  // max coordinate spread of the simplex
  double f_tolerance = 1e-14; // max objective spread of the simplex
};

struct SimplexResult {
  std::vector<double> x;
  double fmin = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

// Downhill simplex minimization (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). The initial guess is kept as vertex zero, so the returned
// minimum never exceeds the objective at the guess. Non-finite objective
// values are treated as +inf, which lets callers fence invalid regions.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const std::vector<double>& initial,
                          const SimplexOptions& options = {});

}  // namespace haptex
