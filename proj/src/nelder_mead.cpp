#include "nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace haptex {

namespace {

double guarded(const std::function<double(const std::vector<double>&)>& f,
               const std::vector<double>& x) {
  const double v = f(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::max();
}

}  // namespace

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                          const std::vector<double>& initial,
                          const SimplexOptions& options) {
  const std::size_t dim = initial.size();
  if (dim == 0) fail(ErrorCode::invalid_arg, "nelder_mead: empty parameter vector");

  // fminsearch-style initial simplex: perturb one coordinate per vertex.
  std::vector<std::vector<double>> verts(dim + 1, initial);
  for (std::size_t i = 0; i < dim; ++i) {
    double& c = verts[i + 1][i];
    c = (c != 0.0) ? c * 1.05 : 0.00025;
  }
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fv[i] = guarded(objective, verts[i]);

  auto order = [&] {
    std::vector<std::size_t> idx(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> v2(dim + 1);
    std::vector<double> f2(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      v2[i] = verts[idx[i]];
      f2[i] = fv[idx[i]];
    }
    verts.swap(v2);
    fv.swap(f2);
  };

  SimplexResult result;
  std::size_t iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    order();

    double f_spread = 0.0;
    double x_spread = 0.0;
    for (std::size_t i = 1; i <= dim; ++i) {
      f_spread = std::max(f_spread, std::abs(fv[i] - fv[0]));
      for (std::size_t j = 0; j < dim; ++j) {
        x_spread = std::max(x_spread, std::abs(verts[i][j] - verts[0][j]));
      }
    }
    if (f_spread <= options.f_tolerance && x_spread <= options.x_tolerance) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += verts[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](const std::vector<double>& away, double coeff) {
      std::vector<double> p(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        p[j] = centroid[j] + coeff * (centroid[j] - away[j]);
      }
      return p;
    };

    const std::vector<double> reflected = blend(verts[dim], 1.0);
    const double fr = guarded(objective, reflected);

    if (fr < fv[0]) {
      const std::vector<double> expanded = blend(verts[dim], 2.0);
      const double fe = guarded(objective, expanded);
      if (fe < fr) {
        verts[dim] = expanded;
        fv[dim] = fe;
      } else {
        verts[dim] = reflected;
        fv[dim] = fr;
      }
    } else if (fr < fv[dim - 1]) {
      verts[dim] = reflected;
      fv[dim] = fr;
    } else {
      const bool outside = fr < fv[dim];
      const std::vector<double> contracted =
          outside ? blend(verts[dim], 0.5) : blend(verts[dim], -0.5);
      const double fc = guarded(objective, contracted);
      if (fc < (outside ? fr : fv[dim])) {
        verts[dim] = contracted;
        fv[dim] = fc;
      } else {
        for (std::size_t i = 1; i <= dim; ++i) {
          for (std::size_t j = 0; j < dim; ++j) {
            verts[i][j] = verts[0][j] + 0.5 * (verts[i][j] - verts[0][j]);
          }
          fv[i] = guarded(objective, verts[i]);
        }
      }
    }
  }

  order();
  result.x = verts[0];
  result.fmin = fv[0];
  result.iterations = iter;
  return result;
}

}  // namespace haptex
