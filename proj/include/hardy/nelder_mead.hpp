#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace hardy {

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Nelder-Mead minimisation (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) from an axis-aligned simplex of edge `step` around x0. Stops
/// when `budget` evaluations are spent or the simplex values agree to ftol.
template <class Objective>
SimplexResult nelder_mead(Objective&& f, std::vector<double> x0, double step, std::size_t budget,
                          double ftol = 1e-15) {
  const std::size_t dim = x0.size();
  SimplexResult out{x0, 0.0, 0};
  if (budget == 0) return out;
  out.value = f(x0);
  out.evaluations = 1;
  if (dim == 0) return out;

  std::vector<std::vector<double>> pts(dim + 1, x0);
  std::vector<double> vals(dim + 1, out.value);
  for (std::size_t i = 0; i < dim && out.evaluations < budget; ++i) {
    pts[i + 1][i] += step;
    vals[i + 1] = f(pts[i + 1]);
    ++out.evaluations;
  }

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim);
  std::vector<double> trial(dim);
  auto blend = [&](const std::vector<double>& from, double t, std::vector<double>& into) {
    for (std::size_t j = 0; j < dim; ++j) into[j] = centroid[j] + t * (from[j] - centroid[j]);
  };

  while (out.evaluations < budget) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];
    if (std::abs(vals[worst] - vals[best]) <= ftol * (std::abs(vals[best]) + ftol)) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i : order) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += pts[i][j] / static_cast<double>(dim);
    }

    blend(pts[worst], -1.0, trial);
    const double reflected = f(trial);
    ++out.evaluations;
    if (reflected < vals[best]) {
      std::vector<double> reflected_pt = trial;
      blend(pts[worst], -2.0, trial);
      const double expanded = out.evaluations < budget ? f(trial) : reflected + 1.0;
      if (out.evaluations < budget) ++out.evaluations;
      if (expanded < reflected) {
        pts[worst] = trial;
        vals[worst] = expanded;
      } else {
        pts[worst] = std::move(reflected_pt);
        vals[worst] = reflected;
      }
      continue;
    }
    if (reflected < vals[second]) {
      pts[worst] = trial;
      vals[worst] = reflected;
      continue;
    }
    const bool outside = reflected < vals[worst];
    blend(pts[worst], outside ? -0.5 : 0.5, trial);
    if (out.evaluations >= budget) break;
    const double contracted = f(trial);
    ++out.evaluations;
    if (contracted < std::min(reflected, vals[worst])) {
      pts[worst] = trial;
      vals[worst] = contracted;
      continue;
    }
    for (std::size_t i : order) {
      if (i == best || out.evaluations >= budget) continue;
      for (std::size_t j = 0; j < dim; ++j) pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
      vals[i] = f(pts[i]);
      ++out.evaluations;
    }
  }

  const auto it = std::min_element(vals.begin(), vals.end());
  out.value = *it;
  out.x = pts[static_cast<std::size_t>(it - vals.begin())];
  return out;
}

}  // namespace hardy
