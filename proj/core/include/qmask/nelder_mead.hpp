#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qmask {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  std::size_t max_iterations = 2000;
  /// Stop once max_i ||x_i - x_best||_inf falls below this.
  double diameter_tolerance = 1e-10;
  /// Stop once f(worst) - f(best) falls below this.
  double spread_tolerance = 1e-12;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Downhill simplex from an explicit initial simplex of n + 1 points.
NelderMeadResult nelder_mead(const Objective& f, std::vector<std::vector<double>> simplex,
                             const NelderMeadOptions& options = {});

/// Axis-aligned initial simplex x0, x0 + scale * e_i.
NelderMeadResult nelder_mead(const Objective& f, std::span<const double> x0, double scale,
                             const NelderMeadOptions& options = {});

}  // namespace qmask
