#include "qmask/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qmask/errors.hpp"

namespace qmask {

NelderMeadResult nelder_mead(const Objective& f, std::vector<std::vector<double>> simplex,
                             const NelderMeadOptions& options) {
  if (simplex.size() < 2) throw DimensionError("nelder_mead: simplex needs at least two points");
  const std::size_t n = simplex.size() - 1;
  for (const auto& v : simplex)
    if (v.size() != n) throw DimensionError("nelder_mead: simplex points must have n coordinates");

  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double y = f(x);
    return std::isfinite(y) ? y : std::numeric_limits<double>::infinity();
  };

  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  auto point = [&](double t, const std::vector<double>& from, std::vector<double>& out) {
    // centroid + t (from - centroid)
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (from[j] - centroid[j]);
  };

  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j) diameter = std::max(diameter, std::abs(simplex[i][j] - simplex[best][j]));
    if (diameter < options.diameter_tolerance || values[worst] - values[best] < options.spread_tolerance) {
      result.converged = true;
      break;
    }
    if (result.iterations >= options.max_iterations) break;
    ++result.iterations;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j];
    }
    for (auto& c : centroid) c /= static_cast<double>(n);

    point(-options.reflection, simplex[worst], trial);
    const double fr = eval(trial);
    if (fr < values[best]) {
      point(-options.reflection * options.expansion, simplex[worst], trial2);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    if (fr < values[worst]) {
      // outside contraction
      point(-options.reflection * options.contraction, simplex[worst], trial2);
      const double fc = eval(trial2);
      if (fc <= fr) {
        simplex[worst] = trial2;
        values[worst] = fc;
        continue;
      }
    } else {
      point(options.contraction, simplex[worst], trial2);
      const double fc = eval(trial2);
      if (fc < values[worst]) {
        simplex[worst] = trial2;
        values[worst] = fc;
        continue;
      }
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < n; ++j)
        simplex[i][j] = simplex[best][j] + options.shrink * (simplex[i][j] - simplex[best][j]);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const std::size_t best = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

NelderMeadResult nelder_mead(const Objective& f, std::span<const double> x0, double scale,
                             const NelderMeadOptions& options) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> simplex(n + 1, std::vector<double>(x0.begin(), x0.end()));
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += scale;
  return nelder_mead(f, std::move(simplex), options);
}

}  // namespace qmask
