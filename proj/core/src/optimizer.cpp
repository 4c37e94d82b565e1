#include "qmask/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "qmask/entanglement.hpp"
#include "qmask/errors.hpp"
#include "qmask/nelder_mead.hpp"

namespace qmask {

namespace {

constexpr double kIdenticalOverlap = 1e-12;
constexpr std::size_t kPolishRounds = 8;

// splitmix64; the stream for a restart depends only on (seed, restart index)
// so restarts can run in any order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

std::vector<double> random_start(std::uint64_t seed, std::size_t restart) {
  SplitMix64 mixer(seed);
  SplitMix64 rng(mixer.next() ^ (0xD1B54A32D192ED03ULL * (restart + 1)));
  std::vector<double> x(MaskerParams::kDimension);
  for (std::size_t i = 0; i < 3; ++i) x[i] = rng.uniform() * (kPi / 2.0);
  for (std::size_t i = 3; i < MaskerParams::kDimension; ++i) x[i] = rng.uniform() * 2.0 * kPi;
  return x;
}

std::pair<PureState2Q, PureState2Q> masked_pair(const ComplexMatrix& u, const QubitState& in1,
                                                const QubitState& in2) {
  const QubitState ancilla = QubitState::zero();
  return {apply_masker(u, in1, ancilla), apply_masker(u, in2, ancilla)};
}

EofTable eof_table(const ComplexMatrix& u, const QubitState& in1, const QubitState& in2,
                   std::span<const double> p_grid) {
  const auto [psi1, psi2] = masked_pair(u, in1, in2);
  const ComplexMatrix proj1 = psi1.projector(), proj2 = psi2.projector();
  EofTable table;
  table.reserve(p_grid.size());
  for (double p : p_grid) {
    ComplexMatrix m = p * proj1 + (1.0 - p) * proj2;
    table.emplace_back(p, entanglement_of_formation(DensityMatrix(std::move(m))));
  }
  return table;
}

void require_distinct(const QubitState& in1, const QubitState& in2) {
  if (std::norm(inner(in1.amplitudes(), in2.amplitudes())) >= 1.0 - kIdenticalOverlap) {
    throw DomainError("masker search: inputs are identical up to phase");
  }
}

// Repeated Nelder-Mead from the current best point; a fresh simplex undoes
// premature collapse.
NelderMeadResult polish(const Objective& f, std::vector<double> x, const OptimizerConfig& config) {
  NelderMeadOptions opts;
  opts.max_iterations = config.max_iterations;
  NelderMeadResult best{x, f(x), 0, 1, false};
  for (std::size_t round = 0; round < kPolishRounds; ++round) {
    NelderMeadResult r = nelder_mead(f, best.x, config.simplex_scale, opts);
    const bool improved = r.value < best.value - std::max(1e-15, 1e-12 * std::abs(best.value));
    r.evaluations += best.evaluations;
    r.iterations += best.iterations;
    if (r.value <= best.value) best = std::move(r);
    if (!improved && best.converged) break;
  }
  return best;
}

struct RestartOutcome {
  std::vector<double> x;
  double objective = std::numeric_limits<double>::infinity();
};

template <class Fn>
std::vector<RestartOutcome> run_restarts(const OptimizerConfig& config, Fn&& restart_fn) {
  std::vector<RestartOutcome> outcomes(config.restarts);
  std::size_t workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  workers = std::min(workers, config.restarts);
  if (workers <= 1) {
    for (std::size_t k = 0; k < config.restarts; ++k) outcomes[k] = restart_fn(k);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < config.restarts; k = next++) outcomes[k] = restart_fn(k);
    });
  }
  for (auto& t : pool) t.join();
  return outcomes;
}

std::size_t select_best(const std::vector<RestartOutcome>& outcomes) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k)
    if (outcomes[k].objective < outcomes[best].objective) best = k;
  return best;
}

OptimizationResult summarize(const std::vector<RestartOutcome>& outcomes, const QubitState& in1,
                             const QubitState& in2, const OptimizerConfig& config) {
  const std::size_t best = select_best(outcomes);
  OptimizationResult result;
  result.restart_index = best;
  result.objective = outcomes[best].objective;
  result.params = canonicalize(MaskerParams::from_vector(outcomes[best].x));
  const ComplexMatrix u = cartan_unitary(result.params);
  result.residual = masker_residual(u, in1, in2);
  result.converged = result.residual <= config.masking_tolerance;
  result.eof_by_p = eof_table(u, in1, in2, config.p_grid);
  const auto min_it = std::min_element(result.eof_by_p.begin(), result.eof_by_p.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
  result.min_eof = min_it->second;
  result.argmin_p = min_it->first;
  return result;
}

}  // namespace

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  if (points < 2) throw DomainError("uniform_grid: need at least two points");
  std::vector<double> g(points);
  const double n = static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) g[k] = lo + (hi - lo) * (static_cast<double>(k) / n);
  g.back() = hi;
  return g;
}

void OptimizerConfig::validate() const {
  if (restarts == 0) throw DomainError("restarts must be positive");
  if (max_iterations == 0) throw DomainError("max_iterations must be positive");
  if (!(masking_tolerance > 0.0)) throw DomainError("masking_tolerance must be positive");
  if (!(penalty_weight > 0.0) || !std::isfinite(penalty_weight)) throw DomainError("penalty_weight must be positive");
  if (!(simplex_scale > 0.0) || !std::isfinite(simplex_scale)) throw DomainError("simplex_scale must be positive");
  if (p_grid.empty()) throw DomainError("p_grid must not be empty");
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0.0 && p_grid[i] <= 1.0)) throw DomainError("p_grid values must lie in [0, 1]");
    if (i > 0 && p_grid[i] < p_grid[i - 1]) throw DomainError("p_grid must be sorted");
  }
}

double masker_residual(const ComplexMatrix& u, const QubitState& input1, const QubitState& input2) {
  const auto [psi1, psi2] = masked_pair(u, input1, input2);
  return masking_residual(psi1, psi2);
}

EofTable entanglement_scan(const ComplexMatrix& u, const QubitState& input1, const QubitState& input2,
                           std::span<const double> p_grid, double tolerance) {
  const double r = masker_residual(u, input1, input2);
  if (r > tolerance) {
    throw PreconditionError("entanglement_scan: masking constraint violated (residual " + std::to_string(r) + ")");
  }
  for (double p : p_grid) require_in_range(p, 0.0, 1.0, "p");
  return eof_table(u, input1, input2, p_grid);
}

EofTable entanglement_scan(const MaskerParams& params, const QubitState& input1, const QubitState& input2,
                           std::span<const double> p_grid, double tolerance) {
  return entanglement_scan(cartan_unitary(params), input1, input2, p_grid, tolerance);
}

OptimizationResult find_masker(const QubitState& input1, const QubitState& input2, const OptimizerConfig& config) {
  config.validate();
  require_distinct(input1, input2);
  const Objective residual = [&](std::span<const double> x) {
    return masker_residual(cartan_unitary(MaskerParams::from_vector(x)), input1, input2);
  };
  const auto outcomes = run_restarts(config, [&](std::size_t k) {
    const NelderMeadResult r = polish(residual, random_start(config.seed, k), config);
    return RestartOutcome{r.x, r.value};
  });
  return summarize(outcomes, input1, input2, config);
}

OptimizationResult min_entanglement_masker(const QubitState& input1, const QubitState& input2,
                                           const OptimizerConfig& config) {
  config.validate();
  require_distinct(input1, input2);
  const Objective residual = [&](std::span<const double> x) {
    return masker_residual(cartan_unitary(MaskerParams::from_vector(x)), input1, input2);
  };
  const Objective penalized = [&](std::span<const double> x) {
    const ComplexMatrix u = cartan_unitary(MaskerParams::from_vector(x));
    const auto [psi1, psi2] = masked_pair(u, input1, input2);
    double total = config.penalty_weight * masking_residual(psi1, psi2);
    for (double p : config.p_grid) total += eof_from_concurrence(mixture_concurrence(psi1, psi2, p));
    return total;
  };
  const auto outcomes = run_restarts(config, [&](std::size_t k) {
    const NelderMeadResult feasible = polish(residual, random_start(config.seed, k), config);
    const NelderMeadResult r = polish(penalized, feasible.x, config);
    return RestartOutcome{r.x, r.value};
  });
  return summarize(outcomes, input1, input2, config);
}

std::vector<OrthogonalGridPoint> lemma2_grid_oracle(double theta, std::size_t steps) {
  if (steps < 3) throw DomainError("lemma2_grid_oracle: steps must be at least 3");
  const auto alphas = uniform_grid(0.0, 1.0, steps);
  const auto angles = uniform_grid(0.0, 2.0 * kPi, steps);
  std::vector<OrthogonalGridPoint> survivors;
  for (double a1 : alphas)
    for (double a2 : alphas)
      for (double tp : angles) {
        const auto [chi1, chi2] = walgate_orthogonal_pair(theta, tp, a1, a2);
        const double r = masking_residual(chi1, chi2);
        if (r <= kOracleResidualThreshold) survivors.push_back({a1, a2, tp, r});
      }
  return survivors;
}

std::vector<NonorthogonalGridPoint> lemma3_grid_oracle(double theta, std::size_t steps) {
  if (steps < 3) throw DomainError("lemma3_grid_oracle: steps must be at least 3");
  const auto weights = uniform_grid(0.0, 1.0, steps);
  const auto angles = uniform_grid(0.0, 2.0 * kPi, steps);
  std::vector<NonorthogonalGridPoint> survivors;
  for (double t0 : weights)
    for (double tp : angles) {
      const auto [s1, s2] = walgate_nonorthogonal_pair(t0, theta, tp);
      if (std::norm(inner(s1.amplitudes(), s2.amplitudes())) >= 1.0 - kIdenticalOverlap) continue;
      const double r = masking_residual(s1, s2);
      if (r <= kOracleResidualThreshold) survivors.push_back({t0, tp, r});
    }
  return survivors;
}

}  // namespace qmask
