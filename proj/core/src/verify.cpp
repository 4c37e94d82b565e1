#include "qmask/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <ostream>
#include <random>

#include "qmask/entanglement.hpp"
#include "qmask/errors.hpp"
#include "qmask/io.hpp"
#include "qmask/masking.hpp"
#include "qmask/optimizer.hpp"

namespace qmask {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

std::string fmt(double x) { return format_real(x); }

SuiteReport lemma1_suite() {
  SuiteReport rep{"lemma1", {}};
  const ComplexMatrix& u = canonical_orthogonal_masker();
  const DensityMatrix ancilla = DensityMatrix::from_pure(QubitState::zero());
  const auto grid = uniform_grid(0.0, 1.0, 11);

  rep.add("canonical masker masks every mixture of |0>,|1> (11-point p grid)",
          verify_convex_masking(u, QubitState::zero(), QubitState::one(), ancilla, grid));

  const DensityMatrix half = DensityMatrix(0.5 * ComplexMatrix::identity(2));
  double worst = 0.0;
  for (double p : grid) {
    const DensityMatrix in = mix(DensityMatrix::from_pure(QubitState::zero()),
                                 DensityMatrix::from_pure(QubitState::one()), p);
    const DensityMatrix out = apply_masker(u, in, ancilla);
    for (int party : {1, 2}) worst = std::max(worst, max_abs_diff(partial_trace(out.matrix(), party), half.matrix()));
  }
  rep.add("both reduced states equal I/2 on the grid (max entry deviation)", worst <= 1e-10, worst, 1e-10);

  const std::vector<double> ends{0.0, 1.0};
  rep.add("endpoint grid {0, 1} reduces to pure-state masking",
          verify_convex_masking(u, QubitState::zero(), QubitState::one(), ancilla, ends));

  bool precondition_reported = false;
  try {
    verify_convex_masking(ComplexMatrix::identity(4), QubitState::zero(), QubitState::one(), ancilla, grid);
  } catch (const PreconditionError&) {
    precondition_reported = true;
  }
  rep.add("identity unitary is rejected as a non-masker", precondition_reported);
  return rep;
}

SuiteReport lemma2_suite() {
  SuiteReport rep{"lemma2", {}};
  constexpr std::size_t steps = 41;
  const double alpha_cell = 1.0 / (steps - 1);
  const double angle_cell = 2.0 * kPi / (steps - 1);
  for (double theta : {0.0, kPi / 4.0, kPi / 2.0}) {
    const auto survivors = lemma2_grid_oracle(theta, steps);
    double worst_cells = 0.0;
    bool hit_target = false;
    for (const auto& s : survivors) {
      const double cells = std::max({std::abs(s.alpha1 - 0.5) / alpha_cell, std::abs(s.alpha2 - 0.5) / alpha_cell,
                                     std::abs(s.theta_prime - (theta + kPi)) / angle_cell});
      worst_cells = std::max(worst_cells, cells);
      hit_target = hit_target || cells < 1e-9;
    }
    rep.add("theta=" + fmt(theta) + ": 41^3 grid survivors (" + std::to_string(survivors.size()) +
                ") within one cell of (1/2, 1/2, theta+pi), in cells",
            !survivors.empty() && hit_target && worst_cells <= 1.0, worst_cells, 1.0);
  }

  double worst_residual = 0.0, worst_entropy = 0.0;
  for (double theta : uniform_grid(0.0, kPi, 21)) {
    const auto [chi1, chi2] = canonical_orthogonal_pair(theta);
    worst_residual = std::max(worst_residual, masking_residual(chi1, chi2));
    for (const auto* chi : {&chi1, &chi2})
      worst_entropy = std::max(worst_entropy, std::abs(pure_entanglement_entropy(*chi) - 1.0));
  }
  rep.add("canonical orthogonal pair masks (max residual, 21 thetas)", worst_residual <= 1e-12, worst_residual, 1e-12);
  rep.add("canonical orthogonal pair is maximally entangled (max |S - 1|)", worst_entropy <= 1e-10, worst_entropy,
          1e-10);
  return rep;
}

SuiteReport lemma3_suite() {
  SuiteReport rep{"lemma3", {}};
  constexpr std::size_t steps = 61;
  const double weight_cell = 1.0 / (steps - 1);
  const double angle_cell = 2.0 * kPi / (steps - 1);
  for (double theta : {0.0, kPi / 6.0, kPi / 3.0}) {
    const auto survivors = lemma3_grid_oracle(theta, steps);
    double worst_cells = 0.0;
    bool hit_target = false;
    for (const auto& s : survivors) {
      const double cells =
          std::max(std::abs(s.t0 - 0.5) / weight_cell, std::abs(s.theta_prime - (kPi - theta)) / angle_cell);
      worst_cells = std::max(worst_cells, cells);
      hit_target = hit_target || cells < 1e-9;
    }
    rep.add("theta=" + fmt(theta) + ": 61^2 grid survivors (" + std::to_string(survivors.size()) +
                ") within one cell of (1/2, pi-theta), in cells",
            !survivors.empty() && hit_target && worst_cells <= 1.0, worst_cells, 1.0);
  }

  double worst_exact = 0.0, worst_equal = 0.0, worst_formula = 0.0, smallest = 1.0;
  for (double theta : uniform_grid(0.0, kPi / 2.0, 31)) {
    const auto [s1, s2] = canonical_nonorthogonal_pair(theta);
    worst_exact = std::max(worst_exact, masking_residual(s1, s2));
    const double e1 = pure_entanglement_entropy(s1), e2 = pure_entanglement_entropy(s2);
    worst_equal = std::max(worst_equal, std::abs(e1 - e2));
    const double expected = eof_from_concurrence(std::abs(std::cos(theta)));
    worst_formula = std::max({worst_formula, std::abs(e1 - expected), std::abs(e2 - expected)});
    if (theta < kPi / 2.0 - 1e-9) smallest = std::min(smallest, std::min(e1, e2));
  }
  rep.add("canonical non-orthogonal pair masks (max residual)", worst_exact <= 1e-12, worst_exact, 1e-12);
  rep.add("both masked states equally entangled (max |S1 - S2|)", worst_equal <= 1e-10, worst_equal, 1e-10);
  rep.add("entanglement equals E_F(|cos theta|) (max deviation)", worst_formula <= 1e-9, worst_formula, 1e-9);
  rep.add("entanglement non-zero for theta < pi/2 (min entropy)", smallest > 0.0, smallest, 0.0);
  return rep;
}

SuiteReport thm1_suite() {
  SuiteReport rep{"thm1", {}};
  const auto ps = uniform_grid(0.0, 1.0, 101);
  double worst_local = 0.0, worst_formula = 0.0, worst_eof = 0.0, smallest_gap = 1.0, worst_equality = 0.0;
  double worst_endpoint = 0.0;
  for (double theta : {0.0, kPi / 4.0, kPi / 2.0}) {
    for (double p : ps) {
      const DensityMatrix rho = masked_mixture_orthogonal(p, theta);
      const EntanglementReport r = analyze(rho);
      worst_local = std::max({worst_local, std::abs(r.entropy_local_1 - 1.0), std::abs(r.entropy_local_2 - 1.0)});
      worst_formula = std::max(worst_formula, std::abs(r.entropy_global - orthogonal_mixture_entropy(p)));
      const double closed = eof_from_concurrence(std::abs(2.0 * p - 1.0));
      worst_eof = std::max(worst_eof, std::abs(r.eof - closed));
      if (std::abs(p - 0.5) >= 0.05 - 1e-12) smallest_gap = std::min(smallest_gap, r.entropy_local_1 - r.entropy_global);
      if (p == 0.5) worst_equality = std::max(worst_equality, std::abs(r.delta_s));
      if (p == 0.0 || p == 1.0) worst_endpoint = std::max(worst_endpoint, std::abs(r.eof - 1.0));
    }
  }
  rep.add("S(Tr rho) = 1 bit (max deviation)", worst_local <= 1e-9, worst_local, 1e-9);
  rep.add("S(rho) matches the piecewise entropy formula (max deviation)", worst_formula <= 1e-9, worst_formula, 1e-9);
  rep.add("S(rho) < S(rho_1) by >= 1e-3 for |p - 1/2| >= 0.05 (min gap)", smallest_gap >= 1e-3, smallest_gap, 1e-3);
  rep.add("S(rho) = S(rho_1) at p = 1/2 (max |delta S|)", worst_equality <= 1e-9, worst_equality, 1e-9);

  double worst_half = 0.0, weakest_off = 1.0;
  for (double theta : uniform_grid(0.0, kPi, 21)) {
    worst_half = std::max(worst_half, negativity(masked_mixture_orthogonal(0.5, theta)));
    for (double p : uniform_grid(0.0, 1.0, 21))
      if (std::abs(p - 0.5) >= 0.05 - 1e-12)
        weakest_off = std::min(weakest_off, negativity(masked_mixture_orthogonal(p, theta)));
  }
  rep.add("PPT at p = 1/2 (max negativity, 21 thetas)", worst_half <= 1e-9, worst_half, 1e-9);
  rep.add("NPT for |p - 1/2| >= 0.05 (min negativity)", weakest_off > 1e-4, weakest_off, 1e-4);

  rep.add("E_F matches h((1 + sqrt(1 - (2p-1)^2))/2) (max deviation)", worst_eof <= 1e-9, worst_eof, 1e-9);
  rep.add("E_F = 1 ebit at p in {0, 1} (max deviation)", worst_endpoint <= 1e-9, worst_endpoint, 1e-9);
  return rep;
}

SuiteReport thm2_suite() {
  SuiteReport rep{"thm2", {}};
  const auto ps = uniform_grid(0.0, 1.0, 51);
  const auto thetas = uniform_grid(0.0, kPi / 2.0, 51);
  double largest = -1.0, largest_inside = -1.0, worst_boundary = 0.0;
  for (double theta : thetas)
    for (double p : ps) {
      const double ds = entropic_gap(masked_mixture_nonorthogonal(p, theta));
      largest = std::max(largest, ds);
      const bool inside = std::abs(p - 0.5) >= 0.05 - 1e-12 && theta <= kPi / 2.0 - 0.05;
      if (inside) largest_inside = std::max(largest_inside, ds);
      if (p == 0.5 || theta == kPi / 2.0) worst_boundary = std::max(worst_boundary, std::abs(ds));
    }
  rep.add("delta S <= 0 on the 51x51 grid (max delta S)", largest <= 1e-9, largest, 1e-9);
  rep.add("delta S < 0 off p = 1/2 for theta <= pi/2 - 0.05 (max delta S)", largest_inside < -1e-9, largest_inside,
          -1e-9);
  rep.add("delta S = 0 at p = 1/2 or theta = pi/2 (max |delta S|)", worst_boundary <= 1e-9, worst_boundary, 1e-9);

  double worst_det = 0.0, worst_neg = 0.0;
  for (double theta : thetas) {
    const DensityMatrix k = masked_mixture_nonorthogonal(0.5, theta);
    worst_det = std::max(worst_det, std::abs(partial_transpose_determinant(k)));
    worst_neg = std::max(worst_neg, negativity(k));
  }
  rep.add("det of partial transpose vanishes at p = 1/2 (max |det|)", worst_det <= 1e-10, worst_det, 1e-10);
  rep.add("PPT at p = 1/2 for all theta (max negativity)", worst_neg <= 1e-9, worst_neg, 1e-9);
  return rep;
}

SuiteReport appendix_suite() {
  SuiteReport rep{"appendix", {}};
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const DensityMatrix ancilla = DensityMatrix::from_pure(QubitState::zero());
  const DensityMatrix zero = DensityMatrix::from_pure(QubitState::zero());
  const DensityMatrix one = DensityMatrix::from_pure(QubitState::one());

  struct Worst {
    double residual = 0, s_global = 0, s_local = 0, concurrence = 0, negativity = 0;
  };
  Worst masker_w, orth_w, nonorth_w;
  auto track = [](Worst& w, double r0, double r1, const DensityMatrix& a, const DensityMatrix& b) {
    const EntanglementReport x = analyze(a), y = analyze(b);
    w.residual = std::max(w.residual, std::abs(r0 - r1));
    w.s_global = std::max(w.s_global, std::abs(x.entropy_global - y.entropy_global));
    w.s_local = std::max({w.s_local, std::abs(x.entropy_local_1 - y.entropy_local_1),
                          std::abs(x.entropy_local_2 - y.entropy_local_2)});
    w.concurrence = std::max(w.concurrence, std::abs(x.concurrence - y.concurrence));
    w.negativity = std::max(w.negativity, std::abs(x.negativity - y.negativity));
  };
  auto conj_by = [](const ComplexMatrix& u, const DensityMatrix& rho) {
    ComplexMatrix m = u * rho.matrix() * dagger(u);
    return DensityMatrix(0.5 * (m + dagger(m)));
  };

  for (int trial = 0; trial < 20; ++trial) {
    const double theta = unit(rng) * kPi;
    const double y = unit(rng) * 2.0 * kPi;
    const double p = unit(rng);
    const ComplexMatrix phase = phase_unitary(y);

    // Canonical masker followed by the phase unitary.
    const ComplexMatrix& u = canonical_orthogonal_masker();
    const ComplexMatrix uy = phase * u;
    const DensityMatrix in = mix(zero, one, p);
    const double r_plain = masking_residual(apply_masker(u, zero, ancilla), apply_masker(u, one, ancilla));
    const double r_phase = masking_residual(apply_masker(uy, zero, ancilla), apply_masker(uy, one, ancilla));
    track(masker_w, r_plain, r_phase, apply_masker(u, in, ancilla), apply_masker(uy, in, ancilla));

    // Phase applied to the orthogonal and non-orthogonal masked families.
    const auto [c1, c2] = canonical_orthogonal_pair(theta);
    const DensityMatrix d1 = DensityMatrix::from_pure(c1), d2 = DensityMatrix::from_pure(c2);
    const DensityMatrix e1 = conj_by(phase, d1), e2 = conj_by(phase, d2);
    track(orth_w, masking_residual(d1, d2), masking_residual(e1, e2), mix(d1, d2, p), mix(e1, e2, p));

    const auto [s1, s2] = canonical_nonorthogonal_pair(theta / 2.0);
    const DensityMatrix f1 = DensityMatrix::from_pure(s1), f2 = DensityMatrix::from_pure(s2);
    const DensityMatrix g1 = conj_by(phase, f1), g2 = conj_by(phase, f2);
    track(nonorth_w, masking_residual(f1, f2), masking_residual(g1, g2), mix(f1, f2, p), mix(g1, g2, p));
  }
  const double tol = 1e-10;
  for (const auto& [label, w] : {std::pair<const char*, const Worst&>{"phase after canonical masker", masker_w},
                                 {"phase on orthogonal family", orth_w},
                                 {"phase on non-orthogonal family", nonorth_w}}) {
    const std::string prefix = std::string(label) + ": max change of ";
    rep.add(prefix + "masking residual", w.residual <= tol, w.residual, tol);
    rep.add(prefix + "S(rho)", w.s_global <= tol, w.s_global, tol);
    rep.add(prefix + "S(rho_1), S(rho_2)", w.s_local <= tol, w.s_local, tol);
    rep.add(prefix + "concurrence", w.concurrence <= tol, w.concurrence, tol);
    rep.add(prefix + "negativity", w.negativity <= tol, w.negativity, tol);
  }

  double worst_unitary = 0.0;
  for (double y : uniform_grid(0.0, 2.0 * kPi, 17)) worst_unitary = std::max(worst_unitary, unitarity_defect(phase_unitary(y)));
  rep.add("phase unitaries are unitary (max ||U^dagger U - I||)", worst_unitary <= 1e-12, worst_unitary, 1e-12);
  return rep;
}

const std::map<std::string, std::function<SuiteReport()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<SuiteReport()>, std::less<>> r{
      {"lemma1", lemma1_suite}, {"lemma2", lemma2_suite}, {"lemma3", lemma3_suite},
      {"thm1", thm1_suite},     {"thm2", thm2_suite},     {"appendix", appendix_suite},
  };
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

void SuiteReport::add(std::string description, bool ok, double measured, double tolerance) {
  checks.push_back({std::move(description), ok, measured, tolerance});
}

void SuiteReport::add(std::string description, bool ok) { add(std::move(description), ok, kNaN, kNaN); }

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma2", "lemma3", "thm1", "thm2", "appendix"};
  return names;
}

std::optional<SuiteReport> run_suite(std::string_view name) {
  if (name == "all") {
    SuiteReport all{"all", {}};
    for (const auto& n : suite_names()) {
      SuiteReport r = registry().find(n)->second();
      for (auto& c : r.checks) {
        c.description = n + ": " + c.description;
        all.checks.push_back(std::move(c));
      }
    }
    return all;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) return std::nullopt;
  return it->second();
}

void print_report(std::ostream& out, const SuiteReport& report, bool color) {
  const char* green = color ? "\x1b[32m" : "";
  const char* red = color ? "\x1b[31m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  for (const auto& c : report.checks) {
    out << (c.passed ? green : red) << (c.passed ? "[PASS] " : "[FAIL] ") << reset << c.description;
    if (!std::isnan(c.measured)) out << "  measured=" << format_real(c.measured) << " tol=" << format_real(c.tolerance);
    out << '\n';
  }
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(), [](const auto& c) { return !c.passed; });
  out << "suite " << report.suite << ": " << (report.checks.size() - failed) << "/" << report.checks.size()
      << " checks passed -> " << (report.passed() ? "PASSED" : "FAILED") << '\n';
}

double orthogonal_mixture_entropy(double p) {
  const double m = p <= 0.5 ? p : 1.0 - p;
  const double big = 0.5 * (1.0 + std::abs(1.0 - 2.0 * p));
  return -xlog2x(m) - xlog2x(big);
}

}  // namespace qmask
