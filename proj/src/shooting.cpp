#include "oscircle/shooting.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "oscircle/galerkin.hpp"

namespace oscircle {

double default_e_min(const OscillatorParams& p) {
  return -1.0 - 0.5 * p.beta * p.beta * p.ell * p.ell;
}

double default_e_max(const OscillatorParams& p) {
  // twelve harmonic levels, or six free-particle pairs at small ell
  const double harmonic = 14.0 + std::abs(p.beta);
  const double free_pairs = 36.0 * kPi * kPi / (2.0 * p.ell * p.ell) + std::abs(p.beta) + 2.0;
  return std::max(harmonic, free_pairs);
}

double shooting_residual(double E, const OscillatorParams& params, Parity parity) {
  if (parity == Parity::odd) return weber_odd(E, params.ell).value;
  const WeberValue w = weber_even(E, params.ell);
  const double F = w.derivative + params.beta * params.ell * w.value;
  if (params.ell > 3.0) {
    if (F == 0.0) return 0.0;
    const double log_env = 0.5 * (std::log(kPi) + std::log(params.ell) +
                                  params.ell * params.ell) -
                           E * std::log(params.ell);
    return std::copysign(std::exp(std::log(std::abs(F)) - log_env), F);
  }
  return F;
}

namespace {

double scan_step(double ell) {
  return std::min(0.25, kPi * kPi / (8.0 * ell * ell));
}

// Bisection to near-machine width. The sign condition holds on entry.
double bisect(const OscillatorParams& p, Parity parity, double a, double b,
              double fa, std::size_t& iterations) {
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    if (b - a <= 4.0 * DBL_EPSILON * std::max({1.0, std::abs(a), std::abs(b)}))
      break;
    const double fm = shooting_residual(m, p, parity);
    ++iterations;
    if (fm == 0.0) return m;
    if ((fm < 0.0) != (fa < 0.0)) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> scan_parity(const OscillatorParams& p, Parity parity,
                                double e_start, double e_max,
                                ScanDiagnostics& diag) {
  std::vector<double> roots;
  const double step = scan_step(p.ell);
  double a = e_start;
  double fa = shooting_residual(a, p, parity);
  if (fa == 0.0) roots.push_back(a);
  while (a < e_max) {
    const double b = std::min(a + step, e_max);
    const double fb = shooting_residual(b, p, parity);
    if (fb == 0.0) {
      roots.push_back(b);  // eigenvalue sitting exactly on a scan node
    } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      ++diag.brackets;
      roots.push_back(bisect(p, parity, a, b, fa, diag.refinement_iterations));
    }
    a = b;
    fa = fb;
  }
  // drop duplicates from the node-hit path
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) {
                            return std::abs(x - y) <=
                                   1e-9 * std::max(1.0, std::abs(x));
                          }),
              roots.end());
  return roots;
}

SampledFunction build_eigenfunction(const OscillatorParams& p, double E,
                                    Parity parity, std::size_t n_points) {
  SampledFunction f = integrate_weber(E, parity, p.ell, (n_points - 1) / 2);
  const double nrm = l2_norm(f);
  const std::size_t mid = (n_points - 1) / 2;
  // sign convention: value(0) > 0 for even, derivative(0) > 0 for odd
  double sign = 1.0;
  if (parity == Parity::even && f.values[mid].real() < 0.0) sign = -1.0;
  if (parity == Parity::odd && f.derivatives[mid].real() < 0.0) sign = -1.0;
  const double scale = sign / nrm;
  for (auto& v : f.values) v *= scale;
  for (auto& d : f.derivatives) d *= scale;
  return f;
}

}  // namespace

Spectrum find_spectrum(const OscillatorParams& params,
                       std::optional<double> e_max, std::optional<double> e_min,
                       std::size_t n_points) {
  const double lo = e_min.value_or(default_e_min(params));
  const double hi = e_max.value_or(default_e_max(params));
  if (!(lo < hi)) throw std::invalid_argument("find_spectrum: e_min must be below e_max");

  Spectrum spec{params, {}, {}};
  const auto even_roots =
      scan_parity(params, Parity::even, lo, hi, spec.diagnostics);
  // the odd residual has no roots below the first free level and never
  // depends on beta; a shared scan origin makes odd energies bitwise equal
  // across extensions
  const auto odd_roots = scan_parity(params, Parity::odd, std::max(0.0, lo), hi,
                                     spec.diagnostics);

  std::vector<std::pair<double, Parity>> merged;
  for (double e : even_roots) merged.emplace_back(e, Parity::even);
  for (double e : odd_roots) merged.emplace_back(e, Parity::odd);
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second == Parity::even && y.second == Parity::odd;
  });

  spec.pairs.reserve(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    EigenPair pair{merged[i].first, merged[i].second, i, params,
                   build_eigenfunction(params, merged[i].first,
                                       merged[i].second, n_points)};
    spec.pairs.push_back(std::move(pair));
  }

  // density check: the matrix oracle gives variational upper bounds, so any
  // oracle level below the ceiling certifies a true level below it
  const double ceiling = hi - scan_step(params.ell);
  const std::size_t n_modes = 96;
  const auto oracle = oracle_spectrum(params, n_modes, 2 * n_modes + 1);
  std::size_t oracle_below = 0;
  for (double e : oracle)
    if (e <= ceiling) ++oracle_below;
  std::size_t found_below = 0;
  for (const auto& pr : spec.pairs)
    if (pr.energy <= ceiling) ++found_below;
  spec.diagnostics.density_checked = true;
  spec.diagnostics.bracket_miss = found_below < oracle_below;
  return spec;
}

EigenPair eigenfunction(const OscillatorParams& params, std::size_t n,
                        std::size_t n_points) {
  const Spectrum spec = find_spectrum(params, std::nullopt, std::nullopt, n_points);
  if (n >= spec.pairs.size())
    throw std::out_of_range("eigenfunction: index beyond computed spectrum");
  return spec.pairs[n];
}

double boundary_residual(const SampledFunction& f, double beta) {
  const double s = std::max(f.max_abs_value(), 1e-300);
  const double sp = std::max(f.max_abs_derivative(), 1e-300);
  const double ell = f.grid.ell;
  const cplx f_left = f.values.front();
  const cplx f_right = f.values.back();
  const cplx d_left = f.derivatives.front();
  const cplx d_right = f.derivatives.back();
  const double value_defect = std::abs(f_left - f_right) / s;
  const double deriv_defect =
      std::abs(d_left - d_right - 2.0 * ell * beta * f_right) / sp;
  return std::max(value_defect, deriv_defect);
}

}  // namespace oscircle
