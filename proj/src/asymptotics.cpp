#include "oscircle/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oscircle/weber.hpp"

namespace oscircle {

double large_ell_envelope(double E, double ell, Parity parity) {
  if (!(ell >= 3.0) || ell > 8.0)
    throw std::invalid_argument("large_ell_envelope: needs 3 <= ell <= 8");

  double exact;
  double log_env;
  LogGammaValue lg{};
  if (parity == Parity::even) {
    exact = weber_even(E, ell).derivative;
    log_env = 0.5 * (std::log(kPi) + std::log(ell) + ell * ell) - E * std::log(ell);
    lg = log_gamma(0.25 - 0.5 * E);
  } else {
    exact = weber_odd(E, ell).value;
    log_env = 0.5 * (std::log(kPi) + ell * ell - std::log(4.0 * ell)) -
              E * std::log(ell);
    lg = log_gamma(0.75 - 0.5 * E);
  }
  if (exact == 0.0) return 0.0;
  // asymptotic value is envelope / Gamma; compare magnitudes in log space
  const double log_ratio = std::log(std::abs(exact)) - (log_env - lg.log_abs);
  const double sign = (exact > 0.0 ? 1.0 : -1.0) * static_cast<double>(lg.sign);
  return sign * std::exp(log_ratio);
}

namespace {

// one even level of the zero-potential comparison problem: root of
// z sin z = beta ell^2 cos z in (branch*pi, (branch+1)*pi), z = kappa ell
double even_free_root(double beta, double ell, std::size_t branch) {
  const double c = beta * ell * ell;
  auto g = [&](double z) { return z * std::sin(z) - c * std::cos(z); };
  double a = static_cast<double>(branch) * kPi;
  double b = a + kPi;
  double ga = g(a);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = g(m);
    if (gm == 0.0) return m;
    if ((gm < 0.0) != (ga < 0.0)) {
      b = m;
    } else {
      a = m;
      ga = gm;
    }
  }
  return 0.5 * (a + b);
}

// hyperbolic root y tanh y = -beta ell^2 (beta < 0), y = mu ell
double hyperbolic_root(double beta, double ell) {
  const double c = -beta * ell * ell;
  auto g = [&](double y) { return y * std::tanh(y) - c; };
  double b = 1.0;
  while (g(b) < 0.0) b *= 2.0;
  double a = 0.0;
  double ga = -c;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = g(m);
    if (gm == 0.0) return m;
    if ((gm < 0.0) != (ga < 0.0)) {
      b = m;
    } else {
      a = m;
      ga = gm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> free_particle_delta_spectrum(const OscillatorParams& params,
                                                 std::size_t k) {
  if (k == 0) return {};
  const double ell = params.ell;
  const double beta = params.beta;
  const double inv = 1.0 / (2.0 * ell * ell);

  std::vector<double> levels;
  if (beta < 0.0) {
    const double y = hyperbolic_root(beta, ell);
    levels.push_back(-y * y * inv);
  }
  for (std::size_t n = 1; n <= k; ++n) {
    const double z = static_cast<double>(n) * kPi;
    levels.push_back(z * z * inv);  // odd: kappa = n pi / ell
  }
  if (beta == 0.0) {
    for (std::size_t n = 0; n <= k; ++n) {
      const double z = static_cast<double>(n) * kPi;
      levels.push_back(z * z * inv);
    }
  } else {
    for (std::size_t branch = 0; branch <= k; ++branch) {
      const double z = even_free_root(beta, ell, branch);
      levels.push_back(z * z * inv);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.resize(std::min<std::size_t>(k, levels.size()));
  return levels;
}

AsymptoticReport small_ell_prediction(const OscillatorParams& params,
                                      std::size_t k_levels) {
  if (!(params.ell <= 0.2))
    throw std::invalid_argument("small_ell_prediction: needs ell <= 0.2");
  if (k_levels == 0) throw std::invalid_argument("small_ell_prediction: empty request");

  const double ell = params.ell;
  const double beta = params.beta;

  std::vector<double> pred;
  pred.push_back(0.5 * beta);  // lone n=0 even level
  for (std::size_t n = 1; n <= k_levels; ++n) {
    const double base = static_cast<double>(n * n) * kPi * kPi / (2.0 * ell * ell);
    pred.push_back(base);         // odd
    pred.push_back(base + beta);  // even, shifted by the extension
  }
  std::sort(pred.begin(), pred.end());
  pred.resize(k_levels);

  const double need = pred.back() + std::abs(beta) + 2.0;
  // the default scan floor flattens to -1 as ell -> 0, but the deep even
  // level sits near beta/2: pass an explicit floor covering it
  const double floor = std::min(default_e_min(params), 0.5 * beta - 1.0);
  const Spectrum spec = find_spectrum(params, need, floor);
  if (spec.pairs.size() < k_levels)
    throw std::runtime_error("small_ell_prediction: solver captured too few levels");

  AsymptoticReport rep{Regime::small_ell, pred, {}, 0.0};
  rep.computed.reserve(k_levels);
  for (std::size_t i = 0; i < k_levels; ++i)
    rep.computed.push_back(spec.pairs[i].energy);
  for (std::size_t i = 1; i < k_levels; ++i) {
    const double rel = std::abs(rep.computed[i] - pred[i]) / std::abs(pred[i]);
    rep.max_rel_error = std::max(rep.max_rel_error, rel);
  }
  return rep;
}

}  // namespace oscircle
