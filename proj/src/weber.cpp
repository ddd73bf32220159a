#include "oscircle/weber.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace oscircle {

namespace {

struct SeriesResult {
  long double value = 0.0L;
  double digits_lost = 0.0;
  bool converged = false;
};

// Direct summation of 1F1(a, c; z). Tracks the largest partial quantity
// against the final sum; their ratio measures the cancellation.
SeriesResult kummer_series(long double a, long double c, long double z) {
  SeriesResult r;
  long double term = 1.0L;
  long double sum = 1.0L;
  long double peak = 1.0L;
  for (int k = 0; k < 500; ++k) {
    term *= (a + k) * z / ((c + k) * (k + 1));
    sum += term;
    const long double at = fabsl(term);
    peak = std::max(peak, at);
    if (at == 0.0L || (k >= 4 && at <= 1e-22L * fabsl(sum))) {
      r.converged = true;
      break;
    }
  }
  r.value = sum;
  const long double denom = std::max(fabsl(sum), LDBL_MIN);
  r.digits_lost = std::max(0.0, static_cast<double>(log10l(peak / denom)));
  return r;
}

// Best-effort 1F1: direct sum, with the Kummer transformation tried whenever
// the direct path cancels away more than four digits on z > 0, a < 0. The
// transformed series for z > 0 never loses digits to cancellation (its terms
// alternate against e^z growth), but in this parameter family it is also
// never more accurate, so the smaller tracked loss decides.
SeriesResult kummer_best(long double a, long double c, long double z) {
  SeriesResult direct = kummer_series(a, c, z);
  if (z > 0.0L && a < 0.0L && direct.digits_lost > 4.0) {
    SeriesResult tr = kummer_series(c - a, c, -z);
    tr.value *= expl(z);
    if (tr.converged && (!direct.converged || tr.digits_lost < direct.digits_lost))
      return tr;
  }
  return direct;
}

}  // namespace

double kummer_m(const KummerParams& p) {
  if (p.c != 0.5 && p.c != 1.5)
    throw std::domain_error("kummer_m: c must be 1/2 or 3/2");
  if (!(std::abs(p.z) <= 64.0))
    throw std::domain_error("kummer_m: |z| must not exceed 64");
  const SeriesResult r = kummer_best(p.a, p.c, p.z);
  if (!r.converged)
    throw std::runtime_error("kummer_m: series did not converge within 500 terms");
  return static_cast<double>(r.value);
}

LogGammaValue log_gamma(double z) {
  if (z <= 0.0 && z == std::floor(z))
    throw std::domain_error("log_gamma: pole at nonpositive integer");
  // Lanczos, g = 7, 9 coefficients.
  static const double g = 7.0;
  static const double coef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    const LogGammaValue rec = log_gamma(1.0 - z);
    const double s = std::sin(kPi * z);
    LogGammaValue out;
    out.log_abs = std::log(kPi) - std::log(std::abs(s)) - rec.log_abs;
    out.sign = (s < 0.0) ? -1 : 1;
    return out;
  }
  const double zm = z - 1.0;
  double acc = coef[0];
  for (int i = 1; i < 9; ++i) acc += coef[i] / (zm + i);
  const double t = zm + g + 0.5;
  LogGammaValue out;
  out.log_abs = 0.5 * std::log(2.0 * kPi) + (zm + 0.5) * std::log(t) - t + std::log(acc);
  out.sign = 1;
  return out;
}

namespace {

constexpr double kSeriesLossLimit = 6.0;  // digits; extended precision absorbs this

bool series_even(long double E, long double x, WeberValue& out, double& lost) {
  const long double z = x * x;
  const long double a = 0.25L - 0.5L * E;
  const SeriesResult m0 = kummer_best(a, 0.5L, z);
  const SeriesResult m1 = kummer_best(a + 1.0L, 1.5L, z);
  lost = std::max(m0.digits_lost, m1.digits_lost);
  if (!m0.converged || !m1.converged) return false;
  const long double damp = expl(-0.5L * z);
  out.value = static_cast<double>(damp * m0.value);
  out.derivative = static_cast<double>(x * damp * (4.0L * a * m1.value - m0.value));
  return true;
}

bool series_odd(long double E, long double x, WeberValue& out, double& lost) {
  const long double z = x * x;
  const long double b = 0.75L - 0.5L * E;
  const SeriesResult m0 = kummer_best(b, 1.5L, z);
  const SeriesResult m1 = kummer_best(b + 1.0L, 1.5L, z);
  lost = std::max(m0.digits_lost, m1.digits_lost);
  if (!m0.converged || !m1.converged) return false;
  const long double damp = expl(-0.5L * z);
  out.value = static_cast<double>(x * damp * m0.value);
  // x d/dz 1F1(b,c;z) enters through z M' = b (M(b+1) - M(b))
  out.derivative =
      static_cast<double>(damp * ((1.0L - z) * m0.value + 2.0L * b * (m1.value - m0.value)));
  return true;
}

// Dormand-Prince 5(4) for y = (u, u'), y' = (u', (x^2 - 2E) u).
struct Rhs {
  double E;
  void operator()(double x, const double y[2], double dy[2]) const {
    dy[0] = y[1];
    dy[1] = (x * x - 2.0 * E) * y[0];
  }
};

constexpr double kRelTol = 1e-11;

// Advances y from x to x_end exactly (last step clamped). Returns false on
// step underflow.
bool advance(const Rhs& f, double& x, double y[2], double x_end, double& h,
             double& ymax) {
  static const double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static const double a21 = 1.0 / 5;
  static const double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static const double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static const double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                      a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static const double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                      a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                      a65 = -5103.0 / 18656;
  static const double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                      b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static const double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                      e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  while (x < x_end) {
    if (x_end - x <= 4.0 * DBL_EPSILON * std::max(1.0, x_end)) {
      x = x_end;
      break;
    }
    h = std::min(h, x_end - x);
    if (h < 1e-14 * std::max(1.0, x_end))
      return false;
    double k1[2], k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], yt[2], y5[2];
    f(x, y, k1);
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
    f(x + c2 * h, yt, k2);
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(x + c3 * h, yt, k3);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(x + c4 * h, yt, k4);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(x + c5 * h, yt, k5);
    for (int i = 0; i < 2; ++i)
      yt[i] = y[i] +
              h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(x + h, yt, k6);
    for (int i = 0; i < 2; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(x + h, y5, k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc =
          1e-14 * ymax + kRelTol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (err <= 1.0) {
      x += h;
      y[0] = y5[0];
      y[1] = y5[1];
      ymax = std::max({ymax, std::abs(y[0]), std::abs(y[1])});
    }
    const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    h *= fac;
  }
  return true;
}

}  // namespace

namespace detail {

bool weber_series_tracked(double E, Parity parity, double x, WeberValue& out,
                          double& digits_lost) {
  const bool ok = (parity == Parity::even)
                      ? series_even(E, std::abs(x), out, digits_lost)
                      : series_odd(E, std::abs(x), out, digits_lost);
  if (!ok || digits_lost > kSeriesLossLimit) return false;
  if (x < 0.0) {
    if (parity == Parity::even)
      out.derivative = -out.derivative;
    else
      out.value = -out.value;
  }
  return true;
}

WeberValue weber_ode(double E, Parity parity, double x) {
  const double xa = std::abs(x);
  double y[2];
  if (parity == Parity::even) {
    y[0] = 1.0;
    y[1] = 0.0;
  } else {
    y[0] = 0.0;
    y[1] = 1.0;
  }
  const Rhs f{E};
  double t = 0.0, h = 1e-4, ymax = 1.0;
  if (!advance(f, t, y, xa, h, ymax))
    throw std::runtime_error("weber integration: step size underflow");
  WeberValue out{y[0], y[1]};
  if (x < 0.0) {
    if (parity == Parity::even)
      out.derivative = -out.derivative;
    else
      out.value = -out.value;
  }
  return out;
}

}  // namespace detail

namespace {

WeberValue weber_point(double E, Parity parity, double x) {
  if (!(std::abs(x) <= 8.0))
    throw std::domain_error("weber evaluation supported for |x| <= 8");
  if (std::abs(x) <= 1.0) {
    WeberValue out;
    double lost = 0.0;
    if (detail::weber_series_tracked(E, parity, x, out, lost)) return out;
  }
  return detail::weber_ode(E, parity, x);
}

}  // namespace

WeberValue weber_even(double E, double x) { return weber_point(E, Parity::even, x); }
WeberValue weber_odd(double E, double x) { return weber_point(E, Parity::odd, x); }

SampledFunction integrate_weber(double E, Parity parity, double x_max,
                                std::size_t n_steps) {
  if (!(x_max > 0.0) || x_max > 8.0)
    throw std::domain_error("integrate_weber: x_max must lie in (0, 8]");
  if (n_steps < 64)
    throw std::domain_error("integrate_weber: need at least 64 steps");

  const std::size_t n_points = 2 * n_steps + 1;
  SampledFunction f;
  f.grid = Grid::make(x_max, n_points);
  f.values.assign(n_points, 0.0);
  f.derivatives.assign(n_points, 0.0);

  const std::size_t mid = n_steps;  // index of x = 0
  double y[2];
  if (parity == Parity::even) {
    y[0] = 1.0;
    y[1] = 0.0;
  } else {
    y[0] = 0.0;
    y[1] = 1.0;
  }
  f.values[mid] = y[0];
  f.derivatives[mid] = y[1];

  const Rhs rhs{E};
  double t = 0.0, h = 1e-4, ymax = 1.0;
  for (std::size_t j = mid + 1; j < n_points; ++j) {
    if (!advance(rhs, t, y, f.grid.x[j], h, ymax))
      throw std::runtime_error("weber integration: step size underflow");
    f.values[j] = y[0];
    f.derivatives[j] = y[1];
  }
  const double vsign = (parity == Parity::even) ? 1.0 : -1.0;
  for (std::size_t j = 0; j < mid; ++j) {
    const std::size_t m = n_points - 1 - j;
    f.values[j] = vsign * f.values[m];
    f.derivatives[j] = -vsign * f.derivatives[m];
  }
  return f;
}

}  // namespace oscircle
