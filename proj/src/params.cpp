#include "oscircle/params.hpp"

#include <algorithm>

namespace oscircle {

Grid Grid::make(double ell, std::size_t n_points) {
  if (!(ell > 0.0)) throw std::domain_error("grid half-length must be positive");
  if (n_points < 129 || n_points % 2 == 0)
    throw std::domain_error("grid needs an odd sample count of at least 129");
  Grid g;
  g.ell = ell;
  g.x.resize(n_points);
  const auto m = static_cast<std::ptrdiff_t>(n_points - 1);
  for (std::ptrdiff_t j = 0; j <= m; ++j) {
    // (2j - m) / m hits -1, 0, +1 exactly; endpoints and center are exact.
    g.x[static_cast<std::size_t>(j)] =
        ell * static_cast<double>(2 * j - m) / static_cast<double>(m);
  }
  return g;
}

std::vector<double> simpson_weights(const Grid& g) {
  const std::size_t n = g.size();
  const double h3 = g.spacing() / 3.0;
  std::vector<double> w(n, 0.0);
  w.front() = w.back() = h3;
  for (std::size_t j = 1; j + 1 < n; ++j) w[j] = (j % 2 == 1 ? 4.0 : 2.0) * h3;
  return w;
}

double integrate(const Grid& g, const std::vector<double>& integrand) {
  if (integrand.size() != g.size())
    throw std::invalid_argument("integrand length does not match grid");
  const auto w = simpson_weights(g);
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * integrand[j];
  return s;
}

double l2_norm(const SampledFunction& f) {
  const auto w = simpson_weights(f.grid);
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * std::norm(f.values[j]);
  return std::sqrt(s);
}

double SampledFunction::max_abs_value() const {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

double SampledFunction::max_abs_derivative() const {
  double m = 0.0;
  for (const auto& v : derivatives) m = std::max(m, std::abs(v));
  return m;
}

namespace {

template <typename T>
std::vector<T> fd4_impl(const Grid& g, const std::vector<T>& v) {
  if (v.size() != g.size())
    throw std::invalid_argument("sample length does not match grid");
  const std::size_t n = v.size();
  const double h = g.spacing();
  std::vector<T> d(n);
  for (std::size_t j = 2; j + 2 < n; ++j)
    d[j] = (v[j - 2] - 8.0 * v[j - 1] + 8.0 * v[j + 1] - v[j + 2]) / (12.0 * h);
  // one-sided fourth-order closures
  d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) / (12.0 * h);
  d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) / (12.0 * h);
  d[n - 1] = (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4] + 3.0 * v[n - 5]) / (12.0 * h);
  d[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4] - v[n - 5]) / (12.0 * h);
  return d;
}

}  // namespace

std::vector<cplx> fd4_derivative(const Grid& g, const std::vector<cplx>& v) {
  return fd4_impl(g, v);
}

std::vector<double> fd4_derivative(const Grid& g, const std::vector<double>& v) {
  return fd4_impl(g, v);
}

double quad_l2(const SampledFunction& f) {
  const auto w = simpson_weights(f.grid);
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * std::norm(f.values[j]);
  return s;
}

namespace detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j2 = 0; j2 < len / 2; ++j2) {
        const cplx u = a[i + j2];
        const cplx v2 = a[i + j2 + len / 2] * w;
        a[i + j2] = u + v2;
        a[i + j2 + len / 2] = u - v2;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& z : a) z /= static_cast<double>(n);
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& a, bool inverse) {
  std::vector<cplx> out = a;
  if (is_pow2(out.size())) {
    fft_radix2(out, inverse);
    return out;
  }
  const std::size_t n = a.size();
  const double sgn = inverse ? 2.0 : -2.0;
  for (std::size_t k = 0; k < n; ++k) {
    cplx s(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = sgn * kPi * static_cast<double>(k * j % n) / static_cast<double>(n);
      s += a[j] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = inverse ? s / static_cast<double>(n) : s;
  }
  return out;
}

namespace {

// signed integer wavenumber for bin k of an n-point transform
double wavenumber(std::size_t k, std::size_t n) {
  const auto ik = static_cast<std::ptrdiff_t>(k);
  const auto in = static_cast<std::ptrdiff_t>(n);
  return static_cast<double>(2 * ik < in ? ik : ik - in);
}

}  // namespace

std::vector<cplx> fourier_derivative_unique(const std::vector<cplx>& u, double ell) {
  auto c = dft(u, false);
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    double m = wavenumber(k, n);
    if (n % 2 == 0 && k == n / 2) m = 0.0;  // Nyquist mode has no odd derivative
    c[k] *= cplx(0.0, kPi / ell * m);
  }
  return dft(c, true);
}

std::vector<cplx> fourier_shift_unique(const std::vector<cplx>& u, double s, double ell) {
  auto c = dft(u, false);
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double phase = kPi / ell * wavenumber(k, n) * s;
    c[k] *= cplx(std::cos(phase), std::sin(phase));
  }
  return dft(c, true);
}

}  // namespace detail

SampledFunction differentiate(const SampledFunction& f, DiffMethod method) {
  SampledFunction out;
  out.grid = f.grid;
  if (method == DiffMethod::fd4) {
    out.values = fd4_derivative(f.grid, f.values);
    out.derivatives = fd4_derivative(f.grid, out.values);
    return out;
  }
  const double scale = std::max(f.max_abs_value(), 1e-300);
  if (std::abs(f.values.front() - f.values.back()) > 1e-9 * scale)
    throw std::invalid_argument(
        "fourier differentiation requires f(-ell) = f(ell)");
  std::vector<cplx> u(f.values.begin(), f.values.end() - 1);
  auto d = detail::fourier_derivative_unique(u, f.grid.ell);
  auto dd = detail::fourier_derivative_unique(d, f.grid.ell);
  d.push_back(d.front());
  dd.push_back(dd.front());
  out.values = std::move(d);
  out.derivatives = std::move(dd);
  return out;
}

}  // namespace oscircle
