#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oscircle {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Default sample counts. 513 suffices for everything smooth; discontinuity
// probes (jump detection at the antipodal point) use the finer grid.
inline constexpr std::size_t kDefaultPoints = 513;
inline constexpr std::size_t kProbePoints = 2049;

// The oscillator lives on a circle represented as the segment [-ell, ell]
// with the endpoints identified (antipodal point A). beta parametrizes the
// self-adjoint extension through psi'(-ell) = psi'(ell) + 2*ell*beta*psi(ell).
struct OscillatorParams {
  double ell;
  double beta;

  OscillatorParams(double half_length, double extension)
      : ell(half_length), beta(extension) {
    if (!(half_length > 0.0) || !(half_length <= 8.0))
      throw std::domain_error("half_length must lie in (0, 8]");
    if (!std::isfinite(extension))
      throw std::domain_error("beta must be finite");
  }

  double radius() const { return ell / kPi; }
};

// Uniform grid on [-ell, ell]. Both endpoints are samples (they are the same
// circle point); the count is odd so x = 0 is the middle sample, exactly.
struct Grid {
  double ell = 0.0;
  std::vector<double> x;

  static Grid make(double ell, std::size_t n_points);

  std::size_t size() const { return x.size(); }
  double spacing() const { return 2.0 * ell / static_cast<double>(x.size() - 1); }
};

using cplx = std::complex<double>;

// Values and derivatives sampled on a Grid. Complex storage: the ladder
// module needs e^{inx/r} eigenfunctions and Weyl phases; the spectral solver
// only ever fills the real parts.
struct SampledFunction {
  Grid grid;
  std::vector<cplx> values;
  std::vector<cplx> derivatives;

  std::size_t size() const { return grid.size(); }

  double max_abs_value() const;
  double max_abs_derivative() const;
};

// Composite Simpson weights: h/3 * [1, 4, 2, ..., 2, 4, 1]. Odd sample count
// makes every panel complete; the two endpoint weights sum to what a single
// interior even node carries, consistent with endpoint identification.
std::vector<double> simpson_weights(const Grid& g);

double l2_norm(const SampledFunction& f);
double integrate(const Grid& g, const std::vector<double>& integrand);

// Simpson approximation of the squared L2 norm, integral of |f|^2.
double quad_l2(const SampledFunction& f);

// Fourth-order first derivative of sampled values: centered five-point
// stencil inside, one-sided five-point closures at the four edge samples.
std::vector<cplx> fd4_derivative(const Grid& g, const std::vector<cplx>& v);
std::vector<double> fd4_derivative(const Grid& g, const std::vector<double>& v);

enum class DiffMethod { fd4, fourier };

// Derivative of sampled values. The fourier method treats the samples as one
// period of a circle function (the duplicated endpoint dropped) and is exact
// for band-limited inputs; it requires f(-ell) = f(ell). The result carries
// second-derivative samples obtained by the same method.
SampledFunction differentiate(const SampledFunction& f, DiffMethod method);

namespace detail {

// Discrete Fourier transform of the n-1 unique circle samples. Radix-2 when
// the length is a power of two, direct evaluation otherwise.
std::vector<cplx> dft(const std::vector<cplx>& a, bool inverse);

// Spectral derivative / circular shift on the unique-sample vector
// (length = grid size minus the duplicated endpoint).
std::vector<cplx> fourier_derivative_unique(const std::vector<cplx>& u, double ell);
std::vector<cplx> fourier_shift_unique(const std::vector<cplx>& u, double s, double ell);

}  // namespace detail

}  // namespace oscircle
