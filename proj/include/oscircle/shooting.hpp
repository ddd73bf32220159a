#pragma once

#include <optional>

#include "oscircle/params.hpp"
#include "oscircle/weber.hpp"

namespace oscircle {

// One bound state: energy, parity, position in the merged ordered spectrum,
// and the L2-normalized eigenfunction on its grid.
struct EigenPair {
  double energy;
  Parity parity;
  std::size_t index;
  OscillatorParams params;
  SampledFunction function;
};

struct ScanDiagnostics {
  std::size_t brackets = 0;
  std::size_t refinement_iterations = 0;
  bool density_checked = false;
  // set when the matrix oracle sees more levels below the scan ceiling than
  // the scan found, i.e. a bracket was missed
  bool bracket_miss = false;
};

struct Spectrum {
  OscillatorParams params;
  std::vector<EigenPair> pairs;  // energies strictly increasing
  ScanDiagnostics diagnostics;
};

// Matching-condition residuals whose roots are the eigenvalues:
// odd sector F(E) = u_o(E, ell) for every beta; even sector
// F(E) = u'_e(E, ell) + beta*ell*u_e(E, ell). For ell > 3 the even residual
// is divided by its asymptotic envelope sqrt(pi*ell*e^{ell^2})*ell^{-E} so
// bracketing works on O(1) numbers.
double shooting_residual(double E, const OscillatorParams& params, Parity parity);

// Lower bound below every bound state: -1 - beta^2 ell^2 / 2.
double default_e_min(const OscillatorParams& params);
// High enough to capture at least 12 levels in either regime.
double default_e_max(const OscillatorParams& params);

// All eigenvalues in [e_min, e_max] of both parities, bisected to
// near-machine width, merged and indexed, with normalized eigenfunctions.
// A post-hoc level count against the Fourier matrix oracle flags missed
// brackets in the diagnostics.
Spectrum find_spectrum(const OscillatorParams& params,
                       std::optional<double> e_max = std::nullopt,
                       std::optional<double> e_min = std::nullopt,
                       std::size_t n_points = kDefaultPoints);

// n-th eigenfunction (index into the merged spectrum), normalized, with sign
// fixed by value(0) > 0 (even) or derivative(0) > 0 (odd).
EigenPair eigenfunction(const OscillatorParams& params, std::size_t n,
                        std::size_t n_points = kDefaultPoints);

// Scale-free defect of membership in the beta domain: the larger of
// |f(-ell) - f(ell)| / max|f| and |f'(-ell) - f'(ell) - 2*ell*beta*f(ell)| / max|f'|.
double boundary_residual(const SampledFunction& f, double beta);

}  // namespace oscircle
