#pragma once

#include "oscircle/params.hpp"
#include "oscircle/shooting.hpp"

namespace oscircle {

enum class Regime { large_ell, small_ell };

struct AsymptoticReport {
  Regime regime;
  std::vector<double> predicted;
  std::vector<double> computed;
  double max_rel_error;
};

// Ratio of the exact matching residual to its asymptotic form, evaluated in
// log space: even u'_e(E, ell) against sqrt(pi ell e^{ell^2}) ell^{-E} /
// Gamma(1/4 - E/2), odd u_o(E, ell) against sqrt(pi e^{ell^2}/(4 ell))
// ell^{-E} / Gamma(3/4 - E/2). Approaches 1 as ell grows. Requires ell >= 3
// and the gamma argument away from a pole.
double large_ell_envelope(double E, double ell, Parity parity);

// Free-particle predictions at small ell: odd levels n^2 pi^2/(2 ell^2),
// even levels n^2 pi^2/(2 ell^2) + beta for n >= 1, and beta/2 for the n=0
// even level (exact for beta = +-1 at every ell, and the small-ell limit of
// the delta analogue for general beta). Compared against find_spectrum; the
// n=0 even entry is excluded from max_rel_error (its comparison is absolute).
AsymptoticReport small_ell_prediction(const OscillatorParams& params,
                                      std::size_t k_levels);

// Exact spectrum of the zero-potential analogue: odd E = (n pi / ell)^2 / 2;
// even levels from -kappa sin(kappa ell) + beta ell cos(kappa ell) = 0, plus
// the hyperbolic (negative-energy) root when beta < 0.
std::vector<double> free_particle_delta_spectrum(const OscillatorParams& params,
                                                 std::size_t k);

}  // namespace oscircle
