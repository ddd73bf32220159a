#pragma once

#include <Eigen/Dense>

#include "oscircle/params.hpp"

namespace oscircle {

// Truncated matrix of the H_beta quadratic form in the orthonormal circle
// Fourier basis e_n(x) = e^{in pi x / ell} / sqrt(2 ell), n = -N..N.
// All entries are real: kinetic diag n^2 pi^2/(2 ell^2); potential
// ell^2/6 on the diagonal, ell^2 (-1)^{m-n} / ((m-n)^2 pi^2) off it; the
// boundary (delta) term contributes (beta/2)(-1)^{m-n} everywhere.
struct GalerkinMatrix {
  OscillatorParams params;
  std::size_t n_modes;     // N
  Eigen::MatrixXd entries;  // dimension 2N+1, symmetric
};

GalerkinMatrix build_matrix(const OscillatorParams& params, std::size_t n_modes);

// Max difference between the first row's potential part and direct Simpson
// quadrature of (1/(4 ell)) int x^2 e^{-i(m-n) pi x / ell} dx. build_matrix
// runs this audit itself in debug builds and refuses to hand out a matrix
// that fails it.
double potential_row_defect(const GalerkinMatrix& m);

// Parity-adapted blocks of the same form: cosine modes (even sector, carries
// the full beta dependence) and sine modes (odd sector, beta-free since sines
// vanish at the antipodal point).
struct ParityBlocks {
  Eigen::MatrixXd cos_block;
  Eigen::MatrixXd sin_block;
};

ParityBlocks parity_blocks(const OscillatorParams& params, std::size_t n_modes);

// k smallest eigenvalues; variational upper bounds decreasing in N.
std::vector<double> oracle_spectrum(const OscillatorParams& params,
                                    std::size_t n_modes, std::size_t k);

// Compares the unit-circle matrix of (1/(2r^2)) p^2 + (r^2/2) q^2 against the
// matrix at ell = pi r, beta = 0: the rescaling maps basis to basis, so the
// matrices agree entrywise and the lowest levels match.
struct RescalingReport {
  double max_entry_difference;
  double max_level_difference;  // lowest 6 levels
  bool pass;                    // levels within 1e-3
};

RescalingReport rescaling_check(double r, std::size_t n_modes);

}  // namespace oscircle
