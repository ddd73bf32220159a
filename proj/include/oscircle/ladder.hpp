#pragma once

#include "oscircle/params.hpp"
#include "oscircle/shooting.hpp"

namespace oscircle {

// a_beta = (beta q + i p)/sqrt(2): plain maps f to (beta x f + f')/sqrt(2),
// dagger to (beta x f - f')/sqrt(2). The result's derivative samples come
// from fourth-order finite differences of the result values (the analytic
// derivative would need f'', which sampled inputs lack).
SampledFunction apply_a_beta(const SampledFunction& f, double beta, bool dagger);

// p acting through the carried derivative samples: values -> -i f'.
SampledFunction apply_p(const SampledFunction& f);

struct LadderReport {
  double eigen_residual;    // relative L2 defect of the eigen-relation
  double boundary_defect;   // from boundary_residual
  double value_jump;        // |f(-ell) - f(ell)|
  double derivative_jump;   // |f'(-ell) - f'(ell)|
  bool pass;
};

// Certifies the one-step ladder remnant at k >= 1: v = a^dag u_{2k-1} is an
// even eigenfunction of the beta=+1 extension at E_{2k-1}+1 (ODE residual,
// boundary condition, v(ell) != 0), and w = a u_{2k+1} one of the beta=-1
// extension at E_{2k+1}-1. Failures are reported in the flags, not thrown.
struct LadderStepReport {
  LadderReport up;    // v = a^dag u_{2k-1} against energy E+1
  LadderReport down;  // w = a u_{2k+1} against energy E-1
  double up_boundary_identity;   // relative defect of v'(-ell) = -v'(ell) = ell v(ell)
  double down_boundary_identity; // relative defect of w'(ell) = ell w(ell)
  double up_end_value;           // |v(ell)|, must be nonzero
  double closure_residual;       // a(a^dag u) returned to u, relative
  bool pass;
};

LadderStepReport ladder_step_check(double ell, std::size_t k,
                                   std::size_t n_points = kDefaultPoints);

// Applies a^dag to an even eigenfunction of the beta=+1 extension and
// measures the value jump at the antipodal point; a genuine jump (exceeding
// 0.1 x max amplitude) certifies the result left the H^1 domain.
LadderReport obstruction_check(double ell, const EigenPair& source);

// Eigenpairs of a (plain) and a^dag: eigenvalue i n / (sqrt(2) r) with
// xi_n = e^{-x^2/2} e^{i n x / r} (plain) or eta_n = e^{+x^2/2} e^{-i n x / r}
// (dagger). Derivatives carried analytically.
struct AnnihilationEigenpair {
  cplx eigenvalue;
  SampledFunction function;
  double residual;  // ||(op - lambda) f|| / ||f||
};

AnnihilationEigenpair annihilation_eigenpair(int n, const OscillatorParams& params,
                                             bool dagger,
                                             std::size_t n_points = kDefaultPoints);

// Norm defect of the Weyl relation e^{itq} e^{isp} = e^{-its} e^{isp} e^{itq}
// on the circle: translation by s through Fourier interpolation, e^{itq} as
// multiplication by the sawtooth phase. Nonzero defect concentrates on the
// arc wrapping through the antipodal point.
double weyl_defect(double s, double t, const SampledFunction& f);

// || [a_beta, a_beta^dag] f - beta f || / ||f|| with the input derivative
// taken spectrally and operator outputs differentiated by the finite
// difference rule of apply_a_beta. Requires f to vanish at the antipodal
// point.
double commutator_residual(const SampledFunction& f, double beta);

// Gaussian similarity scaling S = e^{-q^2/2} with its inverse, for the
// a = (i/sqrt 2) S p S^{-1} relation.
struct SimilarityScaling {
  std::vector<double> s;      // e^{-x^2/2} on the grid
  std::vector<double> s_inv;  // e^{+x^2/2}
};

SimilarityScaling similarity_scaling(const Grid& grid);

}  // namespace oscircle
