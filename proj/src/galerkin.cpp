#include "oscircle/galerkin.hpp"

#include <cmath>
#include <stdexcept>

namespace oscircle {

namespace {

// potential entry ell^2 (-1)^d / (d^2 pi^2), written through (ell/pi)^2 so
// the unit-radius matrix reproduces the angle-variable one bitwise
double potential_entry(double ell, long d) {
  if (d == 0) return ell * ell / 6.0;
  const double u = ell / kPi;
  const double s = (d % 2 == 0) ? 1.0 : -1.0;
  return s * u * u / static_cast<double>(d * d);
}

double parity_sign(long d) { return (d % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

GalerkinMatrix build_matrix(const OscillatorParams& params, std::size_t n_modes) {
  if (n_modes < 8) throw std::invalid_argument("build_matrix: need at least 8 modes");
  const long N = static_cast<long>(n_modes);
  const long dim = 2 * N + 1;
  GalerkinMatrix m{params, n_modes, Eigen::MatrixXd(dim, dim)};
  const double ell = params.ell;
  const double k_unit = kPi / ell;
  for (long i = 0; i < dim; ++i) {
    const long mi = i - N;
    for (long j = i; j < dim; ++j) {
      const long nj = j - N;
      const long d = mi - nj;
      double e = potential_entry(ell, d) + 0.5 * params.beta * parity_sign(d);
      if (d == 0) {
        const double k = static_cast<double>(mi) * k_unit;
        e += 0.5 * k * k;
      }
      m.entries(i, j) = e;
      m.entries(j, i) = e;
    }
  }
#ifndef NDEBUG
  if (potential_row_defect(m) > 1e-6 * ell * ell)
    throw std::logic_error("build_matrix: potential row fails quadrature audit");
#endif
  return m;
}

double potential_row_defect(const GalerkinMatrix& m) {
  const long N = static_cast<long>(m.n_modes);
  const double ell = m.params.ell;
  const std::size_t intervals = 32768;
  const double h = 2.0 * ell / static_cast<double>(intervals);
  double worst = 0.0;
  for (long j = 0; j <= 2 * N; ++j) {
    const long d = -j;  // row 0 carries mode -N, column j mode j - N
    // Simpson for (1/(4 ell)) int_{-ell}^{ell} x^2 cos(d pi x / ell) dx
    double acc = 0.0;
    for (std::size_t s = 0; s <= intervals; ++s) {
      const double x = -ell + h * static_cast<double>(s);
      const double g = x * x * std::cos(static_cast<double>(d) * kPi * x / ell);
      const double w = (s == 0 || s == intervals) ? 1.0 : (s % 2 == 1 ? 4.0 : 2.0);
      acc += w * g;
    }
    const double quad = acc * h / 3.0 / (4.0 * ell);
    double assembled = m.entries(0, j) - 0.5 * m.params.beta * parity_sign(d);
    if (d == 0) {
      const double k = static_cast<double>(-N) * (kPi / ell);
      assembled -= 0.5 * k * k;
    }
    worst = std::max(worst, std::abs(assembled - quad));
  }
  return worst;
}

ParityBlocks parity_blocks(const OscillatorParams& params, std::size_t n_modes) {
  if (n_modes < 8) throw std::invalid_argument("parity_blocks: need at least 8 modes");
  const long N = static_cast<long>(n_modes);
  const double ell = params.ell;
  const double beta = params.beta;
  const double k_unit = kPi / ell;
  ParityBlocks blocks{Eigen::MatrixXd(N + 1, N + 1), Eigen::MatrixXd(N, N)};

  auto W = [&](long d) { return potential_entry(ell, d); };

  // cosine sector: rows/cols 0..N, mode 0 is the constant
  for (long mi = 0; mi <= N; ++mi) {
    for (long nj = mi; nj <= N; ++nj) {
      double e;
      if (mi == 0 && nj == 0) {
        e = W(0) + 0.5 * beta;
      } else if (mi == 0) {
        e = std::sqrt(2.0) * W(nj) + beta * parity_sign(nj) / std::sqrt(2.0);
      } else {
        e = W(mi - nj) + W(mi + nj) + beta * parity_sign(mi + nj);
        if (mi == nj) {
          const double k = static_cast<double>(mi) * k_unit;
          e += 0.5 * k * k;
        }
      }
      blocks.cos_block(mi, nj) = e;
      blocks.cos_block(nj, mi) = e;
    }
  }

  // sine sector: modes 1..N, blind to beta
  for (long mi = 1; mi <= N; ++mi) {
    for (long nj = mi; nj <= N; ++nj) {
      double e = W(mi - nj) - W(mi + nj);
      if (mi == nj) {
        const double k = static_cast<double>(mi) * k_unit;
        e += 0.5 * k * k;
      }
      blocks.sin_block(mi - 1, nj - 1) = e;
      blocks.sin_block(nj - 1, mi - 1) = e;
    }
  }
  return blocks;
}

std::vector<double> oracle_spectrum(const OscillatorParams& params,
                                    std::size_t n_modes, std::size_t k) {
  const GalerkinMatrix m = build_matrix(params, n_modes);
  const std::size_t dim = 2 * n_modes + 1;
  if (k == 0 || k > dim)
    throw std::invalid_argument("oracle_spectrum: level count outside matrix size");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.entries,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("oracle_spectrum: eigensolver failed");
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = solver.eigenvalues()(static_cast<long>(i));
  return out;
}

RescalingReport rescaling_check(double r, std::size_t n_modes) {
  if (!(r > 0.0) || r > 2.0)
    throw std::invalid_argument("rescaling_check: radius must lie in (0, 2]");
  const OscillatorParams params{kPi * r, 0.0};
  const GalerkinMatrix segment = build_matrix(params, n_modes);

  // same operator in the angle variable theta = x/r on [-pi, pi]:
  // (1/(2 r^2)) p_theta^2 + (r^2/2) theta^2 against e^{in theta}/sqrt(2 pi)
  const long N = static_cast<long>(n_modes);
  const long dim = 2 * N + 1;
  Eigen::MatrixXd angle(dim, dim);
  const double ellb = kPi * r;
  for (long i = 0; i < dim; ++i) {
    const long mi = i - N;
    for (long j = 0; j < dim; ++j) {
      const long nj = j - N;
      const long d = mi - nj;
      double e;
      if (d == 0) {
        const double kb = static_cast<double>(mi) / r;
        e = 0.5 * kb * kb + ellb * ellb / 6.0;
      } else {
        const double s = (d % 2 == 0) ? 1.0 : -1.0;
        e = s * r * r / static_cast<double>(d * d);
      }
      angle(i, j) = e;
    }
  }

  RescalingReport report{0.0, 0.0, false};
  report.max_entry_difference = (segment.entries - angle).cwiseAbs().maxCoeff();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(angle, Eigen::EigenvaluesOnly);
  const auto oracle = oracle_spectrum(params, n_modes, 6);
  for (std::size_t i = 0; i < 6; ++i) {
    const double diff = std::abs(solver.eigenvalues()(static_cast<long>(i)) - oracle[i]);
    report.max_level_difference = std::max(report.max_level_difference, diff);
  }
  report.pass = report.max_level_difference <= 1e-3 &&
                report.max_entry_difference <= 1e-10 * std::max(1.0, ellb * ellb);
  return report;
}

}  // namespace oscircle
