#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "oscircle/asymptotics.hpp"
#include "oscircle/galerkin.hpp"
#include "oscircle/io.hpp"
#include "oscircle/ladder.hpp"
#include "oscircle/shooting.hpp"
#include "oscircle/weber.hpp"

namespace py = pybind11;

namespace {

using namespace oscircle;

const char* parity_str(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

Spectrum solve(double ell, double beta, std::size_t levels) {
  const OscillatorParams params{ell, beta};
  double e_max = default_e_max(params);
  for (int tries = 0; tries < 8; ++tries) {
    Spectrum s = find_spectrum(params, e_max);
    if (s.pairs.size() >= levels) return s;
    e_max = 1.6 * e_max + 2.0;
  }
  throw std::runtime_error("requested level count not reached");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "spectral solver for the quantum oscillator on a circle";

  m.def(
      "spectrum",
      [](double ell, double beta, std::size_t levels) {
        const Spectrum s = solve(ell, beta, levels);
        std::vector<std::pair<double, std::string>> out;
        out.reserve(levels);
        for (std::size_t i = 0; i < levels; ++i)
          out.emplace_back(s.pairs[i].energy, parity_str(s.pairs[i].parity));
        return out;
      },
      py::arg("ell"), py::arg("beta") = 0.0, py::arg("levels") = 8,
      "Lowest levels of H_beta as (energy, parity) pairs.");

  m.def(
      "eigenfunction",
      [](double ell, double beta, std::size_t n, std::size_t n_points) {
        const EigenPair p = eigenfunction({ell, beta}, n, n_points);
        std::vector<double> vals(p.function.size());
        for (std::size_t j = 0; j < vals.size(); ++j)
          vals[j] = p.function.values[j].real();
        return py::make_tuple(p.function.grid.x, vals, p.energy,
                              parity_str(p.parity));
      },
      py::arg("ell"), py::arg("beta") = 0.0, py::arg("n") = 0,
      py::arg("n_points") = kDefaultPoints,
      "Normalized n-th eigenfunction: (x, values, energy, parity).");

  m.def(
      "oracle_spectrum",
      [](double ell, double beta, std::size_t n_modes, std::size_t k) {
        return oracle_spectrum({ell, beta}, n_modes, k);
      },
      py::arg("ell"), py::arg("beta") = 0.0, py::arg("n_modes") = 128,
      py::arg("k") = 8,
      "Lowest k levels from the Fourier matrix discretization.");

  m.def(
      "shooting_residual",
      [](double E, double ell, double beta, const std::string& parity) {
        return shooting_residual(E, {ell, beta}, parse_parity(parity));
      },
      py::arg("E"), py::arg("ell"), py::arg("beta") = 0.0,
      py::arg("parity") = "even",
      "Matching-condition residual whose roots are the eigenvalues.");

  m.def(
      "weber_even",
      [](double E, double x) {
        const WeberValue w = weber_even(E, x);
        return std::make_pair(w.value, w.derivative);
      },
      py::arg("E"), py::arg("x"), "Even solution of u'' = (x^2 - 2E) u.");

  m.def(
      "weber_odd",
      [](double E, double x) {
        const WeberValue w = weber_odd(E, x);
        return std::make_pair(w.value, w.derivative);
      },
      py::arg("E"), py::arg("x"), "Odd solution of u'' = (x^2 - 2E) u.");

  m.def(
      "kummer",
      [](double a, double c, double z) { return kummer_m({a, c, z}); },
      py::arg("a"), py::arg("c"), py::arg("z"),
      "Confluent hypergeometric 1F1(a, c; z), c in {1/2, 3/2}.");

  m.def(
      "ladder_step",
      [](double ell, std::size_t k) {
        const LadderStepReport r = ladder_step_check(ell, k);
        py::dict d;
        d["raise_ode_residual"] = r.up.eigen_residual;
        d["raise_boundary_defect"] = r.up.boundary_defect;
        d["raise_boundary_identity"] = r.up_boundary_identity;
        d["lower_ode_residual"] = r.down.eigen_residual;
        d["lower_boundary_defect"] = r.down.boundary_defect;
        d["lower_boundary_identity"] = r.down_boundary_identity;
        d["closure_residual"] = r.closure_residual;
        d["end_value"] = r.up_end_value;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("ell"), py::arg("k") = 1,
      "One-step ladder remnant certificates at step k.");

  m.def(
      "large_ell_envelope",
      [](double E, double ell, const std::string& parity) {
        return large_ell_envelope(E, ell, parse_parity(parity));
      },
      py::arg("E"), py::arg("ell"), py::arg("parity") = "even",
      "Ratio of the matching residual to its asymptotic envelope.");

  m.def(
      "free_delta_spectrum",
      [](double ell, double beta, std::size_t k) {
        return free_particle_delta_spectrum({ell, beta}, k);
      },
      py::arg("ell"), py::arg("beta") = 0.0, py::arg("k") = 8,
      "Exact levels of the zero-potential analogue.");

  m.def(
      "verify",
      [](const std::string& suite) {
        const VerifyResult vr = cmd_verify(suite);
        py::list rows;
        for (const auto& ln : vr.lines)
          rows.append(py::make_tuple(ln.suite, ln.name, ln.measured,
                                     ln.tolerance, ln.pass));
        return py::make_tuple(vr.pass, rows);
      },
      py::arg("suite") = "all",
      "Run an invariant suite; returns (pass, [(suite, check, measured, "
      "tolerance, pass), ...]).");
}
