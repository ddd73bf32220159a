#include <exception>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oscircle/io.hpp"

namespace {

// exit codes: 0 success, 1 verification failure, 2 usage error, 3 numerical
// failure
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;
constexpr int kNumerical = 3;

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);  // binary: LF endings everywhere
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

void emit(const oscircle::FigureDataset& ds, oscircle::OutputFormat f,
          const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_out(out, file);
  if (f == oscircle::OutputFormat::csv)
    oscircle::write_csv(ds, os);
  else
    oscircle::write_json(ds, os);
}

oscircle::FigureDataset verify_dataset(const oscircle::VerifyResult& vr,
                                       const std::string& suite) {
  oscircle::FigureDataset ds;
  ds.tag = "verify";
  ds.columns = {"suite", "check", "measured", "tolerance", "pass"};
  std::size_t failures = 0;
  for (const auto& ln : vr.lines) {
    ds.rows.push_back({ln.suite, ln.name, oscircle::format_double(ln.measured),
                       oscircle::format_double(ln.tolerance),
                       ln.pass ? "true" : "false"});
    if (!ln.pass) ++failures;
  }
  ds.metadata["suite"] = suite;
  ds.metadata["checks"] = vr.lines.size();
  ds.metadata["failures"] = failures;
  ds.metadata["pass"] = vr.pass;
  return ds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral laboratory for a quantum oscillator on a circle"};
  app.require_subcommand(1);

  double ell = 2.0;
  double beta = 0.0;
  std::size_t levels = 6;
  std::size_t points = 513;
  std::size_t k_max = 3;
  std::string format = "csv";
  std::string out;
  std::string grid;
  std::string beta_grid;
  std::string suite = "all";

  const auto format_check = CLI::IsMember({"csv", "json"});

  auto* sp = app.add_subcommand(
      "spectrum", "low-lying levels with the matrix-oracle cross-check");
  sp->add_option("--ell", ell, "half-circumference, in (0, 8]")->required();
  sp->add_option("--beta", beta, "self-adjoint extension parameter");
  sp->add_option("--levels", levels, "number of levels to report");
  sp->add_option("--format", format, "csv or json")->check(format_check);
  sp->add_option("--out", out, "output path (stdout when omitted)");

  auto* sw = app.add_subcommand("sweep", "spectrum on an ell (optionally beta) grid");
  sw->add_option("--grid", grid, "ell axis, min:max:count[:log]")->required();
  sw->add_option("--beta-grid", beta_grid, "beta axis min:max:count for a 2D sweep");
  sw->add_option("--beta", beta, "fixed extension for 1D sweeps");
  sw->add_option("--levels", levels, "levels per grid point");
  sw->add_option("--format", format, "csv or json")->check(format_check);
  sw->add_option("--out", out, "output path (stdout when omitted)");

  auto* ef = app.add_subcommand("eigenfunctions",
                                "normalized wavefunction profiles with baselines");
  ef->add_option("--ell", ell, "half-circumference, in (0, 8]")->required();
  ef->add_option("--beta", beta, "self-adjoint extension parameter");
  ef->add_option("--levels", levels, "levels 0..N-1 to sample");
  ef->add_option("--points", points, "grid sample count (odd, >= 129)");
  ef->add_option("--format", format, "csv or json")->check(format_check);
  ef->add_option("--out", out, "output path (stdout when omitted)");

  auto* ld = app.add_subcommand(
      "ladder", "level diagram of both distinguished extensions plus the "
                "one-step ladder identities");
  ld->add_option("--ell", ell, "half-circumference, in (0, 8]")->required();
  ld->add_option("--k-max", k_max, "deepest ladder step to certify");
  ld->add_option("--format", format, "csv or json")->check(format_check);
  ld->add_option("--out", out, "output path (stdout when omitted)");

  auto* vf = app.add_subcommand("verify", "run the numbered invariant checks");
  vf->add_option("suite", suite,
                 "weber|shooting|galerkin|ladder|asymptotics|all");
  vf->add_option("--format", format, "csv or json")->check(format_check);
  vf->add_option("--out", out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const oscircle::OutputFormat f = oscircle::parse_format(format);
    if (sp->parsed()) {
      emit(oscircle::cmd_spectrum({ell, beta}, levels), f, out);
    } else if (sw->parsed()) {
      oscircle::SweepRequest req;
      req.ell_axis = oscircle::parse_axis(grid);
      if (!beta_grid.empty()) req.beta_axis = oscircle::parse_axis(beta_grid);
      req.beta = beta;
      req.levels = levels;
      emit(oscircle::cmd_sweep(req), f, out);
    } else if (ef->parsed()) {
      std::vector<std::size_t> indices(levels);
      std::iota(indices.begin(), indices.end(), std::size_t{0});
      emit(oscircle::cmd_eigenfunctions({ell, beta}, indices, points), f, out);
    } else if (ld->parsed()) {
      const oscircle::LadderDatasets lad = oscircle::cmd_ladder(ell, k_max);
      std::ofstream file;
      std::ostream& os = open_out(out, file);
      if (f == oscircle::OutputFormat::csv)
        oscircle::write_ladder_csv(lad, os);
      else
        oscircle::write_ladder_json(lad, os);
      if (!lad.all_pass) {
        std::cerr << "ladder: identity check failed\n";
        return kVerifyFail;
      }
    } else if (vf->parsed()) {
      const oscircle::VerifyResult vr = oscircle::cmd_verify(suite);
      emit(verify_dataset(vr, suite), f, out);
      std::size_t failures = 0;
      for (const auto& ln : vr.lines)
        if (!ln.pass) ++failures;
      std::cerr << "verify " << suite << ": " << (vr.lines.size() - failures)
                << "/" << vr.lines.size() << " checks passed\n";
      if (!vr.pass) return kVerifyFail;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  }
  return kOk;
}
