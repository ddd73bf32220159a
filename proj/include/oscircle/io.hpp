#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oscircle/params.hpp"

namespace oscircle {

enum class OutputFormat { csv, json };

OutputFormat parse_format(const std::string& text);  // "csv" | "json"

// Sweep axis "min:max:count[:log]".
struct AxisSpec {
  double min;
  double max;
  std::size_t count;
  bool log_spaced = false;
};

AxisSpec parse_axis(const std::string& text);
std::vector<double> axis_values(const AxisSpec& axis);

// Shortest-correct rendering capped at 17 significant digits, locale-free;
// identical inputs give byte-identical output.
std::string format_double(double v);

struct SweepRequest {
  AxisSpec ell_axis;
  std::optional<AxisSpec> beta_axis;  // 2D sweep when present
  double beta = 0.0;                  // fixed extension otherwise
  std::size_t levels = 8;
};

// Column-schema'd rows rendered as strings, with a metadata object carried
// alongside (emitted as-is in JSON; folded into columns or comments in CSV
// by the writers where the schema says so).
struct FigureDataset {
  std::string tag;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json metadata;
};

// rows (n, parity, E, shooting_residual, galerkin_E, |E - galerkin_E|)
FigureDataset cmd_spectrum(const OscillatorParams& params, std::size_t levels);

// rows (ell, beta, n, parity, E, error); per-point failures land in the
// error column and the sweep continues. Grid points run in parallel, output
// order is by grid index.
FigureDataset cmd_sweep(const SweepRequest& req);

// rows (x, n, value); metadata carries the level baselines (n, parity,
// energy) and the sampled potential curve, enough to replot the profile
// figure directly.
FigureDataset cmd_eigenfunctions(const OscillatorParams& params,
                                 const std::vector<std::size_t>& indices,
                                 std::size_t n_points);

// level diagram (extension, n, parity, E, shared_odd, arrow_to) plus
// per-identity check rows (check, k, measured, tolerance, pass)
struct LadderDatasets {
  FigureDataset levels;
  FigureDataset checks;
  bool all_pass;
};

LadderDatasets cmd_ladder(double ell, std::size_t k_max);

struct VerifyLine {
  std::string suite;
  std::string name;
  double measured;
  double tolerance;
  bool pass;
};

struct VerifyResult {
  std::vector<VerifyLine> lines;
  bool pass;
};

// suite: weber | shooting | galerkin | ladder | asymptotics | all
VerifyResult cmd_verify(const std::string& suite);

void write_csv(const FigureDataset& ds, std::ostream& os);
void write_json(const FigureDataset& ds, std::ostream& os);

// Ladder output carries two tables. CSV: the level diagram and the check
// table in one stream, separated by a blank line, each with its own header.
// JSON: one object {tag, levels, checks, all_pass}.
void write_ladder_csv(const LadderDatasets& lad, std::ostream& os);
void write_ladder_json(const LadderDatasets& lad, std::ostream& os);

}  // namespace oscircle
