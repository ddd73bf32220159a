#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oscircle/io.hpp"

using namespace oscircle;

namespace {

double cell(const FigureDataset& ds, std::size_t row, std::size_t col) {
  return std::strtod(ds.rows.at(row).at(col).c_str(), nullptr);
}

}  // namespace

TEST_CASE("format parsing") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK_THROWS_AS(parse_format("CSV"), std::invalid_argument);
}

TEST_CASE("axis parsing") {
  const AxisSpec a = parse_axis("0.5:4:8");
  CHECK(a.min == 0.5);
  CHECK(a.max == 4.0);
  CHECK(a.count == 8);
  CHECK_FALSE(a.log_spaced);
  CHECK(parse_axis("1:4:3:log").log_spaced);
  CHECK(parse_axis("2:2:1").count == 1);

  CHECK_THROWS_AS(parse_axis("1:2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("1:2:3:lin"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("2:1:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("0:1:3:log"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("a:2:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("1:2:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_axis("1:2:0"), std::invalid_argument);
}

TEST_CASE("axis values: exact endpoints, linear and log spacing") {
  const auto lin = axis_values({1.0, 4.0, 4, false});
  REQUIRE(lin.size() == 4);
  CHECK(lin.front() == 1.0);
  CHECK(lin.back() == 4.0);
  CHECK(lin[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(lin[2] == doctest::Approx(3.0).epsilon(1e-12));

  const auto lg = axis_values({1.0, 4.0, 3, true});
  REQUIRE(lg.size() == 3);
  CHECK(lg.front() == 1.0);
  CHECK(lg.back() == 4.0);
  CHECK(lg[1] == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(axis_values({2.0, 2.0, 1, false}) == std::vector<double>{2.0});
}

TEST_CASE("shortest round-trip rendering of doubles") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(0.0) == "0");
  for (double v : {kPi, 1.0 / 3.0, -0.5004169445767416, 1e300}) {
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("csv writer: byte determinism, escaping, metadata comment") {
  FigureDataset ds;
  ds.tag = "demo";
  ds.columns = {"x", "note"};
  ds.rows = {{"1.5", "hello, world"}, {"2", "say \"hi\""}};
  ds.metadata["a"] = 1;

  std::ostringstream once;
  std::ostringstream twice;
  write_csv(ds, once);
  write_csv(ds, twice);
  CHECK(once.str() == twice.str());
  CHECK(once.str() ==
        "# metadata: {\"a\":1}\n"
        "x,note\n"
        "1.5,\"hello, world\"\n"
        "2,\"say \"\"hi\"\"\"\n");
}

TEST_CASE("json writer round trip") {
  FigureDataset ds;
  ds.tag = "demo";
  ds.columns = {"x", "note"};
  ds.rows = {{"1.5", "plain"}};
  ds.metadata["a"] = 1;

  std::ostringstream os;
  write_json(ds, os);
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["tag"] == "demo");
  CHECK(j["columns"][0] == "x");
  CHECK(j["rows"][0]["x"] == "1.5");
  CHECK(j["rows"][0]["note"] == "plain");
  CHECK(j["metadata"]["a"] == 1);
}

TEST_CASE("spectrum command: lowered extension table") {
  const FigureDataset ds = cmd_spectrum({2.0, -1.0}, 6);
  REQUIRE(ds.rows.size() == 6);
  CHECK(ds.tag == "spectrum");
  REQUIRE(ds.columns.size() == 6);
  CHECK(ds.columns[5] == "disagreement");
  CHECK(ds.rows[0][0] == "0");
  CHECK(ds.rows[0][1] == "even");
  CHECK(std::abs(cell(ds, 0, 2) + 0.5) <= 1e-6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(cell(ds, i, 3) <= 1e-7);          // shooting residual at the root
    CHECK(cell(ds, i, 5) <= 5e-2);          // matrix disagreement, pollution worst
  }
  CHECK(ds.metadata["ell"] == 2.0);
  CHECK(ds.metadata["beta"] == -1.0);
  CHECK(ds.metadata["oracle_modes"] == 192);
  CHECK(ds.metadata["bracket_miss"] == false);

  CHECK_THROWS_AS(cmd_spectrum({2.0, -1.0}, 0), std::invalid_argument);
}

TEST_CASE("spectrum command: long segment recovers line levels") {
  const FigureDataset ds = cmd_spectrum({6.0, 0.0}, 6);
  REQUIRE(ds.rows.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::abs(cell(ds, i, 2) - (static_cast<double>(i) + 0.5)) <= 1e-3);
    CHECK(cell(ds, i, 5) <= 1e-6);
  }
  const FigureDataset one = cmd_spectrum({2.0, 0.0}, 1);
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0][1] == "even");
}

TEST_CASE("sweep command: fixed extension tags and row order") {
  SweepRequest req;
  req.ell_axis = {1.0, 2.0, 3, false};
  req.levels = 2;
  req.beta = 0.0;
  const FigureDataset ds = cmd_sweep(req);
  CHECK(ds.tag == "fig2");
  REQUIRE(ds.rows.size() == 6);
  CHECK(ds.rows[0][0] == "1");
  CHECK(ds.rows[0][2] == "0");
  CHECK(ds.rows[1][2] == "1");
  CHECK(ds.rows[2][0] == "1.5");
  CHECK(ds.rows[4][0] == "2");
  for (const auto& row : ds.rows) CHECK(row[5].empty());
  CHECK(ds.metadata["beta"] == 0.0);
  CHECK(ds.metadata["ell_axis"]["count"] == 3);

  req.ell_axis = {1.5, 2.0, 2, false};
  req.beta = 1.5;
  CHECK(cmd_sweep(req).tag == "fig5");
}

TEST_CASE("sweep command: two-dimensional grid keeps odd levels constant in beta") {
  SweepRequest req;
  req.ell_axis = {1.0, 2.0, 2, false};
  req.beta_axis = AxisSpec{-1.0, 1.0, 3, false};
  req.levels = 3;
  const FigureDataset ds = cmd_sweep(req);
  CHECK(ds.tag == "fig7");
  REQUIRE(ds.rows.size() == 18);
  CHECK(ds.metadata.contains("beta_axis"));

  // blocks of 3 rows per (ell, beta) point, ell outer, beta inner
  for (std::size_t block = 0; block < 6; ++block) {
    const std::string want_ell = block < 3 ? "1" : "2";
    const double want_beta = -1.0 + static_cast<double>(block % 3);
    for (std::size_t r = 3 * block; r < 3 * block + 3; ++r) {
      CHECK(ds.rows[r][0] == want_ell);
      CHECK(cell(ds, r, 1) == want_beta);
    }
  }

  // exactly one odd level among the lowest three at every point; its energy
  // string is identical across the beta grid
  for (int half = 0; half < 2; ++half) {
    std::vector<std::string> odd_energy;
    for (std::size_t block = 3 * half; block < 3 * half + 3; ++block) {
      int seen = 0;
      for (std::size_t r = 3 * block; r < 3 * block + 3; ++r) {
        if (ds.rows[r][3] == "odd") {
          ++seen;
          odd_energy.push_back(ds.rows[r][4]);
        }
      }
      CHECK(seen == 1);
    }
    REQUIRE(odd_energy.size() == 3);
    CHECK(odd_energy[0] == odd_energy[1]);
    CHECK(odd_energy[1] == odd_energy[2]);
  }
}

TEST_CASE("sweep command guards") {
  SweepRequest req;
  req.ell_axis = {0.0, 2.0, 3, false};
  CHECK_THROWS_AS(cmd_sweep(req), std::invalid_argument);
  req.ell_axis = {1.0, 9.0, 3, false};
  CHECK_THROWS_AS(cmd_sweep(req), std::invalid_argument);
  req.ell_axis = {1.0, 2.0, 1, false};
  CHECK_THROWS_AS(cmd_sweep(req), std::invalid_argument);
  req.ell_axis = {1.0, 2.0, 2, false};
  req.beta_axis = AxisSpec{0.0, 1.0, 1, false};
  CHECK_THROWS_AS(cmd_sweep(req), std::invalid_argument);
  req.beta_axis.reset();
  req.levels = 0;
  CHECK_THROWS_AS(cmd_sweep(req), std::invalid_argument);
}

TEST_CASE("eigenfunction command emits profiles in the requested order") {
  const FigureDataset ds = cmd_eigenfunctions({kPi, 0.0}, {1, 0}, 129);
  CHECK(ds.tag == "fig3");
  REQUIRE(ds.rows.size() == 258);
  CHECK(ds.rows[0][1] == "1");
  CHECK(ds.rows[129][1] == "0");
  CHECK(ds.rows[0][0] == format_double(-kPi));
  // center sample of the odd profile vanishes
  CHECK(cell(ds, 64, 2) == 0.0);

  REQUIRE(ds.metadata["levels"].size() == 2);
  CHECK(ds.metadata["levels"][0]["n"] == 1);
  CHECK(ds.metadata["levels"][0]["parity"] == "odd");
  CHECK(ds.metadata["levels"][1]["parity"] == "even");
  CHECK(std::abs(ds.metadata["levels"][1]["energy"].get<double>() - 0.5) <= 1e-2);
  CHECK(std::abs(ds.metadata["levels"][0]["energy"].get<double>() - 1.5) <= 1e-2);
  REQUIRE(ds.metadata["potential"].size() == 129);
  CHECK(std::abs(ds.metadata["potential"][0][1].get<double>() - kPi * kPi / 2.0) <= 1e-12);

  CHECK_THROWS_AS(cmd_eigenfunctions({kPi, 0.0}, {}, 129), std::invalid_argument);
  CHECK_THROWS_AS(cmd_eigenfunctions({kPi, 0.0}, {0}, 128), std::invalid_argument);
  CHECK_THROWS_AS(cmd_eigenfunctions({kPi, 0.0}, {0}, 65), std::invalid_argument);
}

TEST_CASE("ladder command: diagram rows, check table, writers") {
  const LadderDatasets lad = cmd_ladder(2.0, 1);
  CHECK(lad.all_pass);
  REQUIRE(lad.levels.rows.size() == 12);
  REQUIRE(lad.checks.rows.size() == 9);

  CHECK(lad.levels.rows[0][0] == "+1");
  CHECK(lad.levels.rows[0][2] == "even");
  CHECK(std::abs(cell(lad.levels, 0, 3) - 0.5) <= 1e-6);

  std::vector<std::string> plus_odd;
  std::vector<std::string> minus_odd;
  bool saw_minus_half = false;
  for (const auto& row : lad.levels.rows) {
    const bool odd = row[2] == "odd";
    CHECK(row[4] == (odd ? "true" : "false"));
    if (odd) {
      const double e = std::strtod(row[3].c_str(), nullptr);
      const double arrow = std::strtod(row[5].c_str(), nullptr);
      const double dir = row[0] == "+1" ? 1.0 : -1.0;
      CHECK(std::abs(arrow - (e + dir)) <= 1e-12);
      (row[0] == "+1" ? plus_odd : minus_odd).push_back(row[3]);
    } else {
      CHECK(row[5].empty());
      if (row[0] == "-1" && std::abs(std::strtod(row[3].c_str(), nullptr) + 0.5) <= 1e-6)
        saw_minus_half = true;
    }
  }
  CHECK(saw_minus_half);
  REQUIRE(!plus_odd.empty());
  REQUIRE(!minus_odd.empty());
  const std::size_t shared = std::min(plus_odd.size(), minus_odd.size());
  for (std::size_t i = 0; i < shared; ++i) CHECK(plus_odd[i] == minus_odd[i]);

  bool saw_obstruction = false;
  for (const auto& row : lad.checks.rows) {
    CHECK(row[4] == "true");
    if (row[0] == "obstruction_jump_fraction") saw_obstruction = true;
  }
  CHECK(saw_obstruction);
  CHECK(lad.checks.metadata["all_pass"] == true);
  CHECK(lad.levels.metadata["ell"] == 2.0);

  std::ostringstream csv;
  write_ladder_csv(lad, csv);
  CHECK(csv.str().find("extension,n,parity,E,shared_odd,arrow_to\n") != std::string::npos);
  CHECK(csv.str().find("check,k,measured,tolerance,pass\n") != std::string::npos);
  CHECK(csv.str().find("\n\n") != std::string::npos);

  std::ostringstream js;
  write_ladder_json(lad, js);
  const auto j = nlohmann::json::parse(js.str());
  CHECK(j["tag"] == "fig4");
  CHECK(j["all_pass"] == true);
  CHECK(j["levels"]["rows"].size() == 12);
  CHECK(j["checks"]["rows"].size() == 9);

  CHECK_THROWS_AS(cmd_ladder(2.0, 0), std::invalid_argument);
}

TEST_CASE("verify command runs a named suite") {
  const VerifyResult vr = cmd_verify("weber");
  CHECK(vr.pass);
  CHECK(vr.lines.size() >= 10);
  for (const auto& l : vr.lines) {
    CHECK(l.suite == "weber");
    CHECK(l.pass);
  }
  CHECK_THROWS_AS(cmd_verify("nosuch"), std::invalid_argument);
}

TEST_CASE("full verify battery passes every check") {
  const VerifyResult vr = cmd_verify("all");
  CHECK(vr.lines.size() >= 70);
  for (const char* suite :
       {"weber", "shooting", "galerkin", "ladder", "asymptotics"}) {
    const bool seen = std::any_of(vr.lines.begin(), vr.lines.end(),
                                  [&](const VerifyLine& l) { return l.suite == suite; });
    CHECK_MESSAGE(seen, suite);
  }
  for (const auto& l : vr.lines)
    CHECK_MESSAGE(l.pass, l.suite, "/", l.name, " measured ", l.measured,
                  " tolerance ", l.tolerance);
  CHECK(vr.pass);
}
