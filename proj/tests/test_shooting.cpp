#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oscircle/shooting.hpp"

using namespace oscircle;

namespace {

double rel(double got, double want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

std::vector<double> odd_energies(const Spectrum& s) {
  std::vector<double> out;
  for (const auto& p : s.pairs)
    if (p.parity == Parity::odd) out.push_back(p.energy);
  return out;
}

}  // namespace

TEST_CASE("free extension spectrum at ell 2 against reference roots") {
  const Spectrum s = find_spectrum({2.0, 0.0}, 21.0);
  REQUIRE(s.pairs.size() >= 8);
  const double want[8] = {0.45422354997547971, 1.7648164387806368,
                          2.1489962454789308,  5.5846390790312421,
                          5.6591666068432773,  11.764982122266749,
                          11.791968733823334,  20.403520683495111};
  const Parity par[8] = {Parity::even, Parity::odd, Parity::even, Parity::odd,
                         Parity::even, Parity::odd, Parity::even, Parity::odd};
  for (int i = 0; i < 8; ++i) {
    CHECK(rel(s.pairs[i].energy, want[i]) <= 1e-8);
    CHECK(s.pairs[i].parity == par[i]);
    CHECK(s.pairs[i].index == static_cast<std::size_t>(i));
  }
}

TEST_CASE("short segment spectrum approaches the free pair structure") {
  const Spectrum s = find_spectrum({0.5, 0.0}, 80.0);
  REQUIRE(s.pairs.size() >= 4);
  CHECK(rel(s.pairs[0].energy, 0.041600562674371570) <= 1e-8);
  CHECK(rel(s.pairs[1].energy, 19.774534179208320) <= 1e-8);
  CHECK(rel(s.pairs[2].energy, 19.787259176179523) <= 1e-8);
  CHECK(rel(s.pairs[3].energy, 78.996921150747465) <= 1e-8);
}

TEST_CASE("distinguished extensions pin the ground level at plus or minus half") {
  for (double ell : {1.0, 2.0, 4.0}) {
    const Spectrum plus = find_spectrum({ell, 1.0}, 1.2);
    REQUIRE(plus.pairs.size() >= 1);
    CHECK(std::abs(plus.pairs[0].energy - 0.5) <= 1e-8);
    CHECK(plus.pairs[0].parity == Parity::even);

    const Spectrum minus = find_spectrum({ell, -1.0}, 0.2);
    REQUIRE(minus.pairs.size() == 1);
    CHECK(std::abs(minus.pairs[0].energy + 0.5) <= 1e-8);
    CHECK(minus.pairs[0].parity == Parity::even);
  }
}

TEST_CASE("negative extension at long segments still lands exactly on minus half") {
  const Spectrum s = find_spectrum({6.0, -1.0}, 0.2);
  REQUIRE(s.pairs.size() == 1);
  CHECK(std::abs(s.pairs[0].energy + 0.5) <= 1e-8);
}

TEST_CASE("whole spectrum at ell 4 for the raised extension") {
  const Spectrum s = find_spectrum({4.0, 1.0}, 6.0);
  REQUIRE(s.pairs.size() >= 6);
  const double want[6] = {0.5,  1.5000146030071240, 2.5000146030071240,
                          3.5016915385230500, 4.5016915385230500, 5.5394217970770440};
  for (int i = 0; i < 6; ++i) CHECK(std::abs(s.pairs[i].energy - want[i]) <= 1e-8);
}

TEST_CASE("lowered extension carries two even levels at the bottom") {
  const Spectrum s = find_spectrum({4.0, -1.0}, 1.0);
  REQUIRE(s.pairs.size() >= 2);
  CHECK(s.pairs[0].parity == Parity::even);
  CHECK(s.pairs[1].parity == Parity::even);
  CHECK(std::abs(s.pairs[0].energy + 0.5) <= 1e-8);
  CHECK(std::abs(s.pairs[1].energy - 0.50001460300712398) <= 1e-8);
}

TEST_CASE("odd levels do not depend on the extension, bitwise") {
  const auto a = odd_energies(find_spectrum({2.0, 0.0}, 23.0));
  const auto b = odd_energies(find_spectrum({2.0, 2.5}, 23.0));
  REQUIRE(a.size() >= 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("parities alternate at beta zero") {
  const Spectrum s = find_spectrum({2.0, 0.0}, 13.0);
  REQUIRE(s.pairs.size() >= 6);
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    CHECK(s.pairs[i].parity == (i % 2 == 0 ? Parity::even : Parity::odd));
    if (i > 0) CHECK(s.pairs[i].energy > s.pairs[i - 1].energy);
  }
}

TEST_CASE("spectra of the two distinguished extensions are unit shifts of each other") {
  const Spectrum minus = find_spectrum({2.0, -1.0}, 5.0);
  const Spectrum plus = find_spectrum({2.0, 1.0}, 6.2);
  REQUIRE(minus.pairs.size() >= 4);
  for (const auto& p : minus.pairs) {
    double best = 1e9;
    for (const auto& q : plus.pairs) best = std::min(best, std::abs(q.energy - (p.energy + 1.0)));
    CHECK(best <= 1e-8);
  }
}

TEST_CASE("eigenfunction normalization and sign conventions") {
  const EigenPair even = eigenfunction({2.0, 1.0}, 0);
  CHECK(even.parity == Parity::even);
  CHECK(std::abs(even.energy - 0.5) <= 1e-8);
  const std::size_t mid = even.function.size() / 2;
  CHECK(even.function.values[mid].real() > 0.0);
  CHECK(std::abs(l2_norm(even.function) - 1.0) <= 1e-10);
  // the raised-extension ground state is the plain gaussian
  const double x = even.function.grid.x[mid + 128];
  const double ratio = even.function.values[mid + 128].real() / even.function.values[mid].real();
  CHECK(rel(ratio, std::exp(-x * x / 2.0)) <= 1e-7);

  const EigenPair odd = eigenfunction({2.0, 0.0}, 1);
  CHECK(odd.parity == Parity::odd);
  CHECK(odd.function.derivatives[odd.function.size() / 2].real() > 0.0);
  CHECK(odd.function.values[odd.function.size() / 2] == cplx(0.0, 0.0));
  CHECK(std::abs(odd.function.values.back()) <= 1e-8 * odd.function.max_abs_value());
  CHECK(std::abs(l2_norm(odd.function) - 1.0) <= 1e-10);
}

TEST_CASE("boundary residual recognizes domain membership") {
  const EigenPair odd = eigenfunction({2.0, 0.0}, 1);
  // odd states satisfy the matching condition of every extension
  CHECK(boundary_residual(odd.function, 0.0) <= 1e-8);
  CHECK(boundary_residual(odd.function, 2.5) <= 1e-8);

  const EigenPair even = eigenfunction({2.0, 0.0}, 0);
  CHECK(boundary_residual(even.function, 0.0) <= 1e-8);
  CHECK(boundary_residual(even.function, 1.0) >= 1e-2);
}

TEST_CASE("scan diagnostics account for every root") {
  const Spectrum s = find_spectrum({2.0, 0.0});
  CHECK(s.diagnostics.density_checked);
  CHECK_FALSE(s.diagnostics.bracket_miss);
  CHECK(s.diagnostics.brackets == s.pairs.size());
  CHECK(s.diagnostics.refinement_iterations > 0);
}

TEST_CASE("residual of the lowered extension vanishes at minus half") {
  CHECK(std::abs(shooting_residual(-0.5, {1.0, -1.0}, Parity::even)) <= 1e-10);
}

TEST_CASE("window and index guards") {
  CHECK_THROWS_AS(find_spectrum({2.0, 0.0}, -5.0), std::invalid_argument);
  CHECK_THROWS_AS(eigenfunction({2.0, 0.0}, 99), std::out_of_range);
}
