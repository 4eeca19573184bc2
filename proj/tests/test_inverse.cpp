#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/inverse.hpp"
#include "nlft/measure.hpp"
#include "nlft/types.hpp"

using namespace nlft;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// rho dx + M delta_0 on [-T, T): J_n = rho I + (M/2T) 1 1^T, and
// Sherman-Morrison gives Sigma(J_n^{-1}) = (n+1)/(rho + (n+1) M/(2T)).
double sherman_morrison_sum(double rho, double M, double T, std::size_t n) {
  const double k = static_cast<double>(n + 1);
  return k / (rho + k * M / (2.0 * T));
}

Measure one_minus_cos() {
  std::vector<double> xs, ys;
  for (int i = 0; i <= 2000; ++i) {
    const double x = -kPi + 2.0 * kPi * i / 2000.0;
    xs.push_back(x);
    ys.push_back(1.0 - std::cos(x));
  }
  xs.back() = kPi;
  return Measure(TableDensity{xs, ys}, {}, 2.0 * kPi);
}

}  // namespace

TEST_CASE("Gauss-Jordan inverse sums", "[inverse]") {
  CHECK_THAT(inverse_entry_sum_gauss_jordan({2.0, 1.0, 1.0, 2.0}, 2), WithinRel(2.0 / 3.0, 1e-15));
  CHECK_THAT(inverse_entry_sum_gauss_jordan({0.0, 1.0, 1.0, 0.0}, 2), WithinRel(2.0, 1e-15));
}

TEST_CASE("Toeplitz matrix layout", "[inverse]") {
  TrigMoments m{1.0, {3.0, 1.0, 0.5}};
  auto J = toeplitz_matrix(m, 2);
  REQUIRE(J.size() == 9);
  CHECK(J[0] == 3.0);
  CHECK(J[1] == 0.5);
  CHECK(J[2] == 0.25);
  CHECK(J[3] == 0.5);
  CHECK(J[8] == 3.0);
}

TEST_CASE("constant plus atom: steps from Sherman-Morrison", "[inverse]") {
  const double rho = 1.0 / std::sqrt(2.0 * kPi);
  const double M = std::sqrt(2.0 * kPi);
  for (double T : {kPi, 4.0 * kPi}) {
    Measure mu(ConstantDensity{rho}, {{0.0, M}}, 2.0 * T);
    const std::size_t N = 40;
    TrigMoments mom = trig_moments(mu, N - 1);
    auto sums = toeplitz_inverse_sums(mom, N);
    StepHamiltonian h = toeplitz_h11(mom, N);
    StepHamiltonian o = opuc_h11(mom, N);
    CHECK_THAT(h.step_width, WithinRel(kPi / (2.0 * T), 1e-15));
    for (std::size_t n = 0; n < N; ++n) {
      const double s = sherman_morrison_sum(rho, M, T, n);
      const double expected = n == 0 ? s : s - sherman_morrison_sum(rho, M, T, n - 1);
      CHECK_THAT(sums[n], WithinRel(s, 1e-12));
      CHECK_THAT(h.steps[n], WithinRel(expected, 1e-10));
      CHECK_THAT(o.steps[n], WithinRel(expected, 1e-10));
    }
  }
}

TEST_CASE("Lebesgue gives unit steps and zero reflection coefficients", "[inverse]") {
  Measure mu(ConstantDensity{1.0}, {}, 2.0);
  TrigMoments mom = trig_moments(mu, 9);
  for (double h : toeplitz_h11(mom, 10).steps) CHECK_THAT(h, WithinRel(1.0, 1e-14));
  for (double a : verblunsky_coefficients(mom, 10)) CHECK_THAT(a, WithinAbs(0.0, 1e-14));
  for (double c : inverse_nlft(mu, 10).masses) CHECK_THAT(c, WithinAbs(0.0, 1e-14));
}

TEST_CASE("(1 - cos x) dx has polynomial steps", "[inverse]") {
  const std::size_t N = 30;
  TrigMoments exact{kPi, std::vector<double>(N, 0.0)};
  exact.coeffs[0] = 1.0;
  exact.coeffs[1] = -1.0;
  for (auto method : {0, 1}) {
    StepHamiltonian h = method == 0 ? toeplitz_h11(exact, N) : opuc_h11(exact, N);
    DiscretePotential pot = potential_from_h11(h);
    CHECK(pot.first_index == 0);
    for (std::size_t n = 0; n < N; ++n) {
      const double k = static_cast<double>(n);
      CHECK_THAT(h.steps[n], WithinRel((k + 1.0) * (k + 2.0) / 2.0, 1e-11));
      if (n > 0) CHECK_THAT(pot.masses[n], WithinAbs(-0.5 * std::log((k + 2.0) / k), 1e-12));
    }
  }
}

TEST_CASE("(1 - cos x) dx through a sampled table", "[inverse]") {
  // The table is exact only to second order in the sample spacing.
  Measure mu = one_minus_cos();
  TrigMoments mom = trig_moments(mu, 2);
  CHECK_THAT(mom.coeffs[0], WithinAbs(1.0, 1e-12));
  CHECK_THAT(mom.coeffs[1], WithinAbs(-1.0, 1e-5));
  DiscretePotential pot = inverse_nlft(mu, 10);
  for (std::size_t n = 1; n < 10; ++n) {
    const double k = static_cast<double>(n);
    CHECK_THAT(pot.masses[n], WithinAbs(-0.5 * std::log((k + 2.0) / k), 1e-4));
  }
}

TEST_CASE("masses from two steps", "[inverse]") {
  StepHamiltonian h{0.5, {1.0, std::exp(2.0)}};
  DiscretePotential pot = potential_from_h11(h);
  REQUIRE(pot.masses.size() == 2);
  CHECK(pot.masses[0] == 0.0);
  CHECK_THAT(pot.masses[1], WithinAbs(-1.0, 1e-15));
  CHECK(pot.spacing == 0.5);
  CHECK_THAT(pot.position(1), WithinAbs(0.5, 0.0));
}

TEST_CASE("step Hamiltonian lookup", "[inverse]") {
  StepHamiltonian h{0.5, {1.0, 2.0, 3.0}};
  CHECK(h(0.0) == 1.0);
  CHECK(h(0.5) == 1.0);
  CHECK(h(0.51) == 2.0);
  CHECK(h(1.5) == 3.0);
  CHECK(h(10.0) == 3.0);
}

TEST_CASE("solvers agree with Gauss-Jordan", "[inverse]") {
  Measure mu(TableDensity{{-2.0, -1.0, 0.0, 1.0, 2.0}, {0.2, 1.5, 0.7, 1.5, 0.2}}, {{0.0, 0.4}, {-1.0, 0.1}, {1.0, 0.1}},
             4.0);
  const std::size_t N = 8;
  TrigMoments mom = trig_moments(mu, N - 1);
  auto lev = toeplitz_inverse_sums(mom, N, ToeplitzSolver::levinson);
  auto cho = toeplitz_inverse_sums(mom, N, ToeplitzSolver::cholesky);
  for (std::size_t n = 0; n < N; ++n) {
    const double gj = inverse_entry_sum_gauss_jordan(toeplitz_matrix(mom, n), n + 1);
    CHECK_THAT(lev[n], WithinRel(gj, 1e-12));
    CHECK_THAT(cho[n], WithinRel(gj, 1e-12));
  }
}

TEST_CASE("routes agree at larger N", "[inverse]") {
  Measure mu(TableDensity{{-3.0, 0.0, 3.0}, {0.5, 2.0, 0.5}}, {{0.0, 1.0}}, 6.0);
  const std::size_t N = 128;
  StepHamiltonian lev = hamiltonian_from_measure(mu, N, InverseMethod::toeplitz);
  StepHamiltonian op = hamiltonian_from_measure(mu, N, InverseMethod::opuc);
  StepHamiltonian cho = toeplitz_h11(trig_moments(mu, N - 1), N, ToeplitzSolver::cholesky);
  for (std::size_t n = 0; n < N; ++n) {
    CHECK_THAT(op.steps[n], WithinAbs(lev.steps[n], 1e-10 * std::max(1.0, lev.steps[n])));
    CHECK_THAT(cho.steps[n], WithinAbs(lev.steps[n], 1e-10 * std::max(1.0, lev.steps[n])));
  }
}

TEST_CASE("atoms only: moments lose definiteness", "[inverse]") {
  Measure mu(NoDensity{}, {{0.0, 2.0 * kPi}}, 2.0);
  TrigMoments mom = trig_moments(mu, 3);
  REQUIRE_THROWS_AS(toeplitz_h11(mom, 4), NumericalError);
  REQUIRE_THROWS_AS(toeplitz_h11(mom, 4, ToeplitzSolver::cholesky), NumericalError);
  REQUIRE_THROWS_AS(opuc_h11(mom, 4), NumericalError);
}

TEST_CASE("atom plus a tiny density stays solvable at small N", "[inverse]") {
  Measure mu(ConstantDensity{1e-6}, {{0.0, 2.0 * kPi}}, 2.0 * kPi);
  const std::size_t N = 6;
  TrigMoments mom = trig_moments(mu, N - 1);
  auto sums = toeplitz_inverse_sums(mom, N);
  for (std::size_t n = 0; n < N; ++n)
    CHECK_THAT(sums[n], WithinRel(sherman_morrison_sum(1e-6, 2.0 * kPi, kPi, n), 1e-6));
  REQUIRE_NOTHROW(opuc_h11(mom, N));
}

TEST_CASE("inverse input checks", "[inverse]") {
  REQUIRE_THROWS_AS(inverse_nlft(Measure::lebesgue(), 4), InputError);
  REQUIRE_THROWS_AS(inverse_nlft(Measure(ConstantDensity{1.0}, {}, 2.0), 0), InputError);
  REQUIRE_THROWS_AS(toeplitz_h11(TrigMoments{1.0, {1.0}}, 3), InputError);
}
