#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "nlft/errors.hpp"
#include "nlft/herglotz.hpp"
#include "nlft/quadrature.hpp"
#include "nlft/measure.hpp"
#include "nlft/types.hpp"

using namespace nlft;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const cplx kI{0.0, 1.0};

const std::vector<cplx> kPoints{{0.0, 1.0}, {0.3, 0.2}, {-2.0, 0.7}, {5.0, 3.0}, {-0.1, 1e-4}};

// Poisson integral of a piecewise-linear density by plain quadrature.
double poisson_by_quadrature(const TableDensity& t, cplx z) {
  double sum = 0.0;
  for (std::size_t i = 1; i < t.xs.size(); ++i) {
    auto f = [&](double s) { return t(s) * z.imag() / ((s - z.real()) * (s - z.real()) + z.imag() * z.imag()); };
    sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, t.xs[i - 1], t.xs[i], 20, 1e-14);
  }
  return sum / kPi;
}

}  // namespace

TEST_CASE("Lebesgue measure has S = 1", "[herglotz]") {
  for (cplx z : kPoints) {
    cplx s = schwarz_transform(Measure::lebesgue(), z).value;
    CHECK_THAT(s.real(), WithinAbs(1.0, 1e-13));
    CHECK_THAT(s.imag(), WithinAbs(0.0, 1e-13));
    CHECK_THAT(std::abs(schur_from_measure(Measure::lebesgue(), z).value), WithinAbs(0.0, 1e-13));
  }
}

TEST_CASE("point mass pi at the origin", "[herglotz]") {
  Measure mu(NoDensity{}, {{0.0, kPi}});
  for (cplx z : kPoints) {
    const double r2 = std::norm(z);
    CHECK_THAT(poisson_integral(mu, z), WithinRel(z.imag() / r2, 1e-13));
    CHECK_THAT(conjugate_poisson_integral(mu, z), WithinAbs(z.real() / r2, 1e-13 * std::abs(z.real() / r2) + 1e-15));
    cplx s = schwarz_transform(mu, z).value;
    CHECK(std::abs(s - kI / z) <= 1e-13 * std::abs(kI / z));
  }
}

TEST_CASE("S = P + iQ", "[herglotz]") {
  Measure mu(TableDensity{{-3.0, -1.0, 0.5, 2.0}, {0.0, 2.0, 0.5, 0.0}}, {{0.3, 1.5}, {-4.0, 0.2}});
  for (cplx z : kPoints) {
    cplx s = schwarz_transform(mu, z).value;
    CHECK_THAT(s.real(), WithinAbs(poisson_integral(mu, z), 1e-11));
    CHECK_THAT(s.imag(), WithinAbs(conjugate_poisson_integral(mu, z), 1e-11));
  }
}

TEST_CASE("closed-form table Poisson integral matches quadrature", "[herglotz]") {
  TableDensity t{{-3.0, -1.0, 0.5, 2.0}, {0.0, 2.0, 0.5, 0.0}};
  Measure mu(t, {});
  for (cplx z : {cplx(0.0, 1.0), cplx(0.3, 0.2), cplx(-2.0, 0.7), cplx(5.0, 3.0)})
    CHECK_THAT(poisson_integral(mu, z), WithinAbs(poisson_by_quadrature(t, z), 1e-12));
}

TEST_CASE("Poisson integral requires the upper half-plane", "[herglotz]") {
  REQUIRE_THROWS_AS(poisson_integral(Measure::lebesgue(), cplx(0.0, 0.0)), InputError);
  REQUIRE_THROWS_AS(conjugate_poisson_integral(Measure::lebesgue(), cplx(1.0, -1.0)), InputError);
}

TEST_CASE("real z away from the support", "[herglotz]") {
  Measure mu(NoDensity{}, {{0.0, kPi}});
  cplx s = schwarz_transform(mu, cplx(2.0, 0.0)).value;
  CHECK(std::abs(s - kI / 2.0) < 1e-14);
  REQUIRE_THROWS(schwarz_transform(mu, cplx(0.0, 0.0)));
  REQUIRE_THROWS(schwarz_transform(Measure::lebesgue(), cplx(1.0, 0.0)));
}

TEST_CASE("periodized constant plus atom has a cotangent transform", "[herglotz][periodic]") {
  const double rho = 1.0 / std::sqrt(2.0 * kPi);
  const double M = std::sqrt(2.0 * kPi);
  for (double T : {kPi, 2.0 * kPi, 7.5}) {
    Measure mu(ConstantDensity{rho}, {{0.0, M}}, 2.0 * T);
    for (cplx z : kPoints) {
      // Re cot(-i pi/(2T)) = 0, so only the z-dependent cotangent remains.
      cplx expected = rho + kI * M / (2.0 * T) * (std::cos(kPi * z / (2.0 * T)) / std::sin(kPi * z / (2.0 * T)));
      cplx s = schwarz_transform(mu, z).value;
      CHECK(std::abs(s - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
    cplx si = schwarz_transform(mu, kI).value;
    CHECK_THAT(si.real(), WithinRel(rho + M / (2.0 * T) / std::tanh(kPi / (2.0 * T)), 1e-13));
  }
}

TEST_CASE("periodic flat table matches the periodic constant", "[herglotz][periodic]") {
  const double T = 1.5;
  Measure table(TableDensity{{-T, 0.0, T}, {0.7, 0.7, 0.7}}, {}, 2.0 * T);
  for (cplx z : kPoints) {
    cplx s = schwarz_transform(table, z).value;
    CHECK_THAT(s.real(), WithinAbs(0.7, 1e-10));
    CHECK_THAT(s.imag(), WithinAbs(0.0, 1e-10));
  }
}

TEST_CASE("periodic tent matches the periodic Poisson kernel", "[herglotz][periodic]") {
  const double T = 1.0;
  TableDensity tent{{-T, 0.0, T}, {0.0, 2.0, 0.0}};
  Measure mu(tent, {}, 2.0 * T);
  for (cplx z : {cplx(0.25, 0.6), cplx(3.1, 0.05), cplx(-0.4, 2e-4)}) {
    // Sum of y/((x-t-2Tm)^2+y^2) over m, written as a single closed form.
    auto kernel = [&](double s) {
      const double u = kPi / T;
      // cosh a - cos b = 2 sinh^2(a/2) + 2 sin^2(b/2), without cancellation.
      const double sa = std::sinh(0.5 * u * z.imag());
      const double sb = std::sin(0.5 * u * (z.real() - s));
      return tent(s) / (2.0 * T) * std::sinh(u * z.imag()) / (2.0 * sa * sa + 2.0 * sb * sb);
    };
    std::vector<double> cuts{-T, 0.0, T, z.real() - 2.0 * T * std::floor((z.real() + T) / (2.0 * T))};
    std::sort(cuts.begin(), cuts.end());
    boost::math::quadrature::tanh_sinh<double> tanh_sinh;
    double oracle = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i)
      if (cuts[i] > cuts[i - 1])
        oracle += tanh_sinh.integrate(kernel, cuts[i - 1], cuts[i], 1e-14);
    CHECK_THAT(poisson_integral(mu, z), WithinAbs(oracle, 1e-11));
  }
}

TEST_CASE("paired lattice sum converges to the cotangent form", "[herglotz][periodic]") {
  Measure mu(ConstantDensity{0.2}, {{0.0, 1.0}, {0.5, 0.3}}, 2.0);
  const cplx z{0.3, 0.8};
  const cplx exact = schwarz_transform(mu, z).value;
  const cplx s1 = lattice_sum_paired(mu, z, 20000);
  const cplx s2 = lattice_sum_paired(mu, z, 40000);
  CHECK(std::abs(s2 - exact) < std::abs(s1 - exact));
  CHECK(std::abs(2.0 * s2 - s1 - exact) < 1e-8);
}

TEST_CASE("stable cotangent far from the real axis", "[herglotz]") {
  CHECK(std::abs(stable_cot(cplx(0.3, 400.0)) - cplx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(stable_cot(cplx(0.3, -400.0)) - cplx(0.0, 1.0)) < 1e-15);
  const cplx w{0.7, 0.4};
  CHECK(std::abs(stable_cot(w) - std::cos(w) / std::sin(w)) < 1e-14);
}

TEST_CASE("Schur function of a positive measure is in the disc", "[herglotz]") {
  Measure mu(TableDensity{{-2.0, 0.0, 2.0}, {0.1, 3.0, 0.1}}, {{1.0, 0.4}});
  for (cplx z : kPoints) CHECK(std::abs(schur_from_measure(mu, z).value) < 1.0);
}

TEST_CASE("Clark measure of the free system", "[herglotz][clark]") {
  StepPotential free{{0.0, 1.0}, {0.0}};
  const cplx z0{0.4, 1.0};
  ClarkReport r50 = validate_clark_identity(free, 1.0, z0, 50.0);
  ClarkReport r100 = validate_clark_identity(free, 1.0, z0, 100.0);
  // B/A = -tan(z) for the free system; zeros of cos in [-50, 50].
  CHECK(std::abs(r50.ratio + std::tan(z0)) < 1e-12);
  CHECK(r50.zeros == 32);
  CHECK(r50.residual <= 0.05);
  CHECK(r100.residual < r50.residual);
}

TEST_CASE("Clark measure of a step potential", "[herglotz][clark]") {
  StepPotential pot{{0.0, 0.4, 1.0}, {0.5, -0.3}};
  const cplx z0{0.0, 1.0};
  ClarkReport r50 = validate_clark_identity(pot, 1.0, z0, 50.0, true);
  ClarkReport r100 = validate_clark_identity(pot, 1.0, z0, 100.0, true);
  CHECK(r50.residual <= 0.05);
  CHECK(r100.residual < r50.residual);
  REQUIRE(r50.companion_residual.has_value());
  CHECK(*r50.companion_residual <= 0.05);
  CHECK(*r100.companion_residual < *r50.companion_residual);
}

TEST_CASE("periodic table just above the axis", "[herglotz][periodic]") {
  const double T = 2.0;
  Measure mu(TableDensity{{-T, -0.5, 0.0, 0.5, T}, {0.2, 1.0, 3.0, 1.0, 0.2}}, {{0.0, 0.5}}, 2.0 * T);
  // P tends to the density at x; the remainder is O(y) here.
  for (double y : {1e-3, 1e-4, 1e-6}) {
    const double p = poisson_integral(mu, cplx(0.3, y));
    CHECK_THAT(p, WithinAbs(1.8, 2.0 * y));
    CHECK_THAT(schwarz_transform(mu, cplx(0.3, y)).value.real(), WithinAbs(p, 1e-11));
  }
}

TEST_CASE("adaptive quadrature resolves a narrow peak", "[quadrature]") {
  for (double y : {1e-2, 1e-5, 1e-8}) {
    const quad::RealFn f = [&](double s) { return y / ((s - 0.3) * (s - 0.3) + y * y); };
    const double exact = std::atan(0.7 / y) + std::atan(0.3 / y);
    CHECK_THAT(quad::adaptive(f, 0.0, 1.0, 1e-10), WithinAbs(exact, 1e-10));
  }
  const quad::RealFn step = [](double s) { return s < 0.5 ? 0.0 : 1.0 / std::sqrt(s - 0.5); };
  REQUIRE_THROWS_AS(quad::adaptive(step, 0.0, 1.0, 1e-14), NumericalError);
}
