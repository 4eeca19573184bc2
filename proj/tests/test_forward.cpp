#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "nlft/errors.hpp"
#include "nlft/spec_io.hpp"
#include "nlft/transfer.hpp"
#include "nlft/types.hpp"

using namespace nlft;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const cplx kI{0.0, 1.0};

double max_entry_diff(const Mat2& x, const Mat2& y) {
  double d = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(x(i, j) - y(i, j)));
  return d;
}

}  // namespace

TEST_CASE("single point mass", "[forward]") {
  const double C = 0.7;
  DiscretePotential pot{1.0, {C}};
  for (cplx z : {cplx(0.3, 0.0), cplx(-1.2, 0.5), cplx(2.0, 1.0)}) {
    TransferMatrix tm = forward_discrete(pot, z);
    CHECK(std::abs(tm.a - std::cosh(C)) < 1e-15);
    CHECK(std::abs(tm.b - std::exp(2.0 * kI * z) * std::sinh(C)) < 1e-15);
  }
}

TEST_CASE("single mass from a document", "[forward][io]") {
  auto pot = std::get<DiscretePotential>(potential_from_file(NLFT_DATA_DIR "/single_mass.json"));
  TransferMatrix tm = forward_discrete(pot, cplx(0.0, 1.0));
  CHECK_THAT(tm.a.real(), WithinRel(std::cosh(0.7), 1e-15));
  CHECK_THAT(tm.b.real(), WithinRel(std::exp(-2.0) * std::sinh(0.7), 1e-15));
}

TEST_CASE("two masses multiply in order", "[forward]") {
  // G = F_2 F_1 with both factors written out by hand.
  const double c1 = 0.4, c2 = -0.9, d = 0.5;
  const cplx z{0.8, 0.3};
  auto factor = [&](double c, double tau) {
    Mat2 f;
    f(0, 0) = std::cosh(c);
    f(0, 1) = std::exp(-2.0 * kI * z * tau) * std::sinh(c);
    f(1, 0) = std::exp(2.0 * kI * z * tau) * std::sinh(c);
    f(1, 1) = std::cosh(c);
    return f;
  };
  Mat2 G = factor(c2, 2.0 * d) * factor(c1, d);
  TransferMatrix tm = forward_discrete(DiscretePotential{d, {c1, c2}}, z);
  CHECK(std::abs(tm.a - G(1, 1)) < 1e-15);
  CHECK(std::abs(tm.b - G(1, 0)) < 1e-15);
}

TEST_CASE("first_index shifts positions", "[forward]") {
  DiscretePotential p0{0.5, {0.3, 0.2}, 0};
  DiscretePotential p1{0.5, {0.3, 0.2}, 1};
  const cplx z{0.7, 0.2};
  TransferMatrix t0 = forward_discrete(p0, z), t1 = forward_discrete(p1, z);
  CHECK(std::abs(t1.a - t0.a) < 1e-15);
  CHECK(std::abs(t1.b - t0.b * std::exp(2.0 * kI * z * 0.5)) < 1e-15);
}

TEST_CASE("determinant on the real line", "[forward]") {
  DiscretePotential pot{0.3, {0.5, -1.1, 0.2, 0.9, -0.4}};
  StepPotential step{{0.0, 0.2, 0.9, 1.5}, {1.0, -0.5, 2.0}};
  for (double x = -10.0; x <= 10.0; x += 0.37) {
    TransferMatrix d = forward_discrete(pot, cplx(x, 0.0));
    TransferMatrix s = forward_continuous(step, cplx(x, 0.0));
    CHECK_THAT(std::norm(d.a) - std::norm(d.b), WithinAbs(1.0, 1e-12));
    CHECK_THAT(std::norm(s.a) - std::norm(s.b), WithinAbs(1.0, 1e-12));
    CHECK(d.det_drift < 1e-12);
  }
}

TEST_CASE("free propagator is a rotation", "[forward][propagator]") {
  for (double dt : {0.1, 1.0, 3.7}) {
    for (double x : {-2.0, 0.5, 4.0}) {
      Mat2 P = step_propagator(0.0, dt, cplx(x, 0.0));
      Mat2 R;
      R(0, 0) = std::cos(x * dt);
      R(0, 1) = -std::sin(x * dt);
      R(1, 0) = std::sin(x * dt);
      R(1, 1) = std::cos(x * dt);
      CHECK(max_entry_diff(P, R) < 1e-14);
    }
  }
}

TEST_CASE("propagator at z = 0 is hyperbolic", "[forward][propagator]") {
  Mat2 P = step_propagator(0.8, 1.5, cplx(0.0, 0.0));
  CHECK(std::abs(P(0, 0) - std::exp(1.2)) < 1e-14);
  CHECK(std::abs(P(1, 1) - std::exp(-1.2)) < 1e-14);
  CHECK(std::abs(P(0, 1)) < 1e-15);
}

TEST_CASE("propagator is continuous across the series branch", "[forward][propagator]") {
  const double f = 0.3;
  const cplx z{0.2, 0.1};
  // (omega dt)^2 straddles the series switch at 1e-8.
  for (double dt : {1e-12, 1e-6, 2e-4, 3e-4, 1e-3}) {
    Mat2 P = step_propagator(f, dt, z);
    Mat2 two = step_propagator(f, 0.5 * dt, z) * step_propagator(f, 0.5 * dt, z);
    CHECK(max_entry_diff(P, two) < 1e-15);
    CHECK(std::abs(P.det() - 1.0) < 1e-15);
  }
  Mat2 tiny = step_propagator(f, 1e-12, z);
  CHECK(max_entry_diff(tiny, Mat2::identity()) < 1e-11);
}

TEST_CASE("narrow tall step tends to a point mass", "[forward]") {
  const double c = 0.6, tau = 1.0;
  const cplx z{0.5, 0.2};
  TransferMatrix point = forward_discrete(DiscretePotential{tau, {c}}, z);
  double prev = 1e300;
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    StepPotential s{{0.0, tau - 0.5 * eps, tau + 0.5 * eps}, {0.0, c / eps}};
    TransferMatrix tm = forward_continuous(s, z);
    // The continuous run ends at tau + eps/2: undo the free phase there.
    const cplx b = tm.b * std::exp(-kI * z * eps);
    const double err = std::abs(tm.a - point.a) + std::abs(b - point.b);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("Schur ratio and |a|", "[forward]") {
  auto pot = std::get<DiscretePotential>(potential_from_file(NLFT_DATA_DIR "/log_ratio_masses.json"));
  for (double x : {-1.3, 0.0, 0.4, 2.2}) {
    TransferMatrix tm = forward_discrete(pot, cplx(x, 0.0));
    cplx s = schur_ratio(tm);
    CHECK_THAT(magnitude_a_from_schur(s), WithinRel(std::abs(tm.a), 1e-9));
  }
  REQUIRE_THROWS_AS(magnitude_a_from_schur(cplx(1.0, 0.0)), InputError);
  REQUIRE_THROWS_AS(schur_ratio(TransferMatrix{cplx(0.0, 1.0), 0.0, 1.0}), NumericalError);
}

TEST_CASE("linear term and third-order remainder", "[forward]") {
  DiscretePotential base{0.5, {0.4, -0.7, 0.3, 1.0}};
  const cplx z{0.3, 0.4};
  std::vector<double> errs;
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    DiscretePotential p = base;
    for (double& c : p.masses) c *= eps;
    errs.push_back(std::abs(schur_ratio(forward_discrete(p, z)) - fourier_linear(p, z)));
  }
  // b/a is odd in the potential, so the remainder drops 1000x per decade.
  CHECK_THAT(errs[0] / errs[1], WithinRel(1000.0, 0.05));
  CHECK_THAT(errs[1] / errs[2], WithinRel(1000.0, 0.01));
}

TEST_CASE("non-linear Parseval constant is pi", "[forward]") {
  StepPotential pot{{0.0, 0.4, 1.0}, {0.5, -0.3}};
  const double norm2 = 0.4 * 0.25 + 0.6 * 0.09;
  auto log_a2 = [&](double x) { return -std::log(1.0 - std::norm(schur_ratio(forward_continuous(pot, cplx(x, 0.0))))); };
  auto integral = [&](double X) {
    double sum = 0.0;
    for (double lo = -X; lo < X; lo += 1.0)
      sum += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(log_a2, lo, lo + 1.0, 5, 1e-10);
    return sum;
  };
  // Tail ~ 1/X; Richardson on X and 2X.
  const double full = 2.0 * integral(400.0) - integral(200.0);
  CHECK_THAT(full, WithinRel(kPi * norm2, 1e-4));
}

TEST_CASE("sweeps keep input order", "[forward]") {
  DiscretePotential pot{0.5, {0.4, -0.2, 0.8}};
  std::vector<cplx> zs;
  for (int k = 0; k < 40; ++k) zs.emplace_back(-4.0 + 0.2 * k, 0.1 * (k % 3));
  auto rows = forward_sweep(pot, zs);
  REQUIRE(rows.size() == zs.size());
  for (std::size_t k = 0; k < zs.size(); ++k) {
    CHECK(rows[k].z == zs[k]);
    CHECK(rows[k].b == forward_discrete(pot, zs[k]).b);
  }
}

TEST_CASE("potential validation", "[forward]") {
  REQUIRE_THROWS_AS(validate(DiscretePotential{-1.0, {0.1}}), InputError);
  REQUIRE_THROWS_AS(validate(DiscretePotential{1.0, {NAN}}), InputError);
  REQUIRE_THROWS_AS(validate(StepPotential{{0.5, 1.0}, {0.1}}), InputError);
  REQUIRE_THROWS_AS(validate(StepPotential{{0.0, 1.0, 0.5}, {0.1, 0.2}}), InputError);
  REQUIRE_THROWS_AS(validate(StepPotential{{0.0, 1.0}, {0.1, 0.2}}), InputError);
}
