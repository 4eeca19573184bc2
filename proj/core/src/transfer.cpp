#include "nlft/transfer.hpp"

#include <cmath>
#include <sstream>

#include "nlft/errors.hpp"
#include "nlft/parallel.hpp"

namespace nlft {

namespace {

constexpr cplx kI{0.0, 1.0};

std::string at(const char* field, std::size_t i) {
  std::ostringstream os;
  os << field << "[" << i << "]";
  return os.str();
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
  return r;
}

void validate(const DiscretePotential& pot) {
  if (!(pot.spacing > 0.0) || !std::isfinite(pot.spacing))
    throw InputError("spacing: must be a positive finite number");
  if (pot.first_index < 0) throw InputError("first_index: must be non-negative");
  for (std::size_t i = 0; i < pot.masses.size(); ++i)
    if (!std::isfinite(pot.masses[i])) throw InputError(at("masses", i) + ": not finite");
}

void validate(const StepPotential& pot) {
  if (pot.breakpoints.size() != pot.values.size() + 1)
    throw InputError("breakpoints: need exactly one more breakpoint than values");
  if (pot.breakpoints.front() != 0.0) throw InputError("breakpoints[0]: must be 0");
  for (std::size_t i = 1; i < pot.breakpoints.size(); ++i) {
    if (!std::isfinite(pot.breakpoints[i])) throw InputError(at("breakpoints", i) + ": not finite");
    if (!(pot.breakpoints[i] > pot.breakpoints[i - 1]))
      throw InputError(at("breakpoints", i) + ": must be strictly increasing");
  }
  for (std::size_t i = 0; i < pot.values.size(); ++i)
    if (!std::isfinite(pot.values[i])) throw InputError(at("values", i) + ": not finite");
}

Mat2 point_mass_matrix(double c, double tau, cplx z) {
  const double ch = std::cosh(c);
  const double sh = std::sinh(c);
  const cplx phase = std::exp(2.0 * kI * z * tau);
  Mat2 f;
  f.m[0][0] = ch;
  f.m[0][1] = sh / phase;
  f.m[1][0] = sh * phase;
  f.m[1][1] = ch;
  return f;
}

TransferMatrix point_mass_factor(double c, double tau, cplx z) {
  const Mat2 f = point_mass_matrix(c, tau, z);
  return TransferMatrix{z, f(1, 1), f(1, 0), std::abs(f.det() - 1.0)};
}

Mat2 forward_discrete_matrix(const DiscretePotential& pot, cplx z) {
  Mat2 g = Mat2::identity();
  for (std::size_t k = 0; k < pot.masses.size(); ++k) {
    if (pot.masses[k] == 0.0) continue;
    g = point_mass_matrix(pot.masses[k], pot.position(k), z) * g;
  }
  return g;
}

TransferMatrix forward_discrete(const DiscretePotential& pot, cplx z) {
  const Mat2 g = forward_discrete_matrix(pot, z);
  return TransferMatrix{z, g(1, 1), g(1, 0), std::abs(g.det() - 1.0)};
}

Mat2 step_propagator(double f, double dt, cplx z) {
  const cplx w2 = f * f - z * z;
  const cplx x = w2 * dt * dt;  // (omega dt)^2
  cplx ch, shc;                 // cosh(omega dt), sinh(omega dt)/omega
  if (std::abs(x) < 1e-8) {
    ch = 1.0 + x / 2.0 + x * x / 24.0;
    shc = dt * (1.0 + x / 6.0 + x * x / 120.0);
  } else {
    const cplx w = std::sqrt(w2);
    ch = std::cosh(w * dt);
    shc = std::sinh(w * dt) / w;
  }
  Mat2 p;
  p.m[0][0] = ch + shc * f;
  p.m[0][1] = -shc * z;
  p.m[1][0] = shc * z;
  p.m[1][1] = ch - shc * f;
  return p;
}

Mat2 matrix_solution(const StepPotential& pot, double t, cplx z) {
  Mat2 m = Mat2::identity();
  for (std::size_t j = 0; j < pot.values.size(); ++j) {
    const double lo = pot.breakpoints[j];
    const double hi = std::min(pot.breakpoints[j + 1], t);
    if (hi <= lo) break;
    m = step_propagator(pot.values[j], hi - lo, z) * m;
  }
  return m;
}

TransferMatrix forward_continuous(const StepPotential& pot, cplx z) {
  const double t = pot.length();
  const Mat2 m = matrix_solution(pot, t, z);
  const cplx e = m(0, 0) - kI * m(1, 0);
  const cplx et = m(0, 1) - kI * m(1, 1);
  const cplx half = 0.5 * std::exp(kI * t * z);
  return TransferMatrix{z, half * (e + kI * et), half * (e - kI * et), std::abs(m.det() - 1.0)};
}

cplx schur_ratio(const TransferMatrix& tm) {
  if (tm.a == 0.0 || !std::isfinite(std::abs(tm.a))) {
    std::ostringstream os;
    os << "resonance: a vanishes at z = " << tm.z;
    throw NumericalError(os.str());
  }
  return tm.b / tm.a;
}

double magnitude_a_from_schur(cplx s) {
  const double n = std::norm(s);
  if (!(n < 1.0)) throw InputError("|f^(z)| must be < 1 on the real line");
  return 1.0 / std::sqrt(1.0 - n);
}

cplx fourier_linear(const DiscretePotential& pot, cplx z) {
  cplx sum = 0.0;
  for (std::size_t k = 0; k < pot.masses.size(); ++k)
    sum += pot.masses[k] * std::exp(2.0 * kI * z * pot.position(k));
  return sum;
}

std::vector<TransferMatrix> forward_sweep(const DiscretePotential& pot, std::span<const cplx> zs) {
  validate(pot);
  std::vector<TransferMatrix> out(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) { out[i] = forward_discrete(pot, zs[i]); });
  return out;
}

std::vector<TransferMatrix> forward_sweep(const StepPotential& pot, std::span<const cplx> zs) {
  validate(pot);
  std::vector<TransferMatrix> out(zs.size());
  parallel_for(zs.size(), [&](std::size_t i) { out[i] = forward_continuous(pot, zs[i]); });
  return out;
}

}  // namespace nlft
