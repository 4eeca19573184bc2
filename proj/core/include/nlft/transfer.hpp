#pragma once

#include <array>
#include <span>
#include <vector>

#include "nlft/types.hpp"

namespace nlft {

struct Mat2 {
  std::array<std::array<cplx, 2>, 2> m{};

  static Mat2 identity() { return Mat2{{{{1.0, 0.0}, {0.0, 1.0}}}}; }
  cplx& operator()(int i, int j) { return m[i][j]; }
  cplx operator()(int i, int j) const { return m[i][j]; }
  cplx det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);

/// Masses c_k at t = (first_index + k) * spacing. The default layout puts the
/// first mass at one spacing from the origin; inverse reconstructions start
/// at the origin (first_index = 0).
struct DiscretePotential {
  double spacing = 1.0;
  std::vector<double> masses;
  int first_index = 1;

  double position(std::size_t k) const { return (first_index + static_cast<double>(k)) * spacing; }
};

/// f = values[j] on (breakpoints[j], breakpoints[j+1]]; breakpoints start at 0.
struct StepPotential {
  std::vector<double> breakpoints;
  std::vector<double> values;

  double length() const { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
};

void validate(const DiscretePotential& pot);
void validate(const StepPotential& pot);

/// (a, b) of the state [[a#, b#], [b, a]]. det_drift is |det G - 1| of the
/// accumulated product.
struct TransferMatrix {
  cplx z;
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
  double det_drift = 0.0;
};

/// exp of [[0, c e^{-2iz tau}], [c e^{2iz tau}, 0]] in closed form.
Mat2 point_mass_matrix(double c, double tau, cplx z);
TransferMatrix point_mass_factor(double c, double tau, cplx z);

/// Ordered product factor_N ... factor_1 (increasing positions).
Mat2 forward_discrete_matrix(const DiscretePotential& pot, cplx z);
TransferMatrix forward_discrete(const DiscretePotential& pot, cplx z);

/// exp(dt * [[f, -z], [z, -f]]).
Mat2 step_propagator(double f, double dt, cplx z);

/// M(t, z) with M(0) = I, propagated through the steps up to t (clamped to
/// the potential's length).
Mat2 matrix_solution(const StepPotential& pot, double t, cplx z);

/// (a, b) at the end of the potential, built from the Neumann and Dirichlet
/// columns of M.
TransferMatrix forward_continuous(const StepPotential& pot, cplx z);

/// b / a. Throws NumericalError at a resonance (a = 0).
cplx schur_ratio(const TransferMatrix& tm);

/// 1/sqrt(1 - |s|^2); InputError when |s| >= 1.
double magnitude_a_from_schur(cplx s);

/// sum c_n e^{2iz t_n}.
cplx fourier_linear(const DiscretePotential& pot, cplx z);

/// Evaluations at every z, in input order, computed in parallel.
std::vector<TransferMatrix> forward_sweep(const DiscretePotential& pot, std::span<const cplx> zs);
std::vector<TransferMatrix> forward_sweep(const StepPotential& pot, std::span<const cplx> zs);

}  // namespace nlft
