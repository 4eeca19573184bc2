#pragma once

#include <cstddef>
#include <optional>

#include "nlft/measure.hpp"
#include "nlft/transfer.hpp"
#include "nlft/types.hpp"

namespace nlft {

inline constexpr double kDefaultTol = 1e-12;

/// S(z) = (1/(pi i)) * integral of (1/(t - z) - t/(1 + t^2)) d mu(t).
///
/// Atoms and piecewise-linear densities are integrated in closed form.
/// Periodic measures use the symmetric-pair limit of the lattice sum, which
/// is a cotangent per base point; periodic table densities go through
/// adaptive quadrature against that kernel. Real z must stay 1e-9 away from
/// atoms and from the density support.
HerglotzValue schwarz_transform(const Measure& mu, cplx z, double tol = kDefaultTol);

/// P(z) = (1/pi) * integral of y/((t - x)^2 + y^2) d mu(t), Im z > 0.
double poisson_integral(const Measure& mu, cplx z, double tol = kDefaultTol);

/// Q(z) = (1/pi) * integral of ((x - t)/((x - t)^2 + y^2) + t/(1 + t^2)) d mu(t),
/// Im z > 0. S = P + iQ.
double conjugate_poisson_integral(const Measure& mu, cplx z, double tol = kDefaultTol);

/// (S - 1)/(S + 1); NumericalError when |S + 1| < 1e-14.
SchurValue schur_from_measure(const Measure& mu, cplx z, double tol = kDefaultTol);

/// Explicit symmetric lattice sum over translates |m| <= pairs of the base
/// window of a periodic measure. Slow; kept as a check on the cotangent form.
cplx lattice_sum_paired(const Measure& mu, cplx z, std::size_t pairs);

/// Cotangent that stays finite for large |Im w|.
cplx stable_cot(cplx w);

struct ClarkReport {
  std::size_t zeros = 0;
  cplx ratio;       // B/A at z0
  cplx transform;   // -i * S of the truncated Clark measure
  double residual = 0.0;
  std::optional<std::size_t> companion_zeros;
  std::optional<double> companion_residual;  // |D/C + i S_C|
};

/// Checks B/A = -i S for M(b, z) = [[A, B], [C, D]] with the measure
/// -pi/(A'C) on the real zeros of A inside [-R, R]; the companion identity
/// D/C = -i S uses pi/(A C') on the zeros of C.
ClarkReport validate_clark_identity(const StepPotential& pot, double b, cplx z0, double R,
                                    bool companion = false);

}  // namespace nlft
