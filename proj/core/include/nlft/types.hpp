#pragma once

#include <complex>
#include <numbers>

namespace nlft {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Value of a Herglotz function (a Schwarz transform) at z.
struct HerglotzValue {
  cplx z;
  cplx value;
};

/// Value of a Schur function at z.
struct SchurValue {
  cplx z;
  cplx value;
};

}  // namespace nlft
