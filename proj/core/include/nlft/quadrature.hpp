#pragma once

#include <functional>

#include "nlft/types.hpp"

namespace nlft::quad {

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<cplx(double)>;

/// Globally adaptive Gauss-Kronrod (61 points) on [a, b] with an absolute
/// error target. Throws NumericalError when the summed error estimate is
/// still above tol after the panel budget.
double adaptive(const RealFn& f, double a, double b, double tol);
cplx adaptive(const ComplexFn& f, double a, double b, double tol);

}  // namespace nlft::quad
