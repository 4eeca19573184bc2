#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nlft/herglotz.hpp"
#include "nlft/inverse.hpp"
#include "nlft/measure.hpp"
#include "nlft/transfer.hpp"

namespace nlft {

struct ConvergenceRow {
  double T = 0.0;
  cplx z;
  cplx approx;
  cplx target;
  double abs_err = 0.0;
};

/// Schur function of the 2T-periodization of a non-periodic measure.
SchurValue periodized_schur(const Measure& mu, double T, cplx z, double tol = kDefaultTol);

/// |f^T(z) - f(z)| for every (T, z), sorted by (T, Re z, Im z).
std::vector<ConvergenceRow> convergence_sweep(const Measure& mu, std::span<const double> Ts,
                                              std::span<const cplx> grid, double tol = kDefaultTol);

/// err(T_k) / err(T_{k+1}) for consecutive T at each z.
struct ErrorRatio {
  cplx z;
  double T_from = 0.0;
  double T_to = 0.0;
  double ratio = 0.0;
};
std::vector<ErrorRatio> error_ratios(std::span<const ConvergenceRow> rows);

/// Piecewise-linear hat: 0 outside [lo, hi], 1 at peak.
struct HatFunction {
  double lo = 0.0;
  double peak = 1.0;
  double hi = 2.0;

  double operator()(double t) const;
  double integral() const { return 0.5 * (hi - lo); }
};

using RealCurve = std::function<double(double)>;

/// |integral h^T phi - integral h phi| per T, with h a closed-form Hamiltonian.
std::vector<double> weakstar_h11_check(const Measure& mu, std::span<const double> Ts,
                                       const HatFunction& phi, const RealCurve& h11);

/// Averages of f^T(t) = f0(T t) and of log f^T against a hat, where f0 is
/// the 1-periodic step equal to high on [0, 1/2) and low on [1/2, 1).
struct OscillationAverages {
  std::vector<double> Ts;
  std::vector<double> mean_f;
  std::vector<double> mean_log_f;
  double limit_f = 0.0;       // (high + low)/2
  double limit_log_f = 0.0;   // (log high + log low)/2
  double log_of_limit = 0.0;  // log((high + low)/2)
};
OscillationAverages weakstar_oscillation(std::span<const double> Ts, const HatFunction& phi,
                                         double high = 1.0, double low = 0.25);

struct RoundtripRow {
  cplx z;
  cplx forward;  // b/a of the reconstructed potential
  cplx target;   // Schur function of the periodized measure
  double abs_err = 0.0;
};

std::vector<RoundtripRow> roundtrip(const Measure& mu, double T, std::size_t N, std::span<const cplx> zgrid,
                                    InverseMethod method = InverseMethod::toeplitz,
                                    double tol = kDefaultTol);

/// max |b/a - f^T| over the grid; requires 0.5 <= Im z <= 2.
double roundtrip_residual(const Measure& mu, double T, std::size_t N, std::span<const cplx> zgrid,
                          InverseMethod method = InverseMethod::toeplitz, double tol = kDefaultTol);

/// 50 points: Re z = -5 + 10k/49, Im z cycling through 0.5, 1, 2.
std::vector<cplx> default_zgrid();

struct Figure1Row {
  double t = 0.0;
  double scaled_mass = 0.0;
  double oracle_f = 0.0;
};

/// Rows n = 1..N at t = n pi/(2T) with c_n 2T/pi next to the oracle curve.
std::vector<Figure1Row> figure1_data(const Measure& mu, double T, std::size_t N, const RealCurve& oracle,
                                     InverseMethod method = InverseMethod::toeplitz);

/// max |scaled_mass - curve(t)| over rows with t <= t_max.
double figure1_deviation(std::span<const Figure1Row> rows, double t_max, const RealCurve& curve);

/// Closed-form Hamiltonian and potential for c m + M delta_0:
/// h(t) = (1/c)/(1 + beta t)^2 and f(t) = beta/(1 + beta t), beta = M/(c pi).
/// Empty for measures outside that family.
std::optional<RealCurve> closed_form_hamiltonian(const Measure& mu);
std::optional<RealCurve> closed_form_potential(const Measure& mu);

/// f(t) = -1/2 (log h)'(t) by central differences with step 1e-5.
RealCurve potential_from_hamiltonian(RealCurve h11);

}  // namespace nlft
