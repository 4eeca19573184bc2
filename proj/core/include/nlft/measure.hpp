#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace nlft {

struct NoDensity {};

struct ConstantDensity {
  double value = 0.0;
};

/// Piecewise-linear density through (xs[i], ys[i]); zero outside
/// [xs.front(), xs.back()].
struct TableDensity {
  std::vector<double> xs;
  std::vector<double> ys;

  double operator()(double x) const;
  /// Integral of the density over [lo, hi] (exact for the linear pieces).
  double integral(double lo, double hi) const;
};

using Density = std::variant<NoDensity, ConstantDensity, TableDensity>;

struct Atom {
  double x = 0.0;
  double mass = 0.0;
};

/// Positive measure on the real line: an absolutely continuous part, a finite
/// list of atoms, and an optional period 2T. A periodic measure stores its
/// base window [-T, T) only.
///
/// Construction validates everything: masses > 0, densities >= 0, table
/// abscissae strictly increasing, periodic atoms inside [-T, T). Atoms are
/// sorted and atoms sharing a position are merged. Periodic table densities
/// are clipped to the base window. Non-periodic measures must be
/// Poisson-finite.
class Measure {
 public:
  Measure() = default;
  Measure(Density ac, std::vector<Atom> atoms,
          std::optional<double> period = std::nullopt);

  static Measure lebesgue(double density = 1.0);

  const Density& ac() const noexcept { return ac_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::optional<double> period() const noexcept { return period_; }
  bool periodic() const noexcept { return period_.has_value(); }
  /// T for a 2T-periodic measure. Throws InputError when not periodic.
  double half_period() const;

  bool has_density() const noexcept;
  bool is_zero() const noexcept;

  /// Density at x (reduced into the base window for periodic measures).
  double density(double x) const;

  /// mu([lo, hi)). Infinite for unbounded non-periodic densities over
  /// unbounded intervals.
  double mass(double lo, double hi) const;

  /// mu([-T, T)) for periodic measures.
  double base_mass() const;

  /// Integral of d|mu|/(1+t^2); meaningful for non-periodic measures.
  double poisson_mass() const;

  Measure scaled(double factor) const;

 private:
  double cumulative_base(double x) const;  // mu([-T, x)) for x in [-T, T]

  Density ac_ = NoDensity{};
  std::vector<Atom> atoms_;
  std::optional<double> period_;
};

/// Sum of two measures with the same period (or both non-periodic). A
/// constant density can only be added to a table density for periodic
/// measures, where it becomes a table over the base window.
Measure operator+(const Measure& lhs, const Measure& rhs);

/// Half-period T and cosine coefficients a_0..a_N of an even 2T-periodic
/// measure, d mu = sum a_n cos(n pi x / T) dx.
struct TrigMoments {
  double half_period = 0.0;
  std::vector<double> coeffs;
};

/// 2T-periodic measure agreeing with mu on [-T, T).
Measure periodize(const Measure& mu, double T);

/// Evenness of the periodic extension, with absolute tolerance on paired
/// atom masses and mirrored density samples.
bool is_even(const Measure& mu, double tol = 1e-9);

/// a_0 = mu([-T,T))/(2T), a_n = (1/T) * integral of cos(n pi x/T) d mu over
/// the base window, for n = 1..n_max.
TrigMoments trig_moments(const Measure& mu, std::size_t n_max);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

/// Heuristic Paley-Wiener report. Advisory only; never throws on a valid
/// measure.
struct PwReport {
  double sup_unit_mass = 0.0;       // sup of mu([k, k+1)) over the window
  double sup_unit_mass_wide = 0.0;  // same over a 4x wider window
  bool bounded = true;
  std::optional<bool> locally_infinite_support;  // periodic measures only
  std::size_t atoms_per_period = 0;
  double largest_delta = 0.0;  // largest delta with >= d|I| disjoint intervals
  std::size_t intervals_at_delta = 0;
  std::string verdict;
};

PwReport pw_diagnostic(const Measure& mu, Interval window, double d);

}  // namespace nlft
