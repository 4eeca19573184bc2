#include "nlft/converge.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "nlft/errors.hpp"
#include "nlft/parallel.hpp"
#include "nlft/quadrature.hpp"

namespace nlft {

namespace {

bool row_less(const ConvergenceRow& l, const ConvergenceRow& r) {
  return std::make_tuple(l.T, l.z.real(), l.z.imag()) < std::make_tuple(r.T, r.z.real(), r.z.imag());
}

// Integral of the hat over [u, v], exact on its linear pieces.
double hat_integral(const HatFunction& phi, double u, double v) {
  u = std::max(u, phi.lo);
  v = std::min(v, phi.hi);
  if (v <= u) return 0.0;
  double sum = 0.0;
  auto piece = [&](double a, double b) {
    if (b > a) sum += 0.5 * (b - a) * (phi(a) + phi(b));
  };
  piece(u, std::min(v, phi.peak));
  piece(std::max(u, phi.peak), v);
  return sum;
}

}  // namespace

double HatFunction::operator()(double t) const {
  if (t <= lo || t >= hi) return 0.0;
  return t <= peak ? (t - lo) / (peak - lo) : (hi - t) / (hi - peak);
}

SchurValue periodized_schur(const Measure& mu, double T, cplx z, double tol) {
  return schur_from_measure(periodize(mu, T), z, tol);
}

std::vector<ConvergenceRow> convergence_sweep(const Measure& mu, std::span<const double> Ts,
                                              std::span<const cplx> grid, double tol) {
  if (mu.periodic()) throw InputError("convergence_sweep: measure must be non-periodic");
  for (double T : Ts)
    if (!(T > 0.0)) throw InputError("T must be positive");
  std::vector<cplx> targets(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { targets[i] = schur_from_measure(mu, grid[i], tol).value; });

  std::vector<Measure> periodized;
  for (double T : Ts) periodized.push_back(periodize(mu, T));
  std::vector<ConvergenceRow> rows(Ts.size() * grid.size());
  parallel_for(rows.size(), [&](std::size_t k) {
    const std::size_t ti = k / grid.size(), zi = k % grid.size();
    const cplx approx = schur_from_measure(periodized[ti], grid[zi], tol).value;
    rows[k] = ConvergenceRow{Ts[ti], grid[zi], approx, targets[zi], std::abs(approx - targets[zi])};
  });
  std::stable_sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::vector<ErrorRatio> error_ratios(std::span<const ConvergenceRow> rows) {
  std::map<std::pair<double, double>, std::vector<const ConvergenceRow*>> by_z;
  for (const auto& r : rows) by_z[{r.z.real(), r.z.imag()}].push_back(&r);
  std::vector<ErrorRatio> out;
  for (auto& [key, list] : by_z) {
    std::sort(list.begin(), list.end(), [](auto* l, auto* r) { return l->T < r->T; });
    for (std::size_t i = 1; i < list.size(); ++i)
      out.push_back(ErrorRatio{list[i]->z, list[i - 1]->T, list[i]->T, list[i - 1]->abs_err / list[i]->abs_err});
  }
  return out;
}

std::vector<double> weakstar_h11_check(const Measure& mu, std::span<const double> Ts,
                                       const HatFunction& phi, const RealCurve& h11) {
  if (!(phi.lo < phi.peak && phi.peak < phi.hi) || phi.lo < 0.0)
    throw InputError("hat must satisfy 0 <= lo < peak < hi");
  const quad::RealFn weighted = [&](double t) { return h11(t) * phi(t); };
  const double exact =
      quad::adaptive(weighted, phi.lo, phi.peak, 1e-13) + quad::adaptive(weighted, phi.peak, phi.hi, 1e-13);
  std::vector<double> out;
  for (double T : Ts) {
    const Measure muT = periodize(mu, T);
    const double w = kPi / (2.0 * T);
    const auto N = static_cast<std::size_t>(std::ceil(phi.hi / w)) + 1;
    const StepHamiltonian h = hamiltonian_from_measure(muT, N);
    double approx = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      const double u = static_cast<double>(n) * w;
      approx += h.steps[n] * hat_integral(phi, u, u + w);
    }
    out.push_back(std::abs(approx - exact));
  }
  return out;
}

OscillationAverages weakstar_oscillation(std::span<const double> Ts, const HatFunction& phi, double high,
                                         double low) {
  if (!(high > 0.0 && low > 0.0)) throw InputError("step values must be positive");
  OscillationAverages out;
  out.limit_f = 0.5 * (high + low);
  out.limit_log_f = 0.5 * (std::log(high) + std::log(low));
  out.log_of_limit = std::log(out.limit_f);
  const double mass = phi.integral();
  for (double T : Ts) {
    if (!(T > 0.0)) throw InputError("T must be positive");
    const double h = 0.5 / T;  // f0(T t) is constant on [j h, (j+1) h)
    const auto j0 = static_cast<long long>(std::floor(phi.lo / h));
    const auto j1 = static_cast<long long>(std::ceil(phi.hi / h));
    double sf = 0.0, slog = 0.0;
    for (long long j = j0; j < j1; ++j) {
      const double weight = hat_integral(phi, static_cast<double>(j) * h, static_cast<double>(j + 1) * h);
      const bool upper = ((j % 2) + 2) % 2 == 0;
      const double v = upper ? high : low;
      sf += v * weight;
      slog += std::log(v) * weight;
    }
    out.Ts.push_back(T);
    out.mean_f.push_back(sf / mass);
    out.mean_log_f.push_back(slog / mass);
  }
  return out;
}

std::vector<RoundtripRow> roundtrip(const Measure& mu, double T, std::size_t N, std::span<const cplx> zgrid,
                                    InverseMethod method, double tol) {
  for (cplx z : zgrid)
    if (z.imag() < 0.5 || z.imag() > 2.0) throw InputError("round-trip grid needs 0.5 <= Im z <= 2");
  const Measure muT = periodize(mu, T);
  const DiscretePotential pot = inverse_nlft(muT, N, method);
  std::vector<RoundtripRow> rows(zgrid.size());
  parallel_for(zgrid.size(), [&](std::size_t i) {
    const cplx z = zgrid[i];
    const cplx fwd = schur_ratio(forward_discrete(pot, z));
    const cplx target = schur_from_measure(muT, z, tol).value;
    rows[i] = RoundtripRow{z, fwd, target, std::abs(fwd - target)};
  });
  return rows;
}

double roundtrip_residual(const Measure& mu, double T, std::size_t N, std::span<const cplx> zgrid,
                          InverseMethod method, double tol) {
  double worst = 0.0;
  for (const auto& r : roundtrip(mu, T, N, zgrid, method, tol)) worst = std::max(worst, r.abs_err);
  return worst;
}

std::vector<cplx> default_zgrid() {
  constexpr double ims[] = {0.5, 1.0, 2.0};
  std::vector<cplx> grid;
  for (int k = 0; k < 50; ++k) grid.emplace_back(-5.0 + 10.0 * k / 49.0, ims[k % 3]);
  return grid;
}

std::vector<Figure1Row> figure1_data(const Measure& mu, double T, std::size_t N, const RealCurve& oracle,
                                     InverseMethod method) {
  if (N == 0) throw InputError("N must be at least 1");
  const DiscretePotential pot = inverse_nlft(periodize(mu, T), N + 1, method);
  const double scale = 2.0 * T / kPi;
  std::vector<Figure1Row> rows;
  rows.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const double t = pot.position(n);
    rows.push_back(Figure1Row{t, pot.masses[n] * scale, oracle ? oracle(t) : 0.0});
  }
  return rows;
}

double figure1_deviation(std::span<const Figure1Row> rows, double t_max, const RealCurve& curve) {
  double worst = 0.0;
  for (const auto& r : rows)
    if (r.t <= t_max) worst = std::max(worst, std::abs(r.scaled_mass - curve(r.t)));
  return worst;
}

namespace {

std::optional<std::pair<double, double>> lebesgue_plus_origin_atom(const Measure& mu) {
  if (mu.periodic()) return std::nullopt;
  const auto* c = std::get_if<ConstantDensity>(&mu.ac());
  if (!c || !(c->value > 0.0)) return std::nullopt;
  const auto atoms = mu.atoms();
  if (atoms.size() > 1 || (atoms.size() == 1 && atoms[0].x != 0.0)) return std::nullopt;
  const double M = atoms.empty() ? 0.0 : atoms[0].mass;
  return std::make_pair(c->value, M / (c->value * kPi));
}

}  // namespace

std::optional<RealCurve> closed_form_hamiltonian(const Measure& mu) {
  const auto fam = lebesgue_plus_origin_atom(mu);
  if (!fam) return std::nullopt;
  const auto [c, beta] = *fam;
  return RealCurve([c, beta](double t) { return 1.0 / (c * (1.0 + beta * t) * (1.0 + beta * t)); });
}

std::optional<RealCurve> closed_form_potential(const Measure& mu) {
  const auto fam = lebesgue_plus_origin_atom(mu);
  if (!fam) return std::nullopt;
  const double beta = fam->second;
  return RealCurve([beta](double t) { return beta / (1.0 + beta * t); });
}

RealCurve potential_from_hamiltonian(RealCurve h11) {
  return [h = std::move(h11)](double t) {
    constexpr double step = 1e-5;
    return -0.5 * (std::log(h(t + step)) - std::log(h(t - step))) / (2.0 * step);
  };
}

}  // namespace nlft
