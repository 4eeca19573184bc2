#include "nlft/herglotz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/quadrature.hpp"

namespace nlft {

namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kSupportGap = 1e-9;

enum class Kernel { schwarz, poisson, conjugate };

[[noreturn]] void on_support(const char* what, cplx z) {
  std::ostringstream os;
  os << "z = " << z << " lies on " << what << " of the measure";
  throw InputError(os.str());
}

void require_upper(cplx z, const char* op) {
  if (!(z.imag() > 0.0)) throw InputError(std::string(op) + ": requires Im z > 0");
}

// Closed-form kernel integrals of the linear density through (a, ya), (b, yb).
cplx segment_integral(Kernel k, double a, double ya, double b, double yb, cplx z) {
  const double q = (yb - ya) / (b - a);
  const double p = ya - q * a;
  const double x = z.real(), y = z.imag();
  const double norm_term = 0.5 * p * std::log((1.0 + b * b) / (1.0 + a * a)) +
                           q * ((b - a) - (std::atan(b) - std::atan(a)));
  switch (k) {
    case Kernel::schwarz: {
      const cplx logs = y > 0.0 ? std::log(cplx(b) - z) - std::log(cplx(a) - z)
                                : cplx(std::log((b - x) / (a - x)), 0.0);
      const cplx cauchy = q * (b - a) + (p + q * z) * logs;
      return (cauchy - norm_term) / (kPi * kI);
    }
    case Kernel::poisson: {
      const double ua = a - x, ub = b - x;
      return ((p + q * x) * (std::atan(ub / y) - std::atan(ua / y)) +
              0.5 * q * y * std::log((ub * ub + y * y) / (ua * ua + y * y))) /
             kPi;
    }
    case Kernel::conjugate: {
      const double ua = a - x, ub = b - x;
      const double lin = -(p + q * x) * 0.5 * std::log((ub * ub + y * y) / (ua * ua + y * y)) -
                         q * ((ub - ua) - y * (std::atan(ub / y) - std::atan(ua / y)));
      return (lin + norm_term) / kPi;
    }
  }
  return 0.0;
}

cplx atom_term(Kernel k, double t, double m, cplx z) {
  const double x = z.real(), y = z.imag();
  switch (k) {
    case Kernel::schwarz:
      return m * (1.0 / (t - z) - t / (1.0 + t * t)) / (kPi * kI);
    case Kernel::poisson:
      return m / kPi * y / ((t - x) * (t - x) + y * y);
    case Kernel::conjugate:
      return m / kPi * ((x - t) / ((x - t) * (x - t) + y * y) + t / (1.0 + t * t));
  }
  return 0.0;
}

// Kernel summed over all 2T-translates of a base point t (symmetric pairs).
cplx periodic_term(Kernel k, double t, double m, cplx z, double T) {
  const double kk = kPi / (2.0 * T);
  const double norm_term = stable_cot(kk * (t - kI)).real();
  switch (k) {
    case Kernel::schwarz:
      return m * kk * (stable_cot(kk * (t - z)) - norm_term) / (kPi * kI);
    case Kernel::poisson: {
      const double a = 2.0 * kk * z.imag();
      const double b = 2.0 * kk * (t - z.real());
      // 1 + e^2 - 2e cos b = (1 - e)^2 + 4e sin^2(b/2), free of cancellation
      // at the peak.
      const double e = std::exp(-a);
      const double one_minus_e = -std::expm1(-a);
      const double sb = std::sin(0.5 * b);
      return m / kPi * kk * (-std::expm1(-2.0 * a)) / (one_minus_e * one_minus_e + 4.0 * e * sb * sb);
    }
    case Kernel::conjugate:
      return m / kPi * kk * (-stable_cot(kk * (t - z)).real() + norm_term);
  }
  return 0.0;
}

bool table_touches(const TableDensity& t, double x) {
  for (std::size_t i = 1; i < t.xs.size(); ++i) {
    if (t.ys[i - 1] == 0.0 && t.ys[i] == 0.0) continue;
    if (x > t.xs[i - 1] - kSupportGap && x < t.xs[i] + kSupportGap) return true;
  }
  return false;
}

cplx nonperiodic(Kernel k, const Measure& mu, cplx z) {
  const bool real_z = z.imag() == 0.0;
  cplx sum = 0.0;
  for (const Atom& a : mu.atoms()) {
    if (real_z && std::abs(a.x - z.real()) < kSupportGap) on_support("an atom", z);
    sum += atom_term(k, a.x, a.mass, z);
  }
  if (auto* c = std::get_if<ConstantDensity>(&mu.ac()); c && c->value > 0.0) {
    if (real_z) on_support("the density support", z);
    // Principal value: the Cauchy part gives i pi c, the normalization cancels.
    if (k != Kernel::conjugate) sum += c->value;
  }
  if (auto* t = std::get_if<TableDensity>(&mu.ac())) {
    if (real_z && table_touches(*t, z.real())) on_support("the density support", z);
    for (std::size_t i = 1; i < t->xs.size(); ++i) {
      if (t->ys[i - 1] == 0.0 && t->ys[i] == 0.0) continue;
      sum += segment_integral(k, t->xs[i - 1], t->ys[i - 1], t->xs[i], t->ys[i], z);
    }
  }
  return sum;
}

cplx periodic(Kernel k, const Measure& mu, cplx z, double tol) {
  const double T = mu.half_period();
  const double P = 2.0 * T;
  const bool real_z = z.imag() == 0.0;
  const double xr = z.real() - P * std::floor((z.real() + T) / P);  // reduced into [-T, T)
  cplx sum = 0.0;
  for (const Atom& a : mu.atoms()) {
    if (real_z) {
      const double d = std::abs(a.x - xr);
      if (std::min(d, P - d) < kSupportGap) on_support("an atom", z);
    }
    sum += periodic_term(k, a.x, a.mass, z, T);
  }
  if (auto* c = std::get_if<ConstantDensity>(&mu.ac()); c && c->value > 0.0) {
    if (real_z) on_support("the density support", z);
    if (k != Kernel::conjugate) sum += c->value;
  }
  if (auto* t = std::get_if<TableDensity>(&mu.ac())) {
    if (real_z && (table_touches(*t, xr) || table_touches(*t, xr + P) || table_touches(*t, xr - P)))
      on_support("the density support", z);
    // The kernel peaks at xr with height ~1/Im z. Subtracting the density
    // value there leaves an integrand that stays bounded as Im z -> 0; the
    // subtracted constant integrates to itself (zero for Q).
    const double rho0 = (*t)(xr);
    std::vector<double> cuts(t->xs.begin(), t->xs.end());
    cuts.push_back(-T);
    cuts.push_back(T);
    if (xr > -T) cuts.push_back(xr);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const double piece_tol = tol / static_cast<double>(cuts.size());
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      const double lo = cuts[i - 1], hi = cuts[i];
      if (rho0 == 0.0 && (*t)(lo) == 0.0 && (*t)(hi) == 0.0 && (*t)(0.5 * (lo + hi)) == 0.0) continue;
      quad::ComplexFn f = [&](double s) { return periodic_term(k, s, (*t)(s) - rho0, z, T); };
      sum += quad::adaptive(f, lo, hi, piece_tol);
    }
    if (k != Kernel::conjugate) sum += rho0;
  }
  return sum;
}

cplx evaluate(Kernel k, const Measure& mu, cplx z, double tol) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("z must be finite");
  if (z.imag() < 0.0) throw InputError("z must lie in the closed upper half-plane");
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  return mu.periodic() ? periodic(k, mu, z, tol) : nonperiodic(k, mu, z);
}

}  // namespace

cplx stable_cot(cplx w) {
  if (w.imag() == 0.0) return std::cos(w.real()) / std::sin(w.real());
  if (w.imag() > 0.0) return -stable_cot(-w);
  const cplx e = std::exp(-2.0 * kI * w);  // |e| < 1 since Im w < 0
  return kI * (1.0 + e) / (1.0 - e);
}

HerglotzValue schwarz_transform(const Measure& mu, cplx z, double tol) {
  return HerglotzValue{z, evaluate(Kernel::schwarz, mu, z, tol)};
}

double poisson_integral(const Measure& mu, cplx z, double tol) {
  require_upper(z, "poisson_integral");
  return evaluate(Kernel::poisson, mu, z, tol).real();
}

double conjugate_poisson_integral(const Measure& mu, cplx z, double tol) {
  require_upper(z, "conjugate_poisson_integral");
  return evaluate(Kernel::conjugate, mu, z, tol).real();
}

SchurValue schur_from_measure(const Measure& mu, cplx z, double tol) {
  const cplx s = schwarz_transform(mu, z, tol).value;
  if (std::abs(s + 1.0) < 1e-14) {
    std::ostringstream os;
    os << "pole of the Schur representation: S(z) = -1 at z = " << z;
    throw NumericalError(os.str());
  }
  return SchurValue{z, (s - 1.0) / (s + 1.0)};
}

cplx lattice_sum_paired(const Measure& mu, cplx z, std::size_t pairs) {
  const double T = mu.half_period();
  std::vector<Atom> atoms(mu.atoms().begin(), mu.atoms().end());
  TableDensity table;
  if (auto* c = std::get_if<ConstantDensity>(&mu.ac()); c && c->value > 0.0)
    table = TableDensity{{-T, T}, {c->value, c->value}};
  if (auto* t = std::get_if<TableDensity>(&mu.ac())) table = *t;

  auto window = [&](double shift) {
    cplx sum = 0.0;
    for (const Atom& a : atoms) sum += atom_term(Kernel::schwarz, a.x + shift, a.mass, z);
    for (std::size_t i = 1; i < table.xs.size(); ++i)
      sum += segment_integral(Kernel::schwarz, table.xs[i - 1] + shift, table.ys[i - 1],
                              table.xs[i] + shift, table.ys[i], z);
    return sum;
  };
  cplx sum = window(0.0);
  // Accumulate from the far tail inward to limit round-off.
  for (std::size_t m = pairs; m >= 1; --m) {
    const double s = 2.0 * T * static_cast<double>(m);
    sum += window(s) + window(-s);
  }
  return sum;
}

ClarkReport validate_clark_identity(const StepPotential& pot, double b, cplx z0, double R,
                                    bool companion) {
  validate(pot);
  if (!(b > 0.0)) throw InputError("b must be positive");
  if (!(z0.imag() > 0.0)) throw InputError("z0 must lie in the upper half-plane");
  if (!(R > 0.0)) throw InputError("R must be positive");

  auto entry = [&](int i, int j, double x) { return matrix_solution(pot, b, cplx(x, 0.0))(i, j).real(); };

  auto real_zeros = [&](int i, int j) {
    const double step = std::min(0.05, kPi / (64.0 * b));
    const auto n = static_cast<std::size_t>(std::ceil(2.0 * R / step));
    std::vector<double> zeros;
    double x0 = -R;
    double f0 = entry(i, j, x0);
    for (std::size_t s = 1; s <= n; ++s) {
      const double x1 = -R + 2.0 * R * static_cast<double>(s) / static_cast<double>(n);
      const double f1 = entry(i, j, x1);
      if (f0 == 0.0) {
        zeros.push_back(x0);
      } else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) {
        double lo = x0, hi = x1, flo = f0;
        for (int it = 0; it < 80 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = entry(i, j, mid);
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        zeros.push_back(0.5 * (lo + hi));
      }
      x0 = x1;
      f0 = f1;
    }
    if (f0 == 0.0) zeros.push_back(x0);
    return zeros;
  };

  auto derivative = [&](int i, int j, double x) {
    const double h = 1e-6 * (1.0 + std::abs(x));
    return (entry(i, j, x + h) - entry(i, j, x - h)) / (2.0 * h);
  };

  // Clark measure on the zeros of M(i, 0); mass sign * pi / (derivative * other).
  auto clark_side = [&](int zero_row, double sign, std::size_t& count) {
    const int other = 1 - zero_row;
    const auto zeros = real_zeros(zero_row, 0);
    if (zeros.empty()) throw NumericalError("no real zeros found in [-R, R]");
    count = zeros.size();
    cplx s = 0.0;
    for (double x : zeros) {
      const double denom = derivative(zero_row, 0, x) * entry(other, 0, x);
      if (denom == 0.0 || !std::isfinite(denom)) throw NumericalError("degenerate zero: A'C vanishes");
      const double mass = sign * kPi / denom;
      s += mass * (1.0 / (x - z0) - x / (1.0 + x * x)) / (kPi * kI);
    }
    return -kI * s;
  };

  const Mat2 m = matrix_solution(pot, b, z0);
  ClarkReport r;
  r.ratio = m(0, 1) / m(0, 0);
  r.transform = clark_side(0, -1.0, r.zeros);
  r.residual = std::abs(r.ratio - r.transform);
  if (companion) {
    std::size_t n = 0;
    const cplx rhs = clark_side(1, 1.0, n);
    r.companion_zeros = n;
    r.companion_residual = std::abs(m(1, 1) / m(1, 0) - rhs);
  }
  return r;
}

}  // namespace nlft
