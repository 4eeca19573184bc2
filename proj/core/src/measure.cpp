#include "nlft/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nlft/errors.hpp"
#include "nlft/types.hpp"

namespace nlft {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string indexed(const char* field, std::size_t i) {
  std::ostringstream os;
  os << field << "[" << i << "]";
  return os.str();
}

// Linear interpolation on one segment of a table.
double lerp(double x0, double y0, double x1, double y1, double x) {
  const double w = (x - x0) / (x1 - x0);
  return y0 + w * (y1 - y0);
}

TableDensity clip_table(const TableDensity& t, double lo, double hi) {
  TableDensity out;
  const auto n = t.xs.size();
  if (t.xs.back() <= lo || t.xs.front() >= hi) return out;
  if (t.xs.front() < lo) {
    out.xs.push_back(lo);
    out.ys.push_back(t(lo));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.xs[i] >= lo && t.xs[i] <= hi) {
      out.xs.push_back(t.xs[i]);
      out.ys.push_back(t.ys[i]);
    }
  }
  if (t.xs.back() > hi) {
    out.xs.push_back(hi);
    out.ys.push_back(t(hi));
  }
  return out;
}

void validate_table(const TableDensity& t) {
  if (t.xs.size() != t.ys.size()) throw InputError("ac: xs and ys differ in length");
  if (t.xs.size() < 2) throw InputError("ac: table needs at least two samples");
  for (std::size_t i = 0; i < t.xs.size(); ++i) {
    if (!std::isfinite(t.xs[i])) throw InputError(indexed("ac.xs", i) + ": not finite");
    if (!std::isfinite(t.ys[i])) throw InputError(indexed("ac.ys", i) + ": not finite");
    if (t.ys[i] < 0.0) throw InputError(indexed("ac.ys", i) + ": negative density");
    if (i > 0 && !(t.xs[i] > t.xs[i - 1]))
      throw InputError(indexed("ac.xs", i) + ": abscissae must be strictly increasing");
  }
}

// sin(theta)/theta
double sinc(double theta) {
  if (std::abs(theta) < 1e-4) {
    const double t2 = theta * theta;
    return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
  }
  return std::sin(theta) / theta;
}

// (sin(theta) - theta cos(theta)) / theta^3
double sinc_moment(double theta) {
  if (std::abs(theta) < 0.1) {
    const double t2 = theta * theta;
    return 1.0 / 3.0 - t2 / 30.0 + t2 * t2 / 840.0 - t2 * t2 * t2 / 45360.0;
  }
  return (std::sin(theta) - theta * std::cos(theta)) / (theta * theta * theta);
}

// Integral over [u, v] of the linear function through (u, yu), (v, yv) times
// cos(omega x), written around the midpoint so that short segments do not
// cancel catastrophically.
double linear_cos_integral(double u, double yu, double v, double yv, double omega) {
  const double h = v - u;
  const double m = 0.5 * (u + v);
  const double ym = 0.5 * (yu + yv);
  const double q = (yv - yu) / h;
  const double theta = 0.5 * omega * h;
  const double even = ym * h * std::cos(omega * m) * sinc(theta);
  const double odd = -q * std::sin(omega * m) * omega * h * h * h * sinc_moment(theta) / 4.0;
  return even + odd;
}

// Integral over [u, v] of the linear density times 1/(1+t^2).
double linear_poisson_integral(double u, double yu, double v, double yv) {
  const double q = (yv - yu) / (v - u);
  const double p = yu - q * u;
  return p * (std::atan(v) - std::atan(u)) + 0.5 * q * std::log((1.0 + v * v) / (1.0 + u * u));
}

}  // namespace

double TableDensity::operator()(double x) const {
  if (xs.empty() || x < xs.front() || x > xs.back()) return 0.0;
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.end()) return ys.back();
  const auto i = static_cast<std::size_t>(it - xs.begin());
  return lerp(xs[i - 1], ys[i - 1], xs[i], ys[i], x);
}

double TableDensity::integral(double lo, double hi) const {
  if (xs.empty() || hi <= lo) return 0.0;
  lo = std::max(lo, xs.front());
  hi = std::min(hi, xs.back());
  if (hi <= lo) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double a = std::max(lo, xs[i - 1]);
    const double b = std::min(hi, xs[i]);
    if (b <= a) continue;
    const double ya = lerp(xs[i - 1], ys[i - 1], xs[i], ys[i], a);
    const double yb = lerp(xs[i - 1], ys[i - 1], xs[i], ys[i], b);
    sum += 0.5 * (b - a) * (ya + yb);
  }
  return sum;
}

Measure::Measure(Density ac, std::vector<Atom> atoms, std::optional<double> period)
    : ac_(std::move(ac)), period_(period) {
  if (period_) {
    if (!std::isfinite(*period_) || *period_ <= 0.0)
      throw InputError("period: must be a positive finite number");
  }
  if (auto* c = std::get_if<ConstantDensity>(&ac_)) {
    if (!std::isfinite(c->value)) throw InputError("ac.value: not finite");
    if (c->value < 0.0) throw InputError("ac.value: negative density");
  } else if (auto* t = std::get_if<TableDensity>(&ac_)) {
    validate_table(*t);
    if (period_) {
      const double T = 0.5 * *period_;
      TableDensity clipped = clip_table(*t, -T, T);
      if (clipped.xs.size() < 2)
        ac_ = NoDensity{};
      else
        ac_ = std::move(clipped);
    }
  }

  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Atom& a = atoms[i];
    if (!std::isfinite(a.x)) throw InputError(indexed("atoms", i) + ".x: not finite");
    if (!std::isfinite(a.mass)) throw InputError(indexed("atoms", i) + ".mass: not finite");
    if (a.mass < 0.0) throw InputError(indexed("atoms", i) + ".mass: negative mass");
    if (a.mass == 0.0) throw InputError(indexed("atoms", i) + ".mass: mass must be positive");
    if (period_) {
      const double T = 0.5 * *period_;
      if (a.x < -T || a.x >= T)
        throw InputError(indexed("atoms", i) + ".x: atom outside base window [-T, T)");
    }
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& l, const Atom& r) { return l.x < r.x; });
  for (const Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().x == a.x)
      atoms_.back().mass += a.mass;
    else
      atoms_.push_back(a);
  }

  if (!period_ && !std::isfinite(poisson_mass()))
    throw InputError("measure is not Poisson-finite");
}

Measure Measure::lebesgue(double density) {
  return Measure(ConstantDensity{density}, {});
}

double Measure::half_period() const {
  if (!period_) throw InputError("measure is not periodic");
  return 0.5 * *period_;
}

bool Measure::has_density() const noexcept {
  if (auto* c = std::get_if<ConstantDensity>(&ac_)) return c->value > 0.0;
  if (auto* t = std::get_if<TableDensity>(&ac_))
    return std::any_of(t->ys.begin(), t->ys.end(), [](double y) { return y > 0.0; });
  return false;
}

bool Measure::is_zero() const noexcept { return atoms_.empty() && !has_density(); }

double Measure::density(double x) const {
  if (period_) {
    const double T = 0.5 * *period_;
    x -= *period_ * std::floor((x + T) / *period_);
  }
  if (auto* c = std::get_if<ConstantDensity>(&ac_)) return c->value;
  if (auto* t = std::get_if<TableDensity>(&ac_)) return (*t)(x);
  return 0.0;
}

double Measure::cumulative_base(double x) const {
  const double T = 0.5 * *period_;
  double sum = 0.0;
  if (auto* c = std::get_if<ConstantDensity>(&ac_)) sum += c->value * (x + T);
  if (auto* t = std::get_if<TableDensity>(&ac_)) sum += t->integral(-T, x);
  for (const Atom& a : atoms_) {
    if (a.x >= x) break;
    sum += a.mass;
  }
  return sum;
}

double Measure::mass(double lo, double hi) const {
  if (!(hi > lo)) return 0.0;
  if (period_) {
    const double P = *period_;
    const double T = 0.5 * P;
    const double per = cumulative_base(T);
    auto F = [&](double x) {
      const double k = std::floor((x + T) / P);
      const double r = std::clamp(x - k * P, -T, T);
      return k * per + cumulative_base(r);
    };
    return F(hi) - F(lo);
  }
  double sum = 0.0;
  if (auto* c = std::get_if<ConstantDensity>(&ac_)) {
    if (c->value > 0.0) sum += c->value * (hi - lo);
  }
  if (auto* t = std::get_if<TableDensity>(&ac_)) sum += t->integral(lo, hi);
  auto first = std::lower_bound(atoms_.begin(), atoms_.end(), lo,
                                [](const Atom& a, double v) { return a.x < v; });
  for (auto it = first; it != atoms_.end() && it->x < hi; ++it) sum += it->mass;
  return sum;
}

double Measure::base_mass() const {
  if (!period_) throw InputError("base_mass: measure is not periodic");
  return cumulative_base(0.5 * *period_);
}

double Measure::poisson_mass() const {
  if (period_) throw InputError("poisson_mass: defined for non-periodic measures");
  double sum = 0.0;
  for (const Atom& a : atoms_) sum += a.mass / (1.0 + a.x * a.x);
  if (auto* c = std::get_if<ConstantDensity>(&ac_)) sum += c->value * kPi;
  if (auto* t = std::get_if<TableDensity>(&ac_)) {
    for (std::size_t i = 1; i < t->xs.size(); ++i)
      sum += linear_poisson_integral(t->xs[i - 1], t->ys[i - 1], t->xs[i], t->ys[i]);
  }
  return sum;
}

Measure Measure::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw InputError("scale factor must be positive and finite");
  Density ac = ac_;
  if (auto* c = std::get_if<ConstantDensity>(&ac)) c->value *= factor;
  if (auto* t = std::get_if<TableDensity>(&ac))
    for (double& y : t->ys) y *= factor;
  std::vector<Atom> atoms = atoms_;
  for (Atom& a : atoms) a.mass *= factor;
  return Measure(std::move(ac), std::move(atoms), period_);
}

namespace {

TableDensity add_tables(const TableDensity& l, const TableDensity& r) {
  auto ends_vanish = [](const TableDensity& t) { return t.ys.front() == 0.0 && t.ys.back() == 0.0; };
  const bool same_range = l.xs.front() == r.xs.front() && l.xs.back() == r.xs.back();
  if (!same_range && !(ends_vanish(l) && ends_vanish(r)))
    throw InputError("sum of table densities with jumps at different ends is not piecewise linear");
  std::vector<double> xs;
  std::merge(l.xs.begin(), l.xs.end(), r.xs.begin(), r.xs.end(), std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  TableDensity out;
  out.xs = xs;
  for (double x : xs) out.ys.push_back(l(x) + r(x));
  return out;
}

Density add_densities(const Density& l, const Density& r, std::optional<double> period) {
  if (std::holds_alternative<NoDensity>(l)) return r;
  if (std::holds_alternative<NoDensity>(r)) return l;
  auto* lc = std::get_if<ConstantDensity>(&l);
  auto* rc = std::get_if<ConstantDensity>(&r);
  if (lc && rc) return ConstantDensity{lc->value + rc->value};
  auto* lt = std::get_if<TableDensity>(&l);
  auto* rt = std::get_if<TableDensity>(&r);
  if (lt && rt) return add_tables(*lt, *rt);
  if (!period) throw InputError("constant plus table density is only representable for periodic measures");
  const double T = 0.5 * *period;
  const double c = lc ? lc->value : rc->value;
  TableDensity window{{-T, T}, {c, c}};
  return add_tables(window, lt ? *lt : *rt);
}

}  // namespace

Measure operator+(const Measure& lhs, const Measure& rhs) {
  if (lhs.period() != rhs.period()) throw InputError("cannot add measures with different periods");
  std::vector<Atom> atoms(lhs.atoms().begin(), lhs.atoms().end());
  atoms.insert(atoms.end(), rhs.atoms().begin(), rhs.atoms().end());
  return Measure(add_densities(lhs.ac(), rhs.ac(), lhs.period()), std::move(atoms), lhs.period());
}

Measure periodize(const Measure& mu, double T) {
  if (mu.periodic()) throw InputError("periodize: input is already periodic");
  if (!(T > 0.0) || !std::isfinite(T)) throw InputError("periodize: T must be positive");
  std::vector<Atom> atoms;
  for (const Atom& a : mu.atoms())
    if (a.x >= -T && a.x < T) atoms.push_back(a);
  // The constructor clips table densities to the base window.
  return Measure(mu.ac(), std::move(atoms), 2.0 * T);
}

bool is_even(const Measure& mu, double tol) {
  const auto atoms = mu.atoms();
  const double T = mu.periodic() ? mu.half_period() : 0.0;
  const double edge_eps = 1e-12 * std::max(1.0, T);
  for (const Atom& a : atoms) {
    if (mu.periodic() && std::abs(a.x + T) <= edge_eps) continue;  // paired with its image at +T
    if (std::abs(a.x) <= edge_eps) continue;
    auto it = std::lower_bound(atoms.begin(), atoms.end(), -a.x - tol,
                               [](const Atom& l, double v) { return l.x < v; });
    if (it == atoms.end() || std::abs(it->x + a.x) > tol) return false;
    if (std::abs(it->mass - a.mass) > tol) return false;
  }
  if (auto* t = std::get_if<TableDensity>(&mu.ac())) {
    for (double x : t->xs) {
      if (std::abs((*t)(x) - (*t)(-x)) > tol) return false;
    }
  }
  return true;
}

TrigMoments trig_moments(const Measure& mu, std::size_t n_max) {
  if (!mu.periodic()) throw InputError("trig_moments: non-periodic input");
  if (!is_even(mu)) throw InputError("trig_moments: asymmetric measure");
  const double T = mu.half_period();
  TrigMoments out;
  out.half_period = T;
  out.coeffs.assign(n_max + 1, 0.0);
  out.coeffs[0] = mu.base_mass() / (2.0 * T);

  const auto* table = std::get_if<TableDensity>(&mu.ac());
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double omega = static_cast<double>(n) * kPi / T;
    double sum = 0.0;
    for (const Atom& a : mu.atoms()) sum += a.mass * std::cos(omega * a.x);
    // A constant density integrates to zero against every cos(n pi x / T).
    if (table) {
      for (std::size_t i = 1; i < table->xs.size(); ++i)
        sum += linear_cos_integral(table->xs[i - 1], table->ys[i - 1], table->xs[i], table->ys[i], omega);
    }
    out.coeffs[n] = sum / T;
  }
  return out;
}

namespace {

// Greedy packing of disjoint (mu, delta)-intervals meeting the window; stops
// once `need` intervals are found.
std::size_t count_delta_intervals(const Measure& mu, Interval w, double delta, std::size_t need) {
  const double min_len = delta * (1.0 + 1e-9) + 1e-12;
  const double limit = w.hi + w.length();
  double p = w.lo - delta;
  std::size_t count = 0;
  while (p < w.hi && count < need) {
    double e = p + min_len;
    if (!(mu.mass(p, e) > delta)) {
      if (!(mu.mass(p, limit) > delta)) break;
      double lo = e, hi = limit;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mu.mass(p, mid) > delta)
          hi = mid;
        else
          lo = mid;
      }
      e = hi;
    }
    ++count;
    p = e;
  }
  return count;
}

double sup_unit_mass(const Measure& mu, Interval w) {
  double sup = 0.0;
  for (double k = std::ceil(w.lo); k + 1.0 <= w.hi; k += 1.0) sup = std::max(sup, mu.mass(k, k + 1.0));
  return sup;
}

}  // namespace

PwReport pw_diagnostic(const Measure& mu, Interval window, double d) {
  PwReport r;
  r.sup_unit_mass = sup_unit_mass(mu, window);
  const double c = 0.5 * (window.lo + window.hi);
  const double L = window.length();
  r.sup_unit_mass_wide = sup_unit_mass(mu, Interval{c - 2.0 * L, c + 2.0 * L});
  r.bounded = std::isfinite(r.sup_unit_mass_wide) &&
              !(r.sup_unit_mass > 0.0 && r.sup_unit_mass_wide > 2.0 * r.sup_unit_mass);
  r.atoms_per_period = mu.atoms().size();
  if (mu.periodic()) r.locally_infinite_support = mu.has_density();

  const auto need = static_cast<std::size_t>(std::ceil(std::max(d, 0.0) * L));
  if (need > 0 && L > 0.0) {
    double lo = 0.0, hi = L;
    if (count_delta_intervals(mu, window, 1e-12, need) >= need) {
      for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_delta_intervals(mu, window, mid, need) >= need)
          lo = mid;
        else
          hi = mid;
      }
      r.largest_delta = lo;
      r.intervals_at_delta = count_delta_intervals(mu, window, lo, need);
    }
  }

  if (!r.bounded)
    r.verdict = "fails boundedness";
  else if (r.locally_infinite_support == false)
    r.verdict = "fails locally infinite support";
  else if (need > 0 && r.largest_delta <= 0.0)
    r.verdict = "fails interval density";
  else
    r.verdict = "consistent with PW";
  return r;
}

}  // namespace nlft
