#include "nlft/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "nlft/converge.hpp"
#include "nlft/errors.hpp"
#include "nlft/herglotz.hpp"
#include "nlft/inverse.hpp"
#include "nlft/quadrature.hpp"

namespace nlft {

namespace gen {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t count(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

DiscretePotential discrete_potential(Rng& rng, std::size_t max_masses, double bound) {
  DiscretePotential pot;
  pot.spacing = uniform(rng, 0.2, 1.0);
  const std::size_t n = count(rng, 1, max_masses);
  for (std::size_t i = 0; i < n; ++i) pot.masses.push_back(uniform(rng, -bound, bound));
  return pot;
}

StepPotential step_potential(Rng& rng, std::size_t max_steps, double bound) {
  StepPotential pot;
  pot.breakpoints.push_back(0.0);
  const std::size_t k = count(rng, 1, max_steps);
  for (std::size_t i = 0; i < k; ++i) {
    pot.breakpoints.push_back(pot.breakpoints.back() + uniform(rng, 0.05, 0.5));
    pot.values.push_back(uniform(rng, -bound, bound));
  }
  return pot;
}

namespace {

TableDensity even_table(Rng& rng, double T, double floor) {
  const std::size_t half = count(rng, 2, 6);
  std::vector<double> xs_half, ys_half;
  for (std::size_t i = 0; i <= half; ++i) {
    xs_half.push_back(i == half ? T : T * static_cast<double>(i) / static_cast<double>(half));
    ys_half.push_back(uniform(rng, floor, 2.0));
  }
  TableDensity t;
  for (std::size_t i = half; i >= 1; --i) {
    t.xs.push_back(-xs_half[i]);
    t.ys.push_back(ys_half[i]);
  }
  for (std::size_t i = 0; i <= half; ++i) {
    t.xs.push_back(xs_half[i]);
    t.ys.push_back(ys_half[i]);
  }
  return t;
}

}  // namespace

Measure even_periodic_measure(Rng& rng, double T) {
  Density ac = uniform(rng, 0.0, 1.0) < 0.5 ? Density(ConstantDensity{uniform(rng, 0.3, 2.0)})
                                            : Density(even_table(rng, T, 0.3));
  std::vector<Atom> atoms;
  if (uniform(rng, 0.0, 1.0) < 0.5) atoms.push_back({0.0, uniform(rng, 0.1, 2.0)});
  if (uniform(rng, 0.0, 1.0) < 0.25) atoms.push_back({-T, uniform(rng, 0.1, 1.0)});
  const std::size_t pairs = count(rng, 0, 3);
  for (std::size_t i = 0; i < pairs; ++i) {
    const double x = uniform(rng, 0.05, 0.95) * T;
    const double m = uniform(rng, 0.1, 2.0);
    atoms.push_back({x, m});
    atoms.push_back({-x, m});
  }
  return Measure(std::move(ac), std::move(atoms), 2.0 * T);
}

Measure even_periodic_density(Rng& rng, double T) {
  if (uniform(rng, 0.0, 1.0) < 0.25) return Measure(ConstantDensity{uniform(rng, 0.3, 2.0)}, {}, 2.0 * T);
  return Measure(even_table(rng, T, 0.3), {}, 2.0 * T);
}

Measure positive_measure(Rng& rng) {
  const bool periodic = uniform(rng, 0.0, 1.0) < 0.5;
  const double T = uniform(rng, 1.0, 6.0);
  const double lo = periodic ? -T : uniform(rng, -8.0, 0.0);
  const double hi = periodic ? T : lo + uniform(rng, 0.5, 8.0);
  Density ac = NoDensity{};
  const double pick = uniform(rng, 0.0, 1.0);
  if (pick < 0.35) {
    ac = ConstantDensity{uniform(rng, 0.05, 2.0)};
  } else if (pick < 0.7) {
    TableDensity t;
    const std::size_t n = count(rng, 2, 8);
    for (std::size_t i = 0; i < n; ++i) {
      t.xs.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
      t.ys.push_back(uniform(rng, 0.0, 2.0));
    }
    ac = std::move(t);
  }
  std::vector<Atom> atoms;
  const std::size_t k = count(rng, ac.index() == 0 ? 1 : 0, 4);
  for (std::size_t i = 0; i < k; ++i)
    atoms.push_back({periodic ? uniform(rng, -T, T) : uniform(rng, -10.0, 10.0), uniform(rng, 0.05, 3.0)});
  return Measure(std::move(ac), std::move(atoms), periodic ? std::optional<double>(2.0 * T) : std::nullopt);
}

}  // namespace gen

namespace {

constexpr cplx kI{0.0, 1.0};

std::vector<double> real_grid(std::size_t n, double lo, double hi) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return xs;
}

std::string sci(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

PropertyResult bounded(const char* module, const char* name, std::size_t n, double worst, double limit) {
  PropertyResult r;
  r.module = module;
  r.name = name;
  r.instances = n;
  r.worst = worst;
  r.bound = "<= " + sci(limit);
  r.passed = std::isfinite(worst) && worst <= limit;
  return r;
}

Rng seeded(std::uint64_t seed, std::uint64_t salt) { return Rng(seed * 0x9e3779b97f4a7c15ULL + salt); }

double det_defect(const TransferMatrix& tm) { return std::abs(std::norm(tm.a) - std::norm(tm.b) - 1.0); }

}  // namespace

PropertyResult prop_determinant(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 1);
  const auto xs = real_grid(200, -10.0, 10.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto d = gen::discrete_potential(rng, 10, 0.3);
    const auto s = gen::step_potential(rng, 8, 1.0);
    for (double x : xs) {
      worst = std::max(worst, det_defect(forward_discrete(d, x)));
      worst = std::max(worst, det_defect(forward_continuous(s, x)));
    }
  }
  return bounded("nlft", "determinant |a|^2-|b|^2 = 1 on real z", instances, worst, 1e-11);
}

PropertyResult prop_translation(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 2);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto pot = gen::discrete_potential(rng, 10, 0.5);
    const std::size_t k = gen::count(rng, 1, 8);
    DiscretePotential shifted = pot;
    shifted.masses.insert(shifted.masses.begin(), k, 0.0);
    for (int j = 0; j < 5; ++j) {
      const cplx z(gen::uniform(rng, -5.0, 5.0), j == 0 ? 0.0 : gen::uniform(rng, 0.0, 1.0));
      const auto base = forward_discrete(pot, z);
      const auto moved = forward_discrete(shifted, z);
      const cplx phase = std::exp(2.0 * kI * z * (static_cast<double>(k) * pot.spacing));
      const double scale = std::max(1.0, std::abs(base.b * phase));
      worst = std::max({worst, std::abs(moved.a - base.a) / std::max(1.0, std::abs(base.a)),
                        std::abs(moved.b - base.b * phase) / scale});
    }
  }
  return bounded("nlft", "translation multiplies b by e^{2iz k spacing}", instances, worst, 1e-12);
}

PropertyResult prop_scaling(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 3);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto pot = gen::step_potential(rng, 6, 1.0);
    const double a = gen::uniform(rng, 0.3, 3.0);
    StepPotential scaled = pot;
    for (double& b : scaled.breakpoints) b /= a;
    for (double& v : scaled.values) v *= a;
    for (int j = 0; j < 5; ++j) {
      const cplx z(gen::uniform(rng, -5.0, 5.0), gen::uniform(rng, 0.0, 1.0));
      const cplx lhs = schur_ratio(forward_continuous(scaled, z));
      const cplx rhs = schur_ratio(forward_continuous(pot, z / a));
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return bounded("nlft", "time scaling a f(at) -> f^(z/a)", instances, worst, 1e-9);
}

PropertyResult prop_linearization(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 4);
  const auto xs = real_grid(101, -5.0, 5.0);
  double lo = INFINITY, hi = -INFINITY, worst_gap = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto g = gen::discrete_potential(rng, 8, 1.0);
    auto error = [&](double eps) {
      DiscretePotential p = g;
      for (double& c : p.masses) c *= eps;
      double e = 0.0;
      for (double x : xs)
        e = std::max(e, std::abs(schur_ratio(forward_discrete(p, x)) - eps * fourier_linear(g, x)));
      return e;
    };
    const double ratio = error(1e-2) / error(1e-3);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    worst_gap = std::max(worst_gap, ratio < 50.0 ? 50.0 / ratio : ratio / 200.0);
  }
  PropertyResult r;
  r.module = "nlft";
  r.name = "linearization error ratio per epsilon decade";
  r.instances = instances;
  r.worst = hi;
  r.bound = "in [50, 200]";
  r.passed = lo >= 50.0 && hi <= 200.0;
  r.detail = "ratios in [" + sci(lo) + ", " + sci(hi) + "]";
  return r;
}

PropertyResult prop_riemann_lebesgue(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 5);
  const auto xs = real_grid(200, -10.0, 10.0);
  double worst = -INFINITY;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto pot = gen::discrete_potential(rng, 10, 1.0);
    double l1 = 0.0;
    for (double c : pot.masses) l1 += std::abs(c);
    const double cap = std::tanh(l1);
    for (double x : xs) worst = std::max(worst, std::abs(schur_ratio(forward_discrete(pot, x))) - cap);
  }
  return bounded("nlft", "|f^| <= tanh(sum |c_n|)", instances, worst, 1e-12);
}

namespace {

// Integral over the real line of -log(1 - |f^(x)|^2) for a step potential:
// twice the half-line integral (the integrand is even), unit panels to X and
// X/2, Richardson on the 1/X tail.
double parseval_integral(const StepPotential& pot) {
  const quad::RealFn integrand = [&](double x) {
    const cplx s = schur_ratio(forward_continuous(pot, x));
    return -std::log1p(-std::norm(s));
  };
  constexpr int X = 128;
  double half = 0.0, full = 0.0;
  for (int k = 0; k < X; ++k) {
    const double v = quad::adaptive(integrand, k, k + 1, 1e-11);
    full += v;
    if (k < X / 2) half += v;
  }
  return 2.0 * (2.0 * full - half);
}

double l2_norm_sq(const StepPotential& pot) {
  double s = 0.0;
  for (std::size_t j = 0; j < pot.values.size(); ++j)
    s += pot.values[j] * pot.values[j] * (pot.breakpoints[j + 1] - pot.breakpoints[j]);
  return s;
}

}  // namespace

PropertyResult prop_parseval(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 6);
  double worst = 0.0, ratio_lo = INFINITY, ratio_hi = -INFINITY;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto pot = gen::step_potential(rng, 4, 1.0);
    const double n2 = l2_norm_sq(pot);
    const double integral = parseval_integral(pot);
    worst = std::max(worst, std::abs(integral - 2.0 * n2) / (2.0 * n2));
    ratio_lo = std::min(ratio_lo, integral / n2);
    ratio_hi = std::max(ratio_hi, integral / n2);
  }
  PropertyResult r = bounded("nlft", "non-linear Parseval: integral = 2 ||f||^2", instances, worst, 1e-3);
  r.detail = "integral/||f||^2 in [" + sci(ratio_lo) + ", " + sci(ratio_hi) + "]";
  return r;
}

PropertyResult prop_group(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 7);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const auto first = gen::discrete_potential(rng, 8, 0.5);
    DiscretePotential second = gen::discrete_potential(rng, 8, 0.5);
    second.spacing = first.spacing;
    second.first_index = first.first_index + static_cast<int>(first.masses.size());
    DiscretePotential joined = first;
    joined.masses.insert(joined.masses.end(), second.masses.begin(), second.masses.end());
    for (int j = 0; j < 5; ++j) {
      const cplx z(gen::uniform(rng, -5.0, 5.0), gen::uniform(rng, 0.0, 1.0));
      const Mat2 whole = forward_discrete_matrix(joined, z);
      const Mat2 parts = forward_discrete_matrix(second, z) * forward_discrete_matrix(first, z);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          worst = std::max(worst, std::abs(whole(a, b) - parts(a, b)) / std::max(1.0, std::abs(whole(a, b))));
    }
  }
  return bounded("nlft", "group property over concatenation", instances, worst, 1e-12);
}

PropertyResult prop_toeplitz_bruteforce(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 8);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    const auto mom = trig_moments(gen::even_periodic_measure(rng, T), 7);
    const auto lev = toeplitz_inverse_sums(mom, 8, ToeplitzSolver::levinson);
    const auto cho = toeplitz_inverse_sums(mom, 8, ToeplitzSolver::cholesky);
    for (std::size_t n = 0; n < 8; ++n) {
      const double oracle = inverse_entry_sum_gauss_jordan(toeplitz_matrix(mom, n), n + 1);
      worst = std::max({worst, std::abs(lev[n] - oracle), std::abs(cho[n] - oracle)});
    }
  }
  return bounded("inverse", "Toeplitz inverse sums vs Gauss-Jordan (N <= 8)", instances, worst, 1e-12);
}

namespace {

// Positive-definite moment corpus for the route checks: the two closed-form
// families plus random even measures.
std::vector<TrigMoments> moment_corpus(Rng& rng, std::size_t random_count, std::size_t n_max) {
  std::vector<TrigMoments> out;
  const double s2pi = std::sqrt(2.0 * kPi);
  for (double T : {kPi, 2 * kPi, 4 * kPi, 8 * kPi})
    out.push_back(trig_moments(Measure(ConstantDensity{1.0 / s2pi}, {{0.0, s2pi}}, 2.0 * T), n_max));
  out.push_back(trig_moments(Measure(ConstantDensity{1.0}, {{0.0, kPi}}, 2.0 * kPi), n_max));
  for (std::size_t i = 0; i < random_count; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    out.push_back(trig_moments(gen::even_periodic_measure(rng, T), n_max));
  }
  return out;
}

}  // namespace

PropertyResult prop_route_equality(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 9);
  constexpr std::size_t N = 128;
  const auto corpus = moment_corpus(rng, instances, N - 1);
  double worst = 0.0;
  for (const auto& mom : corpus) {
    const auto t = toeplitz_h11(mom, N);
    const auto o = opuc_h11(mom, N);
    for (std::size_t n = 0; n < N; ++n)
      worst = std::max(worst, std::abs(t.steps[n] - o.steps[n]) / std::max(1.0, t.steps[n]));
  }
  return bounded("inverse", "Toeplitz and OPUC steps agree (N = 128)", corpus.size(), worst, 1e-10);
}

PropertyResult prop_inverse_sums_increasing(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 10);
  const auto corpus = moment_corpus(rng, instances, 63);
  double worst = -INFINITY;  // largest -(S_n - S_{n-1})
  for (const auto& mom : corpus) {
    const auto s = toeplitz_inverse_sums(mom, 64);
    for (std::size_t n = 1; n < s.size(); ++n) worst = std::max(worst, s[n - 1] - s[n]);
  }
  PropertyResult r = bounded("inverse", "Sigma(J_n^-1) strictly increasing", corpus.size(), worst, 0.0);
  r.passed = worst < 0.0;
  r.bound = "< 0";
  return r;
}

PropertyResult prop_scaling_covariance(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 11);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    const Measure mu = gen::even_periodic_measure(rng, T);
    const double s = gen::uniform(rng, 0.1, 10.0);
    const auto h = hamiltonian_from_measure(mu, 32);
    const auto hs = hamiltonian_from_measure(mu.scaled(s), 32);
    const auto c = potential_from_h11(h);
    const auto cs = potential_from_h11(hs);
    for (std::size_t n = 0; n < 32; ++n) {
      worst = std::max(worst, std::abs(hs.steps[n] * s - h.steps[n]) / h.steps[n]);
      // The origin mass carries the normalization h_{-1} = 1 and shifts by
      // log(s)/2; every later mass is scale-free.
      const double expected = n == 0 ? c.masses[0] + 0.5 * std::log(s) : c.masses[n];
      worst = std::max(worst, std::abs(cs.masses[n] - expected));
    }
  }
  return bounded("inverse", "h_n(s mu) = h_n(mu)/s, masses invariant", instances, worst, 1e-12);
}

PropertyResult prop_l2_sanity(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 12);
  constexpr std::size_t N = 512;
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    const auto pot = inverse_nlft(gen::even_periodic_density(rng, T), N);
    double total = 0.0, at_three_quarters = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      total += pot.masses[n] * pot.masses[n];
      if (n + 1 == 3 * N / 4) at_three_quarters = total;
    }
    if (total > 0.0) worst = std::max(worst, (total - at_three_quarters) / total);
  }
  return bounded("inverse", "partial sums of c_n^2 settle (density bounded below)", instances, worst, 1e-6);
}

PropertyResult prop_periodize_content(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 13);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    std::vector<Atom> inside{{0.0, gen::uniform(rng, 0.1, 2.0)}};
    const double x = gen::uniform(rng, 0.1, 0.9) * T;
    const double m = gen::uniform(rng, 0.1, 2.0);
    inside.push_back({x, m});
    inside.push_back({-x, m});
    std::vector<Atom> extended = inside;
    const double far = T + gen::uniform(rng, 0.1, 20.0);
    const double fm = gen::uniform(rng, 0.1, 5.0);
    extended.push_back({far, fm});
    extended.push_back({-far, fm});
    const double c = gen::uniform(rng, 0.1, 2.0);
    const auto a = trig_moments(periodize(Measure(ConstantDensity{c}, inside), T), 16);
    const auto b = trig_moments(periodize(Measure(ConstantDensity{c}, extended), T), 16);
    for (std::size_t n = 0; n <= 16; ++n) worst = std::max(worst, std::abs(a.coeffs[n] - b.coeffs[n]));
  }
  return bounded("measure", "moments ignore mass outside [-T, T)", instances, worst, 1e-12);
}

PropertyResult prop_moment_linearity(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 14);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    const Measure mu = gen::even_periodic_measure(rng, T);
    const Measure nu = gen::even_periodic_measure(rng, T);
    const auto a = trig_moments(mu, 16);
    const auto b = trig_moments(nu, 16);
    const auto s = trig_moments(mu + nu, 16);
    for (std::size_t n = 0; n <= 16; ++n)
      worst = std::max(worst, std::abs(s.coeffs[n] - a.coeffs[n] - b.coeffs[n]));
  }
  return bounded("measure", "moments are linear", instances, worst, 1e-12);
}

PropertyResult prop_total_mass(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 15);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    const Measure mu = gen::even_periodic_measure(rng, T);
    const auto mom = trig_moments(mu, 0);
    worst = std::max(worst, std::abs(mom.coeffs[0] * 2.0 * T - mu.mass(-T, T)));
  }
  return bounded("measure", "2T a_0 = mu([-T, T))", instances, worst, 1e-10);
}

PropertyResult prop_poisson_positive(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 16);
  double worst = INFINITY;  // smallest P seen
  for (std::size_t i = 0; i < instances; ++i) {
    const Measure mu = gen::positive_measure(rng);
    for (int j = 0; j < 5; ++j) {
      const cplx z(gen::uniform(rng, -10.0, 10.0), std::exp(gen::uniform(rng, std::log(0.1), std::log(10.0))));
      worst = std::min(worst, poisson_integral(mu, z));
    }
  }
  PropertyResult r = bounded("herglotz", "Poisson integral positive", instances, 0.0, 0.0);
  r.worst = worst;
  r.bound = "> 0";
  r.passed = worst > 0.0;
  return r;
}

PropertyResult prop_decomposition(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 17);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const Measure mu = gen::positive_measure(rng);
    for (int j = 0; j < 20; ++j) {
      const cplx z(gen::uniform(rng, -10.0, 10.0), gen::uniform(rng, 0.05, 5.0));
      const cplx s = schwarz_transform(mu, z).value;
      const cplx pq(poisson_integral(mu, z), conjugate_poisson_integral(mu, z));
      worst = std::max(worst, std::abs(s - pq));
    }
  }
  return bounded("herglotz", "S = P + iQ", instances, worst, 1e-9);
}

PropertyResult prop_schur_bound(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 18);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const Measure mu = gen::positive_measure(rng);
    for (int j = 0; j < 10; ++j) {
      const cplx z(gen::uniform(rng, -10.0, 10.0), gen::uniform(rng, 0.01, 5.0));
      worst = std::max(worst, std::abs(schur_from_measure(mu, z).value));
    }
  }
  return bounded("herglotz", "|Schur| <= 1", instances, worst, 1.0 + 1e-12);
}

PropertyResult prop_lattice_sum(std::uint64_t seed, std::size_t instances) {
  Rng rng = seeded(seed, 19);
  double worst = 0.0;
  for (std::size_t i = 0; i < instances; ++i) {
    const double T = gen::uniform(rng, 1.0, 6.0);
    std::vector<Atom> atoms;
    const std::size_t k = gen::count(rng, 1, 3);
    for (std::size_t j = 0; j < k; ++j) atoms.push_back({gen::uniform(rng, -T, T), gen::uniform(rng, 0.1, 2.0)});
    const Measure mu(ConstantDensity{gen::uniform(rng, 0.0, 1.0)}, std::move(atoms), 2.0 * T);
    const cplx z(gen::uniform(rng, -5.0, 5.0), gen::uniform(rng, 0.2, 3.0));
    const cplx half = lattice_sum_paired(mu, z, 500000);
    const cplx full = lattice_sum_paired(mu, z, 1000000);
    const cplx extrapolated = 2.0 * full - half;  // the pair tail is O(1/M)
    worst = std::max(worst, std::abs(extrapolated - schwarz_transform(mu, z).value));
  }
  return bounded("herglotz", "cotangent form vs paired lattice sum (|m| <= 1e6)", instances, worst, 1e-8);
}

namespace {

std::vector<Measure> convergence_corpus() {
  const double s2pi = std::sqrt(2.0 * kPi);
  return {Measure(ConstantDensity{1.0 / s2pi}, {{0.0, s2pi}}), Measure(ConstantDensity{1.0}, {{0.0, kPi}}),
          Measure(ConstantDensity{2.0}, {{0.0, 0.5}}),
          Measure(TableDensity{{-3.0, 0.0, 3.0}, {0.0, 2.0, 0.0}}, {{0.0, 1.0}})};
}

}  // namespace

PropertyResult prop_periodized_monotone(std::uint64_t, std::size_t) {
  const auto corpus = convergence_corpus();
  const double Ts[] = {kPi, 2 * kPi, 4 * kPi, 8 * kPi, 16 * kPi};
  const cplx zs[] = {{0.0, 1.0}, {1.0, 0.5}, {-2.0, 2.0}};
  double worst = 0.0;  // largest err(2T)/err(T)
  for (const auto& mu : corpus) {
    const auto rows = convergence_sweep(mu, Ts, zs);
    for (const auto& r : error_ratios(rows)) worst = std::max(worst, 1.0 / r.ratio);
  }
  return bounded("converge", "periodized error shrinks under T doubling (10% band)", corpus.size(), worst, 1.1);
}

PropertyResult prop_roundtrip_shrinks(std::uint64_t, std::size_t) {
  const auto corpus = convergence_corpus();
  const auto grid = default_zgrid();
  double worst = 0.0;  // largest residual(2N)/residual(N)
  for (const auto& mu : corpus) {
    const double r1 = roundtrip_residual(mu, kPi, 25, grid);
    const double r2 = roundtrip_residual(mu, kPi, 50, grid);
    worst = std::max(worst, r2 / r1);
  }
  PropertyResult r = bounded("converge", "round-trip residual shrinks from N to 2N", corpus.size(), worst, 1.0);
  r.passed = worst < 1.0;
  r.bound = "< 1";
  return r;
}

std::vector<PropertyResult> core_property_suite(std::uint64_t seed, std::size_t instances) {
  return {prop_determinant(seed, instances),   prop_translation(seed, instances),
          prop_scaling(seed, instances),       prop_linearization(seed, instances),
          prop_riemann_lebesgue(seed, instances), prop_parseval(seed, instances),
          prop_toeplitz_bruteforce(seed, instances)};
}

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t instances) {
  auto out = core_property_suite(seed, instances);
  const std::size_t small = std::max<std::size_t>(10, instances / 10);
  for (auto r : {prop_group(seed, instances), prop_route_equality(seed, small),
                 prop_inverse_sums_increasing(seed, small), prop_scaling_covariance(seed, instances),
                 prop_l2_sanity(seed, small), prop_periodize_content(seed, instances),
                 prop_moment_linearity(seed, instances), prop_total_mass(seed, instances),
                 prop_poisson_positive(seed, instances), prop_decomposition(seed, small),
                 prop_schur_bound(seed, instances), prop_lattice_sum(seed, 5),
                 prop_periodized_monotone(seed, 0), prop_roundtrip_shrinks(seed, 0)})
    out.push_back(std::move(r));
  return out;
}

}  // namespace nlft
