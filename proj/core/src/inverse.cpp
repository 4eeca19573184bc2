#include "nlft/inverse.hpp"

#include <cmath>
#include <numeric>

#include "nlft/errors.hpp"
#include "nlft/types.hpp"

namespace nlft {

namespace {

constexpr const char* kNotPd = "moments not positive definite (not a PW spectral measure)";

void check_request(const TrigMoments& mom, std::size_t N) {
  if (N == 0) throw InputError("N must be at least 1");
  if (mom.coeffs.size() < N) throw InputError("not enough moments for the requested order");
  if (!(mom.half_period > 0.0)) throw InputError("half period must be positive");
  if (!(mom.coeffs[0] > 0.0)) throw NumericalError(kNotPd);
}

double step_width(const TrigMoments& mom) { return kPi / (2.0 * mom.half_period); }

// Sum of entries of J_n^{-1} via a fresh Cholesky factorization.
double cholesky_inverse_sum(const TrigMoments& mom, std::size_t n) {
  const std::size_t k = n + 1;
  std::vector<double> l = toeplitz_matrix(mom, n);
  const double pivot_floor = 1e-12 * mom.coeffs[0];
  for (std::size_t j = 0; j < k; ++j) {
    double d = l[j * k + j];
    for (std::size_t p = 0; p < j; ++p) d -= l[j * k + p] * l[j * k + p];
    if (!(d > pivot_floor)) throw NumericalError(kNotPd);
    const double ljj = std::sqrt(d);
    l[j * k + j] = ljj;
    for (std::size_t i = j + 1; i < k; ++i) {
      double s = l[i * k + j];
      for (std::size_t p = 0; p < j; ++p) s -= l[i * k + p] * l[j * k + p];
      l[i * k + j] = s / ljj;
    }
  }
  // L y = 1, then L^T x = y; the entry sum of the inverse is 1^T x = |y|^2.
  double sum = 0.0;
  std::vector<double> y(k);
  for (std::size_t i = 0; i < k; ++i) {
    double s = 1.0;
    for (std::size_t p = 0; p < i; ++p) s -= l[i * k + p] * y[p];
    y[i] = s / l[i * k + i];
    sum += y[i] * y[i];
  }
  return sum;
}

// Levinson recursion for the unit-diagonal matrix with off-diagonals r_j and
// right-hand side of ones; records 1^T x after every order.
std::vector<double> levinson_inverse_sums(const TrigMoments& mom, std::size_t N) {
  const double a0 = mom.coeffs[0];
  std::vector<double> r(N);
  for (std::size_t j = 1; j < N; ++j) r[j] = 0.5 * mom.coeffs[j] / a0;

  std::vector<double> sums;
  sums.reserve(N);
  std::vector<double> x{1.0}, y, v, z;
  sums.push_back(1.0 / a0);
  if (N == 1) return sums;
  y.push_back(-r[1]);
  double alpha = -r[1];
  double beta = 1.0;
  for (std::size_t k = 1; k < N; ++k) {
    beta *= 1.0 - alpha * alpha;
    if (!(beta > 1e-12)) throw NumericalError(kNotPd);
    double dot = 0.0;
    for (std::size_t i = 0; i < k; ++i) dot += r[i + 1] * x[k - 1 - i];
    const double mu = (1.0 - dot) / beta;
    v.resize(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = x[i] + mu * y[k - 1 - i];
    x.assign(v.begin(), v.end());
    x.push_back(mu);
    sums.push_back(std::accumulate(x.begin(), x.end(), 0.0) / a0);
    if (k + 1 < N) {
      double dy = 0.0;
      for (std::size_t i = 0; i < k; ++i) dy += r[i + 1] * y[k - 1 - i];
      alpha = (-r[k + 1] - dy) / beta;
      z.resize(k);
      for (std::size_t i = 0; i < k; ++i) z[i] = y[i] + alpha * y[k - 1 - i];
      y.assign(z.begin(), z.end());
      y.push_back(alpha);
    }
  }
  return sums;
}

}  // namespace

double StepHamiltonian::operator()(double t) const {
  if (steps.empty()) throw InputError("empty Hamiltonian");
  if (t <= 0.0) return steps.front();
  const double k = std::ceil(t / step_width) - 1.0;
  const auto i = static_cast<std::size_t>(std::max(0.0, k));
  return steps[std::min(i, steps.size() - 1)];
}

std::vector<double> toeplitz_matrix(const TrigMoments& mom, std::size_t n) {
  const std::size_t k = n + 1;
  if (mom.coeffs.size() < k) throw InputError("not enough moments for the requested order");
  std::vector<double> j(k * k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      const std::size_t d = r > c ? r - c : c - r;
      j[r * k + c] = d == 0 ? mom.coeffs[0] : 0.5 * mom.coeffs[d];
    }
  return j;
}

double inverse_entry_sum_gauss_jordan(std::vector<double> a, std::size_t k) {
  std::vector<double> inv(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1.0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(a[r * k + c]) > std::abs(a[piv * k + c])) piv = r;
    if (a[piv * k + c] == 0.0) throw NumericalError("singular matrix");
    if (piv != c)
      for (std::size_t j = 0; j < k; ++j) {
        std::swap(a[c * k + j], a[piv * k + j]);
        std::swap(inv[c * k + j], inv[piv * k + j]);
      }
    const double d = a[c * k + c];
    for (std::size_t j = 0; j < k; ++j) {
      a[c * k + j] /= d;
      inv[c * k + j] /= d;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const double f = a[r * k + c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        a[r * k + j] -= f * a[c * k + j];
        inv[r * k + j] -= f * inv[c * k + j];
      }
    }
  }
  return std::accumulate(inv.begin(), inv.end(), 0.0);
}

std::vector<double> toeplitz_inverse_sums(const TrigMoments& mom, std::size_t N, ToeplitzSolver solver) {
  check_request(mom, N);
  if (solver == ToeplitzSolver::levinson) return levinson_inverse_sums(mom, N);
  std::vector<double> sums(N);
  for (std::size_t n = 0; n < N; ++n) sums[n] = cholesky_inverse_sum(mom, n);
  return sums;
}

StepHamiltonian toeplitz_h11(const TrigMoments& mom, std::size_t N, ToeplitzSolver solver) {
  const auto sums = toeplitz_inverse_sums(mom, N, solver);
  StepHamiltonian h{step_width(mom), std::vector<double>(N)};
  for (std::size_t n = 0; n < N; ++n) {
    h.steps[n] = n == 0 ? sums[0] : sums[n] - sums[n - 1];
    if (!(h.steps[n] > 0.0)) throw NumericalError(kNotPd);
  }
  return h;
}

namespace {

struct Szego {
  std::vector<double> alphas;
  std::vector<double> steps;
};

Szego szego_recursion(const TrigMoments& mom, std::size_t N) {
  check_request(mom, N);
  auto c = [&](std::size_t k) { return k == 0 ? mom.coeffs[0] : 0.5 * mom.coeffs[k]; };
  Szego out;
  std::vector<double> phi{1.0};  // monic Phi_n, coefficient of z^j at j
  std::vector<double> next;
  double norm2 = c(0);
  double at_one = 1.0;  // Phi_n(1)
  out.steps.push_back(at_one * at_one / norm2);
  for (std::size_t n = 0; n + 1 < N; ++n) {
    double s = 0.0;
    for (std::size_t j = 0; j <= n; ++j) s += phi[j] * c(j + 1);
    const double alpha = s / norm2;
    if (!(std::abs(alpha) < 1.0)) throw NumericalError("measure not nontrivial on the circle");
    out.alphas.push_back(alpha);
    next.assign(n + 2, 0.0);
    for (std::size_t j = 0; j <= n + 1; ++j) {
      const double shifted = j >= 1 ? phi[j - 1] : 0.0;
      const double reversed = j <= n ? phi[n - j] : 0.0;
      next[j] = shifted - alpha * reversed;
    }
    phi.swap(next);
    norm2 *= 1.0 - alpha * alpha;
    at_one *= 1.0 - alpha;
    if (!(norm2 > 0.0)) throw NumericalError("measure not nontrivial on the circle");
    out.steps.push_back(at_one * at_one / norm2);
  }
  return out;
}

}  // namespace

std::vector<double> verblunsky_coefficients(const TrigMoments& mom, std::size_t N) {
  return szego_recursion(mom, N).alphas;
}

StepHamiltonian opuc_h11(const TrigMoments& mom, std::size_t N) {
  return StepHamiltonian{step_width(mom), szego_recursion(mom, N).steps};
}

DiscretePotential potential_from_h11(const StepHamiltonian& h) {
  if (!(h.step_width > 0.0)) throw InputError("step width must be positive");
  DiscretePotential pot;
  pot.spacing = h.step_width;
  pot.first_index = 0;
  pot.masses.reserve(h.steps.size());
  double prev = 1.0;
  for (double s : h.steps) {
    if (!(s > 0.0) || !std::isfinite(s)) throw InputError("non-positive step");
    pot.masses.push_back(-0.5 * std::log(s / prev));
    prev = s;
  }
  return pot;
}

StepHamiltonian hamiltonian_from_measure(const Measure& mu, std::size_t N, InverseMethod method) {
  if (N == 0) throw InputError("N must be at least 1");
  const TrigMoments mom = trig_moments(mu, N - 1);
  return method == InverseMethod::toeplitz ? toeplitz_h11(mom, N) : opuc_h11(mom, N);
}

DiscretePotential inverse_nlft(const Measure& mu, std::size_t N, InverseMethod method) {
  return potential_from_h11(hamiltonian_from_measure(mu, N, method));
}

}  // namespace nlft
