#pragma once

#include <cstddef>
#include <vector>

#include "nlft/measure.hpp"
#include "nlft/transfer.hpp"

namespace nlft {

/// h_11 = steps[n] on (n w, (n+1) w], w = pi/(2T).
struct StepHamiltonian {
  double step_width = 1.0;
  std::vector<double> steps;

  /// h_11(t) for t > 0; the last step is continued beyond the data.
  double operator()(double t) const;
};

enum class ToeplitzSolver { levinson, cholesky };
enum class InverseMethod { toeplitz, opuc };

/// (n+1)x(n+1) symmetric Toeplitz matrix, diagonal a_0, k-th off-diagonal
/// a_k/2, row-major.
std::vector<double> toeplitz_matrix(const TrigMoments& mom, std::size_t n);

/// Sum of all entries of the inverse of a dense k x k matrix by Gauss-Jordan
/// elimination with partial pivoting.
double inverse_entry_sum_gauss_jordan(std::vector<double> a, std::size_t k);

/// Sigma(J_n^{-1}) for n = 0..N-1. Cholesky refactors every order from
/// scratch; Levinson gets all orders from one O(N^2) recursion.
std::vector<double> toeplitz_inverse_sums(const TrigMoments& mom, std::size_t N,
                                          ToeplitzSolver solver = ToeplitzSolver::levinson);

StepHamiltonian toeplitz_h11(const TrigMoments& mom, std::size_t N,
                             ToeplitzSolver solver = ToeplitzSolver::levinson);

/// Reflection coefficients alpha_0..alpha_{N-2} of the circle measure with
/// moments c_0 = a_0, c_k = a_k/2.
std::vector<double> verblunsky_coefficients(const TrigMoments& mom, std::size_t N);

/// Steps |phi_n(1)|^2 of the orthonormal polynomials, n = 0..N-1.
StepHamiltonian opuc_h11(const TrigMoments& mom, std::size_t N);

/// Masses c_n = -1/2 log(h_n / h_{n-1}) at t = n w, n = 0..N-1, with
/// h_{-1} = 1.
DiscretePotential potential_from_h11(const StepHamiltonian& h);

StepHamiltonian hamiltonian_from_measure(const Measure& mu, std::size_t N,
                                         InverseMethod method = InverseMethod::toeplitz);

DiscretePotential inverse_nlft(const Measure& mu, std::size_t N,
                               InverseMethod method = InverseMethod::toeplitz);

}  // namespace nlft
