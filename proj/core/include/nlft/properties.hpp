#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nlft/measure.hpp"
#include "nlft/transfer.hpp"

namespace nlft {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

/// Random instances for property checks. All draws come from the caller's
/// generator, so a fixed seed gives a fixed corpus.
namespace gen {

double uniform(Rng& rng, double lo, double hi);
std::size_t count(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

/// n in [1, max_masses], masses uniform in [-bound, bound], spacing in [0.2, 1].
DiscretePotential discrete_potential(Rng& rng, std::size_t max_masses, double bound);

/// k in [1, max_steps] steps of length [0.05, 0.5], values in [-bound, bound].
StepPotential step_potential(Rng& rng, std::size_t max_steps, double bound);

/// Even 2T-periodic measure with a positive density (constant or symmetric
/// table), symmetric atom pairs, and sometimes atoms at 0 and at -T.
Measure even_periodic_measure(Rng& rng, double T);

/// Density-only even periodic measure with density >= 0.3.
Measure even_periodic_density(Rng& rng, double T);

/// Arbitrary positive measure, periodic or not, for transform checks.
Measure positive_measure(Rng& rng);

}  // namespace gen

struct PropertyResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  double worst = 0.0;  // statistic compared against the bound
  std::string bound;
  std::string detail;
};

// Forward transform.
PropertyResult prop_determinant(std::uint64_t seed, std::size_t instances);
PropertyResult prop_translation(std::uint64_t seed, std::size_t instances);
PropertyResult prop_scaling(std::uint64_t seed, std::size_t instances);
PropertyResult prop_linearization(std::uint64_t seed, std::size_t instances);
PropertyResult prop_riemann_lebesgue(std::uint64_t seed, std::size_t instances);
PropertyResult prop_parseval(std::uint64_t seed, std::size_t instances);
PropertyResult prop_group(std::uint64_t seed, std::size_t instances);

// Inverse.
PropertyResult prop_toeplitz_bruteforce(std::uint64_t seed, std::size_t instances);
PropertyResult prop_route_equality(std::uint64_t seed, std::size_t instances);
PropertyResult prop_inverse_sums_increasing(std::uint64_t seed, std::size_t instances);
PropertyResult prop_scaling_covariance(std::uint64_t seed, std::size_t instances);
PropertyResult prop_l2_sanity(std::uint64_t seed, std::size_t instances);

// Measure.
PropertyResult prop_periodize_content(std::uint64_t seed, std::size_t instances);
PropertyResult prop_moment_linearity(std::uint64_t seed, std::size_t instances);
PropertyResult prop_total_mass(std::uint64_t seed, std::size_t instances);

// Herglotz.
PropertyResult prop_poisson_positive(std::uint64_t seed, std::size_t instances);
PropertyResult prop_decomposition(std::uint64_t seed, std::size_t instances);
PropertyResult prop_schur_bound(std::uint64_t seed, std::size_t instances);
PropertyResult prop_lattice_sum(std::uint64_t seed, std::size_t instances);

// Convergence.
PropertyResult prop_periodized_monotone(std::uint64_t seed, std::size_t instances);
PropertyResult prop_roundtrip_shrinks(std::uint64_t seed, std::size_t instances);

/// The seven randomized forward/inverse checks gated together.
std::vector<PropertyResult> core_property_suite(std::uint64_t seed = kDefaultSeed, std::size_t instances = 100);

/// Every property of every module.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed = kDefaultSeed, std::size_t instances = 100);

}  // namespace nlft
