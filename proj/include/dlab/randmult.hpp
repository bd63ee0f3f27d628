#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dlab/norms.hpp"

namespace dlab {

enum class RandomModel { steinhaus, rademacher };

/// Seeded map p -> chi(p) on the unit circle (+-1 for the Rademacher
/// model), extended completely multiplicatively. Each prime value is a pure
/// function of (seed, prime), so enlarging prime_limit extends an
/// assignment without perturbing existing values.
struct SteinhausAssignment {
    RandomModel model = RandomModel::steinhaus;
    std::map<std::uint64_t, Complex> values;
    std::uint64_t seed = 0;
    std::uint64_t prime_limit = 0;
};

/// One draw of the random Euler-product field on a uniform grid over [0,1].
struct FieldSample {
    std::uint64_t prime_limit = 0;
    std::vector<double> grid;
    std::vector<double> values;
    std::uint64_t theta_seed = 0;
};

struct FieldMax {
    double x_star = 0.0;
    double m = 0.0;
};

struct HomogeneousMomentResult {
    EstimateWithError lp_norm;  // Monte Carlo L^p norm of the support sum
    double l2_exact = 0.0;      // sqrt(#support), exact
};

SteinhausAssignment sample_assignment(RandomModel model, std::uint64_t prime_limit,
                                      std::uint64_t seed);

/// chi(n) = prod chi(p)^{e_p}. Throws std::out_of_range when a prime factor
/// of n is not covered by the assignment.
Complex chi_of_n(const SteinhausAssignment& a, std::uint64_t n);

/// sum_{n<=N} chi(n), evaluated multiplicatively via a smallest-prime-factor
/// sieve. Requires prime coverage up to N.
Complex char_sum(const SteinhausAssignment& a, std::uint64_t N);

/// Monte Carlo estimate of E |sum_{n<=N} chi(n)|^exponent over independent
/// assignments, trial t drawing chi(p) from (seed, t, p).
EstimateWithError moment_estimate(RandomModel model, std::uint64_t N, double exponent,
                                  std::uint64_t trials, std::uint64_t seed);

/// Exact Steinhaus moments of the character sum: q = 1 gives the second
/// moment N (orthonormality); q = 2 gives the fourth moment
/// #{(a,b,c,d) in [1,N]^4 : ab = cd} by product-multiplicity counting.
/// q = 2 is budgeted to N <= 512.
std::uint64_t exact_moment(std::uint64_t N, int q);

/// Moment machinery applied to the m-homogeneous sum over n <= N with
/// Omega(n) = m; the L^2 norm is exact. Throws std::invalid_argument when
/// the support is empty.
HomogeneousMomentResult homogeneous_moment_experiment(std::uint64_t N, unsigned m, unsigned p,
                                                      std::uint64_t trials, std::uint64_t seed);

/// Angles theta_p for primes <= prime_limit, derived from (seed, prime).
std::vector<double> field_thetas(std::uint64_t prime_limit, std::uint64_t seed);

/// X(x) = sum_p p^{-1/2} cos(x log p - theta_p) over the given primes.
double field_value(const std::vector<std::uint64_t>& primes, const std::vector<double>& thetas,
                   double x);

FieldSample field_sample(std::uint64_t prime_limit, std::uint64_t gridpoints,
                         std::uint64_t theta_seed);

/// Grid argmax over explicit primes/thetas with one golden-section
/// refinement inside the bracketing cell (|dx| <= 1e-8).
FieldMax field_max_over(const std::vector<std::uint64_t>& primes, const std::vector<double>& thetas,
                        const std::vector<double>& grid);

/// Same, reconstructing the thetas of the sample from its stored seed.
FieldMax field_max(const FieldSample& sample);

}  // namespace dlab
