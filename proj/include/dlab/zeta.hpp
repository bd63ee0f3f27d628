#pragma once

#include <cstdint>
#include <vector>

#include "dlab/norms.hpp"

namespace dlab {

struct MaxSearchResult {
    double t_star = 0.0;
    double value = 0.0;       // |F(1/2 + i t_star)| at partial-sum scale
    double grid_spacing = 0.0;
    bool refined = false;
};

/// Truncation of the multiplicative Hilbert matrix, rows and columns
/// indexed by the integers 2 .. M+1.
struct HilbertTruncation {
    std::size_t size = 0;
    std::vector<double> entries;  // row-major, size^2
};

/// sum_{n<=N} n^{-1/2} n^{-it}.
Complex zeta_partial(std::uint64_t N, double t);

/// sum_{n<=N} d(n)^gamma n^{-1/2-it}.
Complex weighted_partial(std::uint64_t N, double gamma_exp, double t);

/// Grid maximum of |zeta_partial(N, .)| over [t_lo, t_hi], optionally
/// refined by golden section in the bracketing cell. Local refinement of a
/// grid max, not a global optimality claim.
MaxSearchResult max_abs_partial(std::uint64_t N, double t_lo, double t_hi,
                                std::uint64_t gridpoints, bool refine);

/// Resonator profile |sum_{n in set} n^{-it}|^2 scored on the grid; returns
/// the top 1% of grid points (ceil(gridpoints/100) of them) by score, a
/// heuristic accelerator for seeding max_abs_partial refinements.
std::vector<double> resonant_t_candidates(std::uint64_t N, const std::vector<std::uint64_t>& set,
                                          double t_lo, double t_hi, std::uint64_t gridpoints);

/// Numerical Sidon constant S(N) for N <= 6: inner sup over a Bohr-torus
/// grid (one dimension per prime <= N), outer sup by random-restart hill
/// climbing over unit-sphere coefficient vectors. Throws budget_error for
/// N > 6.
double sidon_constant(std::uint32_t N, std::uint32_t grid_per_dim, std::uint32_t coeff_restarts,
                      std::uint64_t seed);

/// Estimate of ||S_N F||_p / ||F||_p with S_N the coefficient truncation to
/// n <= N. Exact (stderr 0) when length(F) <= N or p = 2; otherwise both
/// norms by Monte Carlo with a shared seed (common random numbers), the
/// stderr combining both relative errors in quadrature (conservative for
/// positively correlated estimates).
EstimateWithError partial_sum_ratio(const DirichletPolynomial& F, std::uint64_t N, double p,
                                    std::uint64_t samples, std::uint64_t seed);

/// Entries (sqrt(mn) ln(mn))^{-1} for m, n in 2 .. M+1.
HilbertTruncation hilbert_truncation(std::size_t M);

/// Largest eigenvalue of the truncation (power iteration, rel tol 1e-10).
double hilbert_norm(const HilbertTruncation& trunc);

/// Coefficients of the symbol: c_1 = 1, c_n = n^{-1/2}/ln n for 2 <= n <= N.
DirichletPolynomial phi0_coefficients(std::uint64_t N);

}  // namespace dlab
