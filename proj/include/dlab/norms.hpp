#pragma once

#include <cstdint>

#include "dlab/dirichlet.hpp"

namespace dlab {

/// Monte Carlo estimate with its standard error. stderr_of_value is the
/// sample standard deviation of the averaged quantity divided by
/// sqrt(samples), propagated through the p-th root by the delta method
/// where applicable (an approximation, documented as such).
struct EstimateWithError {
    double value = 0.0;
    double stderr_of_value = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// (sum |a_n|^2)^{1/2}; exact to floating precision.
double norm_h2(const DirichletPolynomial& F);

/// H^p norm for even p in {2,4,6,8} via ||F||_p^p = ||F^{p/2}||_2^2.
double norm_h_even(const DirichletPolynomial& F, unsigned p);

/// Monte Carlo H^p norm: i.i.d. uniform sampling of one torus coordinate
/// per prime dividing the support, value = (mean |f|^p)^{1/p}. The sample
/// stream is a pure function of (seed, sample-index, prime), so estimates
/// are reproducible for any worker count and common random numbers are
/// shared between polynomials run with the same seed.
EstimateWithError norm_hp_mc(const DirichletPolynomial& F, double p, std::uint64_t samples,
                             std::uint64_t seed);

/// ((1/(t_hi-t_lo)) integral |F(it)|^p dt)^{1/p} by composite trapezoid on
/// a uniform grid. The line is Re s = 0; shift coefficients a_n -> a_n
/// n^{-sigma} to move to another abscissa.
double vertical_average(const DirichletPolynomial& F, double p, double t_lo, double t_hi,
                        std::uint64_t gridpoints);

/// (sum |mu(n)| |a_n|^2 d(n)^{log p/log 2 - 1})^{1/2}, a lower bound for
/// the H^p norm when 0 < p <= 2. Throws std::domain_error outside (0, 2].
double helson_lower_bound(const DirichletPolynomial& F, double p);

}  // namespace dlab
