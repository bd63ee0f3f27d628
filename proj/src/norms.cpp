#include "dlab/norms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dlab/rng.hpp"

namespace dlab {

namespace {

// Support of the Bohr lift flattened for fast sampling: one coordinate
// slot per distinct prime dividing some frequency; primes outside the
// support do not affect |f| and are never sampled.
struct LiftedSupport {
    std::vector<std::uint64_t> primes;  // ascending
    struct Term {
        Complex a;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // (slot, exponent)
    };
    std::vector<Term> terms;  // ascending frequency
};

LiftedSupport lift_support(const DirichletPolynomial& F) {
    LiftedSupport s;
    std::vector<MultiIndex> indices;
    indices.reserve(F.coeffs().size());
    for (const auto& [n, a] : F.coeffs()) {
        indices.push_back(factorize(n).index);
        for (const PrimePower& pp : indices.back()) {
            auto it = std::lower_bound(s.primes.begin(), s.primes.end(), pp.prime);
            if (it == s.primes.end() || *it != pp.prime)
                s.primes.insert(it, pp.prime);
        }
    }
    std::size_t k = 0;
    for (const auto& [n, a] : F.coeffs()) {
        LiftedSupport::Term term{a, {}};
        for (const PrimePower& pp : indices[k]) {
            auto it = std::lower_bound(s.primes.begin(), s.primes.end(), pp.prime);
            term.factors.emplace_back(static_cast<std::uint32_t>(it - s.primes.begin()),
                                      pp.exponent);
        }
        s.terms.push_back(std::move(term));
        ++k;
    }
    return s;
}

// Mean and standard error of a precomputed sample vector, one-pass Welford
// in fixed index order.
void mean_and_sem(const std::vector<double>& xs, double& mean, double& sem) {
    mean = 0.0;
    double m2 = 0.0;
    std::uint64_t count = 0;
    for (double x : xs) {
        ++count;
        double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }
    if (count < 2) {
        sem = 0.0;
        return;
    }
    double var = m2 / static_cast<double>(count - 1);
    sem = std::sqrt(var / static_cast<double>(count));
}

}  // namespace

double norm_h2(const DirichletPolynomial& F) {
    double sum = 0.0;
    for (const auto& [n, a] : F.coeffs())
        sum += std::norm(a);
    return std::sqrt(sum);
}

double norm_h_even(const DirichletPolynomial& F, unsigned p) {
    if (p != 2 && p != 4 && p != 6 && p != 8)
        throw std::domain_error("norm_h_even: p must be one of {2, 4, 6, 8}");
    double n2 = norm_h2(power(F, p / 2));
    return std::pow(n2, 2.0 / static_cast<double>(p));
}

EstimateWithError norm_hp_mc(const DirichletPolynomial& F, double p, std::uint64_t samples,
                             std::uint64_t seed) {
    if (p <= 0.0)
        throw std::domain_error("norm_hp_mc: p must be positive");
    if (samples < 2)
        throw std::domain_error("norm_hp_mc: need at least 2 samples");
    if (F.is_zero())
        return {0.0, 0.0, samples, seed};

    LiftedSupport s = lift_support(F);
    std::vector<double> powers(samples);
    const double two_pi = 2.0 * std::numbers::pi;
    parallel_for(samples, [&](std::size_t begin, std::size_t end) {
        std::vector<Complex> z(s.primes.size());
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t j = 0; j < s.primes.size(); ++j) {
                double theta = two_pi * uniform01(seed, i, s.primes[j]);
                z[j] = Complex{std::cos(theta), std::sin(theta)};
            }
            Complex f{0.0, 0.0};
            for (const auto& term : s.terms) {
                Complex t = term.a;
                for (const auto& [slot, e] : term.factors)
                    for (std::uint32_t q = 0; q < e; ++q)
                        t *= z[slot];
                f += t;
            }
            powers[i] = std::pow(std::abs(f), p);
        }
    });

    double mean = 0.0, sem = 0.0;
    mean_and_sem(powers, mean, sem);
    EstimateWithError est;
    est.samples = samples;
    est.seed = seed;
    if (mean <= 0.0) {
        est.value = 0.0;
        est.stderr_of_value = 0.0;
        return est;
    }
    est.value = std::pow(mean, 1.0 / p);
    // Delta method for the p-th root of the mean.
    est.stderr_of_value = sem * std::pow(mean, 1.0 / p - 1.0) / p;
    return est;
}

double vertical_average(const DirichletPolynomial& F, double p, double t_lo, double t_hi,
                        std::uint64_t gridpoints) {
    if (!(t_lo < t_hi))
        throw std::domain_error("vertical_average: need t_lo < t_hi");
    if (gridpoints < 2)
        throw std::domain_error("vertical_average: need at least 2 gridpoints");
    if (p <= 0.0)
        throw std::domain_error("vertical_average: p must be positive");
    double h = (t_hi - t_lo) / static_cast<double>(gridpoints - 1);
    double sum = 0.0;
    for (std::uint64_t k = 0; k < gridpoints; ++k) {
        double t = t_lo + h * static_cast<double>(k);
        double w = (k == 0 || k == gridpoints - 1) ? 0.5 : 1.0;
        sum += w * std::pow(std::abs(evaluate(F, Complex{0.0, t})), p);
    }
    double mean = sum / static_cast<double>(gridpoints - 1);
    return std::pow(mean, 1.0 / p);
}

double helson_lower_bound(const DirichletPolynomial& F, double p) {
    if (p <= 0.0 || p > 2.0)
        throw std::domain_error("helson_lower_bound: p must lie in (0, 2]");
    double expo = std::log(p) / std::log(2.0) - 1.0;
    double sum = 0.0;
    for (const auto& [n, a] : F.coeffs()) {
        MultiplicativeStats st = multiplicative_stats(n);
        if (st.mobius == 0)
            continue;
        sum += std::norm(a) * std::pow(static_cast<double>(st.divisor_count), expo);
    }
    return std::sqrt(sum);
}

}  // namespace dlab
