#include "dlab/randmult.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "dlab/errors.hpp"
#include "dlab/rng.hpp"

namespace dlab {

namespace {

Complex prime_value(RandomModel model, std::uint64_t seed, std::uint64_t p) {
    std::uint64_t h = mix64(seed, p);
    if (model == RandomModel::rademacher)
        return (h >> 63) ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    double theta = 2.0 * std::numbers::pi * to_unit(h);
    return {std::cos(theta), std::sin(theta)};
}

// Smallest prime factor for 2..N; spf[n] = n exactly when n is prime.
std::vector<std::uint64_t> spf_sieve(std::uint64_t N) {
    std::vector<std::uint64_t> spf(N + 1, 0);
    for (std::uint64_t i = 2; i <= N; ++i) {
        if (spf[i] != 0)
            continue;
        for (std::uint64_t j = i; j <= N; j += i)
            if (spf[j] == 0)
                spf[j] = i;
    }
    return spf;
}

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
    sem = count < 2 ? 0.0 : std::sqrt(m2 / static_cast<double>(count - 1) /
                                      static_cast<double>(count));
}

// Per-trial character sums restricted to a 0/1 support mask over [1, N],
// one trial per output slot.
std::vector<double> trial_powers(RandomModel model, std::uint64_t N, const std::vector<bool>& mask,
                                 double exponent, std::uint64_t trials, std::uint64_t seed) {
    std::vector<std::uint64_t> spf = spf_sieve(N);
    std::vector<double> out(trials);
    parallel_for(trials, [&](std::size_t begin, std::size_t end) {
        std::vector<Complex> chi(N + 1);
        for (std::size_t t = begin; t < end; ++t) {
            std::uint64_t trial_seed = mix64(seed, t);
            chi[1] = Complex{1.0, 0.0};
            Complex sum = mask[1] ? chi[1] : Complex{0.0, 0.0};
            for (std::uint64_t n = 2; n <= N; ++n) {
                std::uint64_t p = spf[n];
                chi[n] = (p == n) ? prime_value(model, trial_seed, p) : chi[n / p] * chi[p];
                if (mask[n])
                    sum += chi[n];
            }
            out[t] = std::pow(std::abs(sum), exponent);
        }
    });
    return out;
}

double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SteinhausAssignment sample_assignment(RandomModel model, std::uint64_t prime_limit,
                                      std::uint64_t seed) {
    if (prime_limit < 2)
        throw std::domain_error("sample_assignment: prime_limit must be >= 2");
    SteinhausAssignment a;
    a.model = model;
    a.seed = seed;
    a.prime_limit = prime_limit;
    for (std::uint64_t p : sieve_primes(prime_limit))
        a.values[p] = prime_value(model, seed, p);
    return a;
}

Complex chi_of_n(const SteinhausAssignment& a, std::uint64_t n) {
    Complex chi{1.0, 0.0};
    for (const PrimePower& pp : factorize(n).index) {
        auto it = a.values.find(pp.prime);
        if (it == a.values.end())
            throw std::out_of_range("chi_of_n: prime " + std::to_string(pp.prime) +
                                    " not covered by the assignment");
        for (std::uint32_t e = 0; e < pp.exponent; ++e)
            chi *= it->second;
    }
    return chi;
}

Complex char_sum(const SteinhausAssignment& a, std::uint64_t N) {
    if (N == 0)
        throw std::domain_error("char_sum: N must be >= 1");
    if (N > a.prime_limit && N >= 2)
        for (std::uint64_t p : sieve_primes(N))
            if (p > a.prime_limit)
                throw std::out_of_range("char_sum: prime " + std::to_string(p) +
                                        " not covered by the assignment");
    std::vector<std::uint64_t> spf = spf_sieve(N);
    std::vector<Complex> chi(N + 1);
    chi[1] = Complex{1.0, 0.0};
    Complex sum = chi[1];
    for (std::uint64_t n = 2; n <= N; ++n) {
        std::uint64_t p = spf[n];
        chi[n] = (p == n) ? a.values.at(p) : chi[n / p] * chi[p];
        sum += chi[n];
    }
    return sum;
}

EstimateWithError moment_estimate(RandomModel model, std::uint64_t N, double exponent,
                                  std::uint64_t trials, std::uint64_t seed) {
    if (N == 0)
        throw std::domain_error("moment_estimate: N must be >= 1");
    if (trials < 2)
        throw std::domain_error("moment_estimate: need at least 2 trials");
    if (exponent <= 0.0)
        throw std::domain_error("moment_estimate: exponent must be positive");
    std::vector<bool> mask(N + 1, true);
    mask[0] = false;
    std::vector<double> powers = trial_powers(model, N, mask, exponent, trials, seed);
    EstimateWithError est;
    mean_and_sem(powers, est.value, est.stderr_of_value);
    est.samples = trials;
    est.seed = seed;
    return est;
}

std::uint64_t exact_moment(std::uint64_t N, int q) {
    if (N == 0)
        throw std::domain_error("exact_moment: N must be >= 1");
    if (q == 1)
        return N;
    if (q != 2)
        throw std::domain_error("exact_moment: q must be 1 or 2");
    if (N > 512)
        throw budget_error("exact_moment: q=2 enumeration budgeted to N <= 512");
    std::unordered_map<std::uint64_t, std::uint64_t> multiplicity;
    for (std::uint64_t a = 1; a <= N; ++a)
        for (std::uint64_t b = 1; b <= N; ++b)
            ++multiplicity[a * b];
    std::uint64_t total = 0;
    for (const auto& [v, r] : multiplicity)
        total += r * r;
    return total;
}

HomogeneousMomentResult homogeneous_moment_experiment(std::uint64_t N, unsigned m, unsigned p,
                                                      std::uint64_t trials, std::uint64_t seed) {
    if (p != 2 && p != 4)
        throw std::domain_error("homogeneous_moment_experiment: p must be 2 or 4");
    if (trials < 2)
        throw std::domain_error("homogeneous_moment_experiment: need at least 2 trials");
    std::vector<bool> mask(N + 1, false);
    std::uint64_t count = 0;
    for (std::uint64_t n = 1; n <= N; ++n)
        if (multiplicative_stats(n).big_omega == m) {
            mask[n] = true;
            ++count;
        }
    if (count == 0)
        throw std::invalid_argument("homogeneous_moment_experiment: empty support");
    std::vector<double> powers =
        trial_powers(RandomModel::steinhaus, N, mask, static_cast<double>(p), trials, seed);
    double mean = 0.0, sem = 0.0;
    mean_and_sem(powers, mean, sem);
    HomogeneousMomentResult r;
    r.l2_exact = std::sqrt(static_cast<double>(count));
    r.lp_norm.samples = trials;
    r.lp_norm.seed = seed;
    if (mean > 0.0) {
        double pd = static_cast<double>(p);
        r.lp_norm.value = std::pow(mean, 1.0 / pd);
        r.lp_norm.stderr_of_value = sem * std::pow(mean, 1.0 / pd - 1.0) / pd;
    }
    return r;
}

std::vector<double> field_thetas(std::uint64_t prime_limit, std::uint64_t seed) {
    std::vector<std::uint64_t> primes = sieve_primes(prime_limit);
    std::vector<double> thetas(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i)
        thetas[i] = 2.0 * std::numbers::pi * to_unit(mix64(seed, primes[i]));
    return thetas;
}

double field_value(const std::vector<std::uint64_t>& primes, const std::vector<double>& thetas,
                   double x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        double lp = std::log(static_cast<double>(primes[i]));
        sum += std::cos(x * lp - thetas[i]) / std::sqrt(static_cast<double>(primes[i]));
    }
    return sum;
}

FieldSample field_sample(std::uint64_t prime_limit, std::uint64_t gridpoints,
                         std::uint64_t theta_seed) {
    if (prime_limit < 2)
        throw std::domain_error("field_sample: prime_limit must be >= 2");
    if (gridpoints < 2)
        throw std::domain_error("field_sample: need at least 2 gridpoints");
    FieldSample s;
    s.prime_limit = prime_limit;
    s.theta_seed = theta_seed;
    std::vector<std::uint64_t> primes = sieve_primes(prime_limit);
    std::vector<double> thetas = field_thetas(prime_limit, theta_seed);
    s.grid.resize(gridpoints);
    s.values.resize(gridpoints);
    for (std::uint64_t k = 0; k < gridpoints; ++k) {
        s.grid[k] = static_cast<double>(k) / static_cast<double>(gridpoints - 1);
        s.values[k] = field_value(primes, thetas, s.grid[k]);
    }
    return s;
}

FieldMax field_max_over(const std::vector<std::uint64_t>& primes, const std::vector<double>& thetas,
                        const std::vector<double>& grid) {
    if (grid.empty())
        throw std::invalid_argument("field_max_over: empty grid");
    std::size_t best = 0;
    double best_val = field_value(primes, thetas, grid[0]);
    for (std::size_t k = 1; k < grid.size(); ++k) {
        double v = field_value(primes, thetas, grid[k]);
        if (v > best_val) {
            best_val = v;
            best = k;
        }
    }
    double lo = grid[best > 0 ? best - 1 : best];
    double hi = grid[best + 1 < grid.size() ? best + 1 : best];
    FieldMax result{grid[best], best_val};
    if (hi > lo) {
        double x = golden_section_max([&](double t) { return field_value(primes, thetas, t); },
                                      lo, hi, 1e-8);
        double v = field_value(primes, thetas, x);
        if (v > result.m) {
            result.x_star = x;
            result.m = v;
        }
    }
    return result;
}

FieldMax field_max(const FieldSample& sample) {
    if (sample.grid.empty())
        throw std::invalid_argument("field_max: empty grid");
    std::vector<std::uint64_t> primes = sieve_primes(sample.prime_limit);
    std::vector<double> thetas = field_thetas(sample.prime_limit, sample.theta_seed);
    return field_max_over(primes, thetas, sample.grid);
}

}  // namespace dlab
