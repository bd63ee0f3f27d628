#include "dlab/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dlab/eig.hpp"
#include "dlab/errors.hpp"
#include "dlab/rng.hpp"

namespace dlab {

namespace {

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

// Standard normal from two counter-derived uniforms (Box-Muller).
double gaussian(std::uint64_t seed, std::uint64_t i, std::uint64_t j) {
    double u1 = to_unit(mix64(seed, i, 2 * j));
    double u2 = to_unit(mix64(seed, i, 2 * j + 1));
    return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Complex zeta_partial(std::uint64_t N, double t) {
    if (N == 0)
        throw std::domain_error("zeta_partial: N must be >= 1");
    Complex sum{0.0, 0.0};
    for (std::uint64_t n = 1; n <= N; ++n) {
        double ln = std::log(static_cast<double>(n));
        double amp = 1.0 / std::sqrt(static_cast<double>(n));
        sum += Complex{amp * std::cos(t * ln), -amp * std::sin(t * ln)};
    }
    return sum;
}

Complex weighted_partial(std::uint64_t N, double gamma_exp, double t) {
    if (N == 0)
        throw std::domain_error("weighted_partial: N must be >= 1");
    Complex sum{0.0, 0.0};
    for (std::uint64_t n = 1; n <= N; ++n) {
        double ln = std::log(static_cast<double>(n));
        double amp = std::pow(static_cast<double>(multiplicative_stats(n).divisor_count),
                              gamma_exp) /
                     std::sqrt(static_cast<double>(n));
        sum += Complex{amp * std::cos(t * ln), -amp * std::sin(t * ln)};
    }
    return sum;
}

MaxSearchResult max_abs_partial(std::uint64_t N, double t_lo, double t_hi,
                                std::uint64_t gridpoints, bool refine) {
    if (!(t_lo < t_hi))
        throw std::domain_error("max_abs_partial: need t_lo < t_hi");
    if (gridpoints < 2)
        throw std::domain_error("max_abs_partial: need at least 2 gridpoints");
    double h = (t_hi - t_lo) / static_cast<double>(gridpoints - 1);
    MaxSearchResult r;
    r.grid_spacing = h;
    std::size_t best = 0;
    for (std::uint64_t k = 0; k < gridpoints; ++k) {
        double t = t_lo + h * static_cast<double>(k);
        double v = std::abs(zeta_partial(N, t));
        if (v > r.value) {
            r.value = v;
            r.t_star = t;
            best = k;
        }
    }
    if (refine) {
        double lo = t_lo + h * static_cast<double>(best > 0 ? best - 1 : best);
        double hi = t_lo + h * static_cast<double>(best + 1 < gridpoints ? best + 1 : best);
        if (hi > lo) {
            double t = golden_section_max(
                [&](double x) { return std::abs(zeta_partial(N, x)); }, lo, hi, 1e-8);
            double v = std::abs(zeta_partial(N, t));
            if (v > r.value) {
                r.t_star = t;
                r.value = v;
            }
        }
        r.refined = true;
    }
    return r;
}

std::vector<double> resonant_t_candidates(std::uint64_t N, const std::vector<std::uint64_t>& set,
                                          double t_lo, double t_hi, std::uint64_t gridpoints) {
    if (set.empty())
        throw std::invalid_argument("resonant_t_candidates: empty resonator set");
    for (std::uint64_t n : set)
        if (n == 0 || n > N)
            throw std::invalid_argument("resonant_t_candidates: set entries must lie in [1, N]");
    if (!(t_lo < t_hi))
        throw std::domain_error("resonant_t_candidates: need t_lo < t_hi");
    if (gridpoints < 2)
        throw std::domain_error("resonant_t_candidates: need at least 2 gridpoints");
    double h = (t_hi - t_lo) / static_cast<double>(gridpoints - 1);
    std::vector<std::pair<double, std::uint64_t>> scored(gridpoints);
    for (std::uint64_t k = 0; k < gridpoints; ++k) {
        double t = t_lo + h * static_cast<double>(k);
        Complex res{0.0, 0.0};
        for (std::uint64_t n : set) {
            double ln = std::log(static_cast<double>(n));
            res += Complex{std::cos(t * ln), -std::sin(t * ln)};
        }
        scored[k] = {std::norm(res), k};
    }
    std::uint64_t keep = (gridpoints + 99) / 100;
    // Highest score first; ties keep grid order.
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<double> out;
    out.reserve(keep);
    for (std::uint64_t i = 0; i < keep; ++i)
        out.push_back(t_lo + h * static_cast<double>(scored[i].second));
    return out;
}

namespace {

// Coefficient vectors for the Sidon search live on the real 2N-sphere
// (re/im interleaved).
struct SidonProblem {
    std::uint32_t N = 0;
    std::size_t dims = 0;
    std::vector<std::array<std::uint32_t, 3>> exps;  // per n, exponents of 2, 3, 5
    std::vector<Complex> roots;                      // g-th roots of unity
    std::uint32_t g = 0;

    double grid_sup(const std::vector<Complex>& a) const {
        std::uint32_t g1 = g;
        std::uint32_t g2 = dims > 1 ? g : 1;
        std::uint32_t g3 = dims > 2 ? g : 1;
        double sup = 0.0;
        for (std::uint32_t k1 = 0; k1 < g1; ++k1)
            for (std::uint32_t k2 = 0; k2 < g2; ++k2)
                for (std::uint32_t k3 = 0; k3 < g3; ++k3) {
                    Complex f{0.0, 0.0};
                    for (std::uint32_t n = 0; n < N; ++n) {
                        const auto& e = exps[n];
                        std::uint32_t phase =
                            (k1 * e[0] + k2 * e[1] + k3 * e[2]) % g;
                        f += a[n] * roots[phase];
                    }
                    sup = std::max(sup, std::abs(f));
                }
        return sup;
    }

    double ratio(const std::vector<Complex>& a) const {
        double l1 = 0.0;
        for (const Complex& c : a)
            l1 += std::abs(c);
        double sup = grid_sup(a);
        return sup > 0.0 ? l1 / sup : 0.0;
    }
};

}  // namespace

double sidon_constant(std::uint32_t N, std::uint32_t grid_per_dim, std::uint32_t coeff_restarts,
                      std::uint64_t seed) {
    if (N == 0)
        throw std::domain_error("sidon_constant: N must be >= 1");
    if (N > 6)
        throw budget_error("sidon_constant: budgeted to N <= 6");
    if (N == 1)
        return 1.0;  // the ratio is identically 1
    if (grid_per_dim < 2 || coeff_restarts < 1)
        throw std::domain_error("sidon_constant: need grid_per_dim >= 2 and restarts >= 1");

    SidonProblem prob;
    prob.N = N;
    prob.g = grid_per_dim;
    const std::uint64_t primes[3] = {2, 3, 5};
    for (std::uint64_t n = 1; n <= N; ++n) {
        std::array<std::uint32_t, 3> e{0, 0, 0};
        for (const PrimePower& pp : factorize(n).index)
            for (std::size_t j = 0; j < 3; ++j)
                if (pp.prime == primes[j]) {
                    e[j] = pp.exponent;
                    prob.dims = std::max(prob.dims, j + 1);
                }
        prob.exps.push_back(e);
    }
    prob.roots.resize(prob.g);
    for (std::uint32_t k = 0; k < prob.g; ++k) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / prob.g;
        prob.roots[k] = Complex{std::cos(theta), std::sin(theta)};
    }

    double best = 1.0;  // a = e_1 realizes ratio 1
    const unsigned iterations = 400;
    for (std::uint32_t r = 0; r < coeff_restarts; ++r) {
        std::uint64_t rs = mix64(seed, r);
        std::vector<Complex> a(N);
        for (std::uint32_t n = 0; n < N; ++n)
            a[n] = Complex{gaussian(rs, 2 * n, 0), gaussian(rs, 2 * n + 1, 0)};
        double current = prob.ratio(a);
        double sigma = 0.5;
        for (unsigned it = 1; it <= iterations; ++it) {
            std::vector<Complex> b(N);
            for (std::uint32_t n = 0; n < N; ++n)
                b[n] = a[n] + sigma * Complex{gaussian(rs, 2 * n, it), gaussian(rs, 2 * n + 1, it)};
            double cand = prob.ratio(b);
            if (cand > current) {
                current = cand;
                a = std::move(b);
            }
            sigma *= 0.985;
        }
        best = std::max(best, current);
    }
    return best;
}

EstimateWithError partial_sum_ratio(const DirichletPolynomial& F, std::uint64_t N, double p,
                                    std::uint64_t samples, std::uint64_t seed) {
    if (F.is_zero())
        throw std::invalid_argument("partial_sum_ratio: zero polynomial");
    if (p <= 0.0)
        throw std::domain_error("partial_sum_ratio: p must be positive");
    if (F.length() <= N)
        return {1.0, 0.0, samples, seed};  // S_N F = F

    DirichletPolynomial::CoeffMap head;
    for (const auto& [n, a] : F.coeffs())
        if (n <= N)
            head[n] = a;
    DirichletPolynomial truncated{std::move(head)};

    if (p == 2.0) {
        // Parseval: both norms are exact coefficient sums.
        double num = norm_h2(truncated);
        double den = norm_h2(F);
        return {num / den, 0.0, samples, seed};
    }
    EstimateWithError num = norm_hp_mc(truncated, p, samples, seed);
    EstimateWithError den = norm_hp_mc(F, p, samples, seed);
    EstimateWithError est;
    est.samples = samples;
    est.seed = seed;
    if (den.value > 0.0) {
        est.value = num.value / den.value;
        double rel_num = num.value > 0.0 ? num.stderr_of_value / num.value : 0.0;
        double rel_den = den.stderr_of_value / den.value;
        est.stderr_of_value = est.value * std::sqrt(rel_num * rel_num + rel_den * rel_den);
    }
    return est;
}

HilbertTruncation hilbert_truncation(std::size_t M) {
    if (M == 0)
        throw std::domain_error("hilbert_truncation: M must be >= 1");
    HilbertTruncation t;
    t.size = M;
    t.entries.assign(M * M, 0.0);
    for (std::size_t i = 0; i < M; ++i)
        for (std::size_t j = 0; j < M; ++j) {
            double m = static_cast<double>(i + 2);
            double n = static_cast<double>(j + 2);
            t.entries[i * M + j] = 1.0 / (std::sqrt(m * n) * std::log(m * n));
        }
    return t;
}

double hilbert_norm(const HilbertTruncation& trunc) {
    return largest_eigenvalue(trunc.entries, trunc.size).eigenvalue;
}

DirichletPolynomial phi0_coefficients(std::uint64_t N) {
    if (N == 0)
        throw std::domain_error("phi0_coefficients: N must be >= 1");
    DirichletPolynomial::CoeffMap coeffs;
    coeffs[1] = Complex{1.0, 0.0};
    for (std::uint64_t n = 2; n <= N; ++n)
        coeffs[n] = Complex{1.0 / (std::sqrt(static_cast<double>(n)) *
                                   std::log(static_cast<double>(n))),
                            0.0};
    return DirichletPolynomial{std::move(coeffs)};
}

}  // namespace dlab
