#include "dlab/gcdsums.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "dlab/eig.hpp"
#include "dlab/errors.hpp"

namespace dlab {

namespace {

void check_set(const std::vector<std::uint64_t>& set, double alpha) {
    if (set.empty())
        throw std::invalid_argument("gcd set must be nonempty");
    if (alpha <= 0.0)
        throw std::domain_error("alpha must be positive");
    std::set<std::uint64_t> uniq(set.begin(), set.end());
    if (uniq.size() != set.size())
        throw std::invalid_argument("gcd set must have distinct entries");
    if (uniq.count(0))
        throw std::invalid_argument("gcd set entries must be positive");
}

double kernel(std::uint64_t a, std::uint64_t b, double alpha) {
    std::uint64_t g = std::gcd(a, b);
    return std::pow(static_cast<double>(g) * static_cast<double>(g) /
                        (static_cast<double>(a) * static_cast<double>(b)),
                    alpha);
}

// Sum of all kernel entries over the set (unnormalized quadratic form with
// the uniform vector).
double kernel_sum(const std::vector<std::uint64_t>& set, double alpha) {
    double sum = 0.0;
    for (std::size_t k = 0; k < set.size(); ++k) {
        sum += 1.0;  // diagonal
        for (std::size_t l = k + 1; l < set.size(); ++l)
            sum += 2.0 * kernel(set[k], set[l], alpha);
    }
    return sum;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > cap)
            return cap + 1;
    }
    return c;
}

std::vector<std::uint64_t> best_subset_exhaustive(const std::vector<std::uint64_t>& universe,
                                                  std::size_t N, double alpha) {
    // Enumerate N-combinations of the (sorted) universe in lexicographic
    // order; strict improvement keeps the earliest, i.e. smallest, set.
    std::vector<std::size_t> idx(N);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::uint64_t> best;
    double best_score = -1.0;
    std::vector<std::uint64_t> current(N);
    while (true) {
        for (std::size_t i = 0; i < N; ++i)
            current[i] = universe[idx[i]];
        double score = kernel_sum(current, alpha);
        // Strict improvement: lexicographic enumeration keeps the smallest
        // set among exact-score ties.
        if (score > best_score) {
            best_score = score;
            best = current;
        }
        // next combination
        std::size_t i = N;
        while (i > 0) {
            --i;
            if (idx[i] != i + universe.size() - N) {
                ++idx[i];
                for (std::size_t j = i + 1; j < N; ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return best;
        }
    }
}

std::vector<std::uint64_t> best_subset_greedy(const std::vector<std::uint64_t>& universe,
                                              std::size_t N, double alpha) {
    std::vector<std::uint64_t> set;
    std::vector<bool> used(universe.size(), false);
    for (std::size_t step = 0; step < N; ++step) {
        double best_score = -1.0;
        std::size_t best_i = universe.size();
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (used[i])
                continue;
            set.push_back(universe[i]);
            double score = kernel_sum(set, alpha);
            set.pop_back();
            if (score > best_score) {  // universe ascending: ties keep smallest
                best_score = score;
                best_i = i;
            }
        }
        used[best_i] = true;
        set.push_back(universe[best_i]);
    }
    std::sort(set.begin(), set.end());
    return set;
}

std::vector<std::uint64_t> smooth_family() {
    // Products 2^a 3^b 5^c 7^d with a+b+c+d <= 8, ascending.
    std::vector<std::uint64_t> family;
    for (unsigned a = 0; a <= 8; ++a)
        for (unsigned b = 0; a + b <= 8; ++b)
            for (unsigned c = 0; a + b + c <= 8; ++c)
                for (unsigned d = 0; a + b + c + d <= 8; ++d) {
                    std::uint64_t v = 1;
                    for (unsigned i = 0; i < a; ++i) v *= 2;
                    for (unsigned i = 0; i < b; ++i) v *= 3;
                    for (unsigned i = 0; i < c; ++i) v *= 5;
                    for (unsigned i = 0; i < d; ++i) v *= 7;
                    family.push_back(v);
                }
    std::sort(family.begin(), family.end());
    return family;
}

}  // namespace

GcdGram gcd_gram(const std::vector<std::uint64_t>& set, double alpha) {
    check_set(set, alpha);
    GcdGram g;
    g.indices = set;
    std::sort(g.indices.begin(), g.indices.end());
    g.alpha = alpha;
    std::size_t n = g.indices.size();
    g.entries.assign(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        g.entries[k * n + k] = 1.0;
        for (std::size_t l = k + 1; l < n; ++l) {
            double v = kernel(g.indices[k], g.indices[l], alpha);
            g.entries[k * n + l] = v;
            g.entries[l * n + k] = v;
        }
    }
    return g;
}

double gamma_form(const std::vector<std::uint64_t>& set, double alpha) {
    check_set(set, alpha);
    return kernel_sum(set, alpha) / static_cast<double>(set.size());
}

GcdExtremalResult lambda_eig(const std::vector<std::uint64_t>& set, double alpha) {
    GcdGram g = gcd_gram(set, alpha);
    PowerIterationResult eig = largest_eigenvalue(g.entries, g.indices.size());
    GcdExtremalResult r;
    r.gamma = gamma_form(set, alpha);
    r.lambda = eig.eigenvalue;
    r.perron_vector = std::move(eig.vector);
    for (double& x : r.perron_vector)
        x = std::abs(x);  // Perron vector is nonnegative up to sign
    r.set = g.indices;
    return r;
}

GcdExtremalResult optimize_gamma(std::size_t N, std::uint64_t universe_limit, double alpha,
                                 SearchStrategy strategy) {
    if (N == 0)
        throw std::invalid_argument("optimize_gamma: N must be >= 1");
    if (alpha <= 0.0)
        throw std::domain_error("optimize_gamma: alpha must be positive");

    constexpr std::uint64_t kBudget = 1000000;
    std::vector<std::uint64_t> best;
    switch (strategy) {
        case SearchStrategy::exhaustive: {
            if (universe_limit < N)
                throw std::invalid_argument("optimize_gamma: universe smaller than N");
            if (binomial_capped(universe_limit, N, kBudget) > kBudget)
                throw budget_error("optimize_gamma: exhaustive search over binomial(" +
                                   std::to_string(universe_limit) + ", " + std::to_string(N) +
                                   ") subsets exceeds the 10^6 budget");
            std::vector<std::uint64_t> universe(universe_limit);
            std::iota(universe.begin(), universe.end(), 1);
            best = best_subset_exhaustive(universe, N, alpha);
            break;
        }
        case SearchStrategy::greedy: {
            if (universe_limit < N)
                throw std::invalid_argument("optimize_gamma: universe smaller than N");
            std::vector<std::uint64_t> universe(universe_limit);
            std::iota(universe.begin(), universe.end(), 1);
            best = best_subset_greedy(universe, N, alpha);
            break;
        }
        case SearchStrategy::smooth: {
            std::vector<std::uint64_t> family = smooth_family();
            if (family.size() < N)
                throw budget_error("optimize_gamma: smooth family smaller than N");
            if (binomial_capped(family.size(), N, kBudget) <= kBudget)
                best = best_subset_exhaustive(family, N, alpha);
            else
                best = best_subset_greedy(family, N, alpha);
            break;
        }
    }
    return lambda_eig(best, alpha);
}

double reference_asymptotics(double alpha, std::uint64_t N) {
    if (alpha <= 0.0)
        throw std::domain_error("reference_asymptotics: alpha must be positive");
    if (N < 16)
        throw std::domain_error("reference_asymptotics: N must be >= 16");
    double logN = std::log(static_cast<double>(N));
    double loglogN = std::log(logN);
    if (alpha >= 1.0) {
        double c = 6.0 * std::exp(2.0 * std::numbers::egamma) / (std::numbers::pi * std::numbers::pi);
        return c * loglogN * loglogN;
    }
    if (alpha > 0.5)
        return std::exp(std::pow(logN, 1.0 - alpha) / std::pow(loglogN, alpha));
    if (alpha == 0.5)
        return std::exp(std::sqrt(logN * std::log(loglogN) / loglogN));
    return std::exp((1.0 - 2.0 * alpha) * logN + loglogN);
}

}  // namespace dlab
