#pragma once

#include <cstdint>
#include <vector>

namespace dlab {

/// The N x N kernel gcd(n_k, n_l)^{2 alpha} / (n_k n_l)^alpha over a set of
/// distinct integers. Symmetric with unit diagonal.
struct GcdGram {
    std::vector<std::uint64_t> indices;  // strictly increasing
    double alpha = 0.0;
    std::vector<double> entries;  // row-major, indices.size()^2
};

struct GcdExtremalResult {
    double gamma = 0.0;
    double lambda = 0.0;
    std::vector<double> perron_vector;  // nonnegative, unit Euclidean norm
    std::vector<std::uint64_t> set;
};

enum class SearchStrategy { exhaustive, greedy, smooth };

/// Throws validation errors for empty sets, duplicates, or alpha <= 0.
GcdGram gcd_gram(const std::vector<std::uint64_t>& set, double alpha);

/// (1/N) sum of all Gram entries.
double gamma_form(const std::vector<std::uint64_t>& set, double alpha);

/// Largest eigenvalue of the Gram matrix (power iteration, rel tol 1e-10);
/// gamma is filled in from gamma_form. For a nonnegative matrix the Perron
/// vector is nonnegative, so the sign constraint in the extremal form is
/// inactive.
GcdExtremalResult lambda_eig(const std::vector<std::uint64_t>& set, double alpha);

/// Best-scoring N-element set under the given strategy. Exhaustive scans
/// all N-subsets of [1, universe_limit] (budget: binomial <= 10^6, else
/// budget_error); greedy grows the set by best marginal gain; smooth scores
/// within the family 2^a 3^b 5^c 7^d with a+b+c+d <= 8. Ties break to the
/// lexicographically smallest index list.
GcdExtremalResult optimize_gamma(std::size_t N, std::uint64_t universe_limit, double alpha,
                                 SearchStrategy strategy);

/// Reference growth shape for plot overlays only, never for assertions.
/// Constant is 6 e^{2 gamma}/pi^2 for alpha = 1 and 1 elsewhere. Requires
/// N >= 16 so that log log N > 0.
double reference_asymptotics(double alpha, std::uint64_t N);

}  // namespace dlab
