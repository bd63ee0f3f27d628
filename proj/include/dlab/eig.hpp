#pragma once

#include <cstddef>
#include <vector>

namespace dlab {

struct PowerIterationResult {
    double eigenvalue = 0.0;
    std::vector<double> vector;  // unit Euclidean norm
    unsigned iterations = 0;
};

/// Largest eigenvalue of a symmetric matrix with nonnegative entries
/// (row-major, n x n) by power iteration from the uniform vector, which is
/// never orthogonal to the Perron vector. Stops when the Rayleigh quotient
/// is stable to rel_tol; throws convergence_error at the iteration cap.
PowerIterationResult largest_eigenvalue(const std::vector<double>& matrix, std::size_t n,
                                        double rel_tol = 1e-10, unsigned cap = 100000);

}  // namespace dlab
