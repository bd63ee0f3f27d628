#include "dlab/eig.hpp"

#include <cmath>
#include <stdexcept>

#include "dlab/errors.hpp"

namespace dlab {

PowerIterationResult largest_eigenvalue(const std::vector<double>& matrix, std::size_t n,
                                        double rel_tol, unsigned cap) {
    if (n == 0 || matrix.size() != n * n)
        throw std::invalid_argument("largest_eigenvalue: bad matrix dimensions");
    PowerIterationResult r;
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> av(n);
    double lambda = 0.0;
    for (unsigned iter = 1; iter <= cap; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                s += matrix[i * n + j] * v[j];
            av[i] = s;
        }
        double rq = 0.0, nrm2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            rq += v[i] * av[i];
            nrm2 += av[i] * av[i];
        }
        double nrm = std::sqrt(nrm2);
        if (nrm == 0.0) {  // zero matrix
            r.eigenvalue = 0.0;
            r.vector = v;
            r.iterations = iter;
            return r;
        }
        for (std::size_t i = 0; i < n; ++i)
            v[i] = av[i] / nrm;
        bool converged = std::abs(rq - lambda) <= rel_tol * std::abs(rq);
        lambda = rq;
        if (converged) {
            r.eigenvalue = lambda;
            r.vector = v;
            r.iterations = iter;
            return r;
        }
    }
    throw convergence_error("largest_eigenvalue: iteration cap reached", lambda);
}

}  // namespace dlab
