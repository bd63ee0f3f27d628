#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "dlab/arith.hpp"

namespace dlab {

using Complex = std::complex<double>;

/// Finite Dirichlet polynomial F(s) = sum a_n n^{-s}, stored sparsely with
/// no explicit zero entries. Immutable after construction; the empty map is
/// the zero polynomial.
class DirichletPolynomial {
public:
    using CoeffMap = std::map<std::uint64_t, Complex>;

    DirichletPolynomial() = default;
    explicit DirichletPolynomial(CoeffMap coeffs);

    /// Unit of Dirichlet convolution: delta at n = 1.
    static DirichletPolynomial unit();

    const CoeffMap& coeffs() const { return coeffs_; }
    /// Largest n with a_n != 0; 0 for the zero polynomial.
    std::uint64_t length() const;
    bool is_zero() const { return coeffs_.empty(); }
    Complex coeff(std::uint64_t n) const;

private:
    CoeffMap coeffs_;
};

/// Bohr lift of a Dirichlet polynomial: monomials on the infinite torus
/// keyed by the multi-index of the source frequency.
struct TorusPolynomial {
    std::map<MultiIndex, Complex> terms;
};

/// A point of the infinite torus restricted to the primes that matter:
/// coords(p) must be unit modulus within 1e-12.
struct TorusPoint {
    std::map<std::uint64_t, Complex> coords;
};

Complex evaluate(const DirichletPolynomial& F, Complex s);

/// Dirichlet convolution (coefficients of the product F*G). Throws
/// std::overflow_error if length(F)*length(G) leaves the 64-bit range.
DirichletPolynomial convolve(const DirichletPolynomial& F, const DirichletPolynomial& G);

/// F^k by repeated convolution, k >= 1.
DirichletPolynomial power(const DirichletPolynomial& F, unsigned k);

/// Terms with exactly m prime factors counted with multiplicity.
DirichletPolynomial homogeneous_part(const DirichletPolynomial& F, unsigned m);

TorusPolynomial bohr_lift(const DirichletPolynomial& F);

/// Throws std::invalid_argument if z lacks a coordinate for some prime of f.
Complex evaluate_on_torus(const TorusPolynomial& f, const TorusPoint& z);

/// JSON object {"n": [re, im], ...}, the CLI wire format.
std::string to_json(const DirichletPolynomial& F);
DirichletPolynomial polynomial_from_json(const std::string& text);

}  // namespace dlab
