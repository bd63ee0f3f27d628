#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace dlab {

/// One prime-power entry of a Bohr multi-index.
struct PrimePower {
    std::uint64_t prime;
    std::uint32_t exponent;
    auto operator<=>(const PrimePower&) const = default;
};

/// Exponent vector of an integer over its prime divisors, entries sorted by
/// ascending prime, no zero exponents. The empty vector is n = 1.
using MultiIndex = std::vector<PrimePower>;

struct Factorization {
    std::uint64_t n;
    MultiIndex index;
};

struct MultiplicativeStats {
    int mobius;                   // mu(n)
    std::uint64_t divisor_count;  // d(n)
    std::uint32_t big_omega;      // Omega(n): prime factors with multiplicity
    std::uint32_t small_omega;    // omega(n): distinct prime factors
};

/// Primes <= limit, ascending. Throws std::domain_error for limit < 2.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Trial-division factorization; exact in integer arithmetic.
/// Throws std::domain_error for n = 0.
Factorization factorize(std::uint64_t n);

MultiplicativeStats multiplicative_stats(std::uint64_t n);

/// Inverse of factorize. Throws std::overflow_error if the product leaves
/// the 64-bit range (never wraps silently).
std::uint64_t bohr_integer(const MultiIndex& index);

}  // namespace dlab
