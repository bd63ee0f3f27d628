#include "dlab/arith.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dlab {

namespace {

// Shared trial-division table, immutable after first use. Covers n up to
// 10^10, beyond the desk-scale range; larger cofactors are finished off by
// 6k+-1 stepping below.
const std::vector<std::uint64_t>& trial_primes() {
    static const std::vector<std::uint64_t> primes = sieve_primes(100000);
    return primes;
}

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit < 2)
        throw std::domain_error("sieve_primes: limit must be >= 2");
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    return primes;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("factorize: n must be >= 1");
    Factorization result{n, {}};
    std::uint64_t rem = n;
    for (std::uint64_t p : trial_primes()) {
        if (p * p > rem)
            break;
        if (rem % p != 0)
            continue;
        std::uint32_t e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        result.index.push_back({p, e});
    }
    // Cofactor beyond the table: continue trial division over odd numbers.
    // Unreachable for desk-scale n (the table covers n <= 10^10).
    std::uint64_t limit = trial_primes().back();
    if (rem > 1 && rem > limit * limit) {
        for (std::uint64_t q = limit + 2; q * q <= rem; q += 2) {
            if (rem % q != 0)
                continue;
            std::uint32_t e = 0;
            while (rem % q == 0) {
                rem /= q;
                ++e;
            }
            result.index.push_back({q, e});
        }
    }
    if (rem > 1)
        result.index.push_back({rem, 1});
    return result;
}

MultiplicativeStats multiplicative_stats(std::uint64_t n) {
    Factorization f = factorize(n);
    MultiplicativeStats s{1, 1, 0, 0};
    bool squarefree = true;
    for (const PrimePower& pp : f.index) {
        s.divisor_count *= pp.exponent + 1;
        s.big_omega += pp.exponent;
        ++s.small_omega;
        if (pp.exponent >= 2)
            squarefree = false;
    }
    if (!squarefree)
        s.mobius = 0;
    else
        s.mobius = (s.small_omega % 2 == 0) ? 1 : -1;
    return s;
}

std::uint64_t bohr_integer(const MultiIndex& index) {
    std::uint64_t n = 1;
    for (const PrimePower& pp : index) {
        for (std::uint32_t e = 0; e < pp.exponent; ++e) {
            if (n > UINT64_MAX / pp.prime)
                throw std::overflow_error("bohr_integer: product exceeds 64-bit range");
            n *= pp.prime;
        }
    }
    return n;
}

}  // namespace dlab
