#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "dlab/norms.hpp"
#include "dlab/rng.hpp"

using namespace dlab;

namespace {

DirichletPolynomial random_poly(std::uint64_t seed, std::uint64_t max_n, std::size_t terms) {
    DirichletPolynomial::CoeffMap coeffs;
    for (std::size_t i = 0; i < terms; ++i) {
        std::uint64_t n = 1 + mix64(seed, i) % max_n;
        coeffs[n] = Complex{2.0 * uniform01(seed, i, 1) - 1.0, 2.0 * uniform01(seed, i, 2) - 1.0};
    }
    return DirichletPolynomial{std::move(coeffs)};
}

DirichletPolynomial ones(std::uint64_t N, double sigma = 0.0) {
    DirichletPolynomial::CoeffMap coeffs;
    for (std::uint64_t n = 1; n <= N; ++n)
        coeffs[n] = Complex{std::pow(static_cast<double>(n), -sigma), 0.0};
    return DirichletPolynomial{std::move(coeffs)};
}

// Independent quadruple count #{(a,b,c,d) <= N : ab = cd}.
std::uint64_t quadruples(std::uint64_t N) {
    std::uint64_t count = 0;
    for (std::uint64_t a = 1; a <= N; ++a)
        for (std::uint64_t b = 1; b <= N; ++b)
            for (std::uint64_t c = 1; c <= N; ++c)
                for (std::uint64_t d = 1; d <= N; ++d)
                    if (a * b == c * d)
                        ++count;
    return count;
}

}  // namespace

TEST_CASE("norm_h2 examples") {
    CHECK(norm_h2(DirichletPolynomial{{{1, {1.0, 0.0}}, {2, {1.0, 0.0}}}}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(norm_h2(DirichletPolynomial{}) == 0.0);

    const std::uint64_t N = 1000;
    double harmonic = 0.0;
    for (std::uint64_t n = 1; n <= N; ++n)
        harmonic += 1.0 / static_cast<double>(n);
    double v = norm_h2(ones(N, 0.5));
    CHECK(v * v == doctest::Approx(harmonic).epsilon(1e-12));
}

TEST_CASE("norm_h_even examples and oracle") {
    DirichletPolynomial F{{{1, {1.0, 0.0}}, {2, {1.0, 0.0}}}};
    CHECK(norm_h_even(F, 4) == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-14));

    DirichletPolynomial c{{{1, {3.0, -4.0}}}};  // |c| = 5
    for (unsigned p : {2u, 4u, 6u, 8u})
        CHECK(norm_h_even(c, p) == doctest::Approx(5.0).epsilon(1e-13));

    for (std::uint64_t N : {1, 2, 3, 5, 8, 13, 16}) {
        double v = norm_h_even(ones(N), 4);
        CHECK(std::pow(v, 4) == doctest::Approx(static_cast<double>(quadruples(N))).epsilon(1e-9));
    }

    CHECK(norm_h_even(random_poly(5, 100, 10), 2) ==
          doctest::Approx(norm_h2(random_poly(5, 100, 10))).epsilon(1e-14));
    CHECK_THROWS_AS(norm_h_even(F, 3), std::domain_error);
}

TEST_CASE("norm_hp_mc agrees with exact comparators") {
    DirichletPolynomial c{{{1, {0.0, -2.0}}}};
    auto est_c = norm_hp_mc(c, 1.5, 100, 9);
    CHECK(est_c.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(est_c.stderr_of_value == doctest::Approx(0.0).epsilon(1e-12));

    DirichletPolynomial F{{{1, {1.0, 0.0}}, {2, {1.0, 0.0}}}};
    auto e2 = norm_hp_mc(F, 2.0, 100000, 12345);
    CHECK(std::abs(e2.value - std::sqrt(2.0)) <= 4.0 * e2.stderr_of_value);
    auto e4 = norm_hp_mc(F, 4.0, 100000, 12345);
    CHECK(std::abs(e4.value - std::pow(6.0, 0.25)) <= 4.0 * e4.stderr_of_value);

    CHECK_THROWS_AS(norm_hp_mc(F, 0.0, 100, 1), std::domain_error);
}

TEST_CASE("norm_hp_mc determinism is bit-for-bit") {
    auto F = random_poly(77, 200, 10);
    auto a = norm_hp_mc(F, 1.0, 20000, 42);
    auto b = norm_hp_mc(F, 1.0, 20000, 42);
    CHECK(a.value == b.value);
    CHECK(a.stderr_of_value == b.stderr_of_value);

    // independent of worker count
    setenv("DLAB_THREADS", "1", 1);
    auto c1 = norm_hp_mc(F, 1.0, 20000, 42);
    setenv("DLAB_THREADS", "5", 1);
    auto c5 = norm_hp_mc(F, 1.0, 20000, 42);
    unsetenv("DLAB_THREADS");
    CHECK(c1.value == c5.value);
    CHECK(c1.stderr_of_value == c5.stderr_of_value);
    CHECK(c1.value == a.value);
}

TEST_CASE("norm_hp_mc is monotone in p within noise") {
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto F = random_poly(300 + i, 60, 8);
        auto lo = norm_hp_mc(F, 1.0, 20000, 1000 + i);
        auto hi = norm_hp_mc(F, 3.0, 20000, 1000 + i);
        CHECK(lo.value <= hi.value + 4.0 * (lo.stderr_of_value + hi.stderr_of_value));
    }
}

TEST_CASE("vertical_average examples") {
    DirichletPolynomial two{{{2, {1.0, 0.0}}}};
    CHECK(vertical_average(two, 1.7, -3.0, 5.0, 100) == doctest::Approx(1.0).epsilon(1e-12));

    DirichletPolynomial c{{{1, {-2.0, 1.5}}}};
    CHECK(vertical_average(c, 3.0, 0.0, 1.0, 10) ==
          doctest::Approx(std::abs(Complex{-2.0, 1.5})).epsilon(1e-12));

    DirichletPolynomial F{{{1, {1.0, 0.0}}, {2, {1.0, 0.0}}}};
    double period = 2.0 * std::numbers::pi / std::log(2.0);
    CHECK(vertical_average(F, 2.0, 0.0, period, 4097) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

    CHECK_THROWS_AS(vertical_average(F, 2.0, 1.0, 0.0, 100), std::domain_error);
}

TEST_CASE("helson_lower_bound examples") {
    CHECK(helson_lower_bound(ones(4), 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    // p = 2: squarefree l2 norm
    auto F = random_poly(9, 50, 10);
    double squarefree = 0.0;
    for (const auto& [n, a] : F.coeffs())
        if (multiplicative_stats(n).mobius != 0)
            squarefree += std::norm(a);
    CHECK(helson_lower_bound(F, 2.0) == doctest::Approx(std::sqrt(squarefree)).epsilon(1e-13));

    CHECK_THROWS_AS(helson_lower_bound(F, 2.5), std::domain_error);

    // lower bound respected by the MC norm at p = 1
    for (std::uint64_t i = 0; i < 10; ++i) {
        auto G = random_poly(500 + i, 40, 6);
        auto est = norm_hp_mc(G, 1.0, 30000, i);
        CHECK(helson_lower_bound(G, 1.0) <= est.value + 4.0 * est.stderr_of_value);
    }
}
