#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dlab/errors.hpp"
#include "dlab/rng.hpp"
#include "dlab/zeta.hpp"

using namespace dlab;

TEST_CASE("zeta_partial examples") {
    CHECK(std::abs(zeta_partial(1, 3.7) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(zeta_partial(2, 0.0) - Complex{1.7071067811865475, 0.0}) < 1e-12);

    double cap = 0.0;
    for (std::uint64_t n = 1; n <= 40; ++n)
        cap += 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < 50; ++i) {
        double t = 200.0 * uniform01(1, i) - 100.0;
        CHECK(std::abs(zeta_partial(40, t)) <= cap + 1e-12);
    }
}

TEST_CASE("weighted_partial examples") {
    for (int i = 0; i < 10; ++i) {
        double t = 20.0 * uniform01(2, i) - 10.0;
        CHECK(std::abs(weighted_partial(30, 0.0, t) - zeta_partial(30, t)) < 1e-12);
    }
    CHECK(std::abs(weighted_partial(2, 1.0, 0.0) - Complex{2.414213562373095, 0.0}) < 1e-12);
    CHECK(std::abs(weighted_partial(4, 1.0, 0.0) - Complex{5.068914100752346, 0.0}) < 1e-12);
}

TEST_CASE("max_abs_partial") {
    auto r = max_abs_partial(2, -1.0, 1.0, 2001, true);
    CHECK(std::abs(r.t_star) < 1e-6);
    CHECK(r.value == doctest::Approx(1.7071067811865475).epsilon(1e-9));
    CHECK(r.refined);

    // grid max dominates every node; refinement dominates the grid max
    auto coarse = max_abs_partial(12, 0.0, 30.0, 301, false);
    auto fine = max_abs_partial(12, 0.0, 30.0, 301, true);
    CHECK(fine.value >= coarse.value);
    for (int k = 0; k < 301; ++k) {
        double t = 30.0 * k / 300.0;
        CHECK(coarse.value >= std::abs(zeta_partial(12, t)) - 1e-12);
    }

    auto r1 = max_abs_partial(1, 2.0, 5.0, 11, true);
    CHECK(r1.value == doctest::Approx(1.0).epsilon(1e-12));

    // recomputable invariant
    CHECK(std::abs(zeta_partial(2, r.t_star)) == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("resonant_t_candidates") {
    auto flat = resonant_t_candidates(5, {1}, 0.0, 1.0, 400);
    REQUIRE(flat.size() == 4);  // ceil(400/100), ties keep grid order
    CHECK(flat[0] == 0.0);
    CHECK(flat[1] == doctest::Approx(1.0 / 399.0));

    auto c = resonant_t_candidates(4, {1, 2}, -2.0, 2.0, 401);
    REQUIRE(c.size() == 5);
    bool has_zero = false;
    for (double t : c)
        if (std::abs(t) < 1e-12)
            has_zero = true;
    CHECK(has_zero);

    CHECK_THROWS_AS(resonant_t_candidates(5, {}, 0.0, 1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(resonant_t_candidates(5, {7}, 0.0, 1.0, 100), std::invalid_argument);
}

TEST_CASE("sidon_constant small cases") {
    CHECK(sidon_constant(1, 2, 1, 0) == 1.0);
    CHECK(sidon_constant(2, 128, 6, 1) == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(sidon_constant(3, 128, 6, 1) == doctest::Approx(1.0).epsilon(2e-3));
    double s4 = sidon_constant(4, 128, 10, 1);
    CHECK(s4 > 1.001);
    CHECK(s4 <= 4.0);  // trivial cap S(N) <= N
    CHECK_THROWS_AS(sidon_constant(7, 64, 4, 0), budget_error);
}

TEST_CASE("partial_sum_ratio") {
    DirichletPolynomial::CoeffMap m;
    for (std::uint64_t n = 1; n <= 16; ++n)
        m[n] = Complex{1.0 / static_cast<double>(n), 0.0};
    DirichletPolynomial F{std::move(m)};

    auto full = partial_sum_ratio(F, 16, 1.3, 1000, 7);
    CHECK(full.value == 1.0);
    CHECK(full.stderr_of_value == 0.0);

    // exact p = 2 path matches the coefficient truncation ratio
    auto r2 = partial_sum_ratio(F, 8, 2.0, 10, 7);
    double head = 0.0, total = 0.0;
    for (const auto& [n, a] : F.coeffs()) {
        total += std::norm(a);
        if (n <= 8)
            head += std::norm(a);
    }
    CHECK(r2.value == doctest::Approx(std::sqrt(head / total)).epsilon(1e-12));
    CHECK(r2.stderr_of_value == 0.0);

    auto r1 = partial_sum_ratio(F, 8, 1.0, 20000, 7);
    CHECK(r1.value > 0.0);
    CHECK(r1.value < 1.5);

    CHECK_THROWS_AS(partial_sum_ratio(DirichletPolynomial{}, 4, 1.0, 100, 0),
                    std::invalid_argument);
}

TEST_CASE("hilbert_truncation entries") {
    auto t1 = hilbert_truncation(1);
    CHECK(t1.entries[0] == doctest::Approx(0.36067376022224085).epsilon(1e-13));

    auto t = hilbert_truncation(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(t.entries[i * 8 + j] == t.entries[j * 8 + i]);
            CHECK(t.entries[i * 8 + j] > 0.0);
            if (j + 1 < 8)
                CHECK(t.entries[i * 8 + j] > t.entries[i * 8 + j + 1]);
        }
}

TEST_CASE("hilbert_norm") {
    CHECK(hilbert_norm(hilbert_truncation(1)) ==
          doctest::Approx(0.36067376022224085).epsilon(1e-10));

    // 2x2 closed form
    auto t2 = hilbert_truncation(2);
    double a = t2.entries[0], b = t2.entries[1], c = t2.entries[3];
    double closed = 0.5 * (a + c) + std::sqrt(0.25 * (a - c) * (a - c) + b * b);
    CHECK(hilbert_norm(t2) == doctest::Approx(closed).epsilon(1e-10));

    double prev = 0.0;
    for (std::size_t M = 1; M <= 64; ++M) {
        double v = hilbert_norm(hilbert_truncation(M));
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
    CHECK(prev < 10.0);
}

TEST_CASE("phi0_coefficients") {
    auto phi = phi0_coefficients(5);
    CHECK(phi.coeff(1) == Complex{1.0, 0.0});
    CHECK(phi.coeff(2).real() == doctest::Approx(1.0201394465967895).epsilon(1e-13));
    CHECK(phi.coeff(4).real() == doctest::Approx(0.36067376022224085).epsilon(1e-13));
    CHECK(phi.coeff(4).real() == doctest::Approx(hilbert_truncation(1).entries[0]).epsilon(1e-15));
}
