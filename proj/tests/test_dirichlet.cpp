#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dlab/dirichlet.hpp"
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

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        c = c * (n - k + i) / i;
    return c;
}

}  // namespace

TEST_CASE("construction drops explicit zeros") {
    DirichletPolynomial F{{{1, {1.0, 0.0}}, {2, {0.0, 0.0}}}};
    CHECK(F.coeffs().size() == 1);
    CHECK(F.length() == 1);
    CHECK(DirichletPolynomial{}.is_zero());
    CHECK(DirichletPolynomial{}.length() == 0);
}

TEST_CASE("evaluate examples") {
    DirichletPolynomial one{{{1, {1.0, 0.0}}}};
    CHECK(std::abs(evaluate(one, {3.0, -2.0}) - Complex{1.0, 0.0}) < 1e-15);

    DirichletPolynomial two{{{2, {1.0, 0.0}}}};
    CHECK(std::abs(evaluate(two, {0.0, 0.0}) - Complex{1.0, 0.0}) < 1e-15);

    DirichletPolynomial F{{{1, {1.0, 0.0}}, {2, {1.0, 0.0}}}};
    CHECK(std::abs(evaluate(F, {0.5, 0.0}) - Complex{1.7071067811865475, 0.0}) < 1e-12);
}

TEST_CASE("convolve examples") {
    DirichletPolynomial F = random_poly(3, 50, 8);
    auto FI = convolve(F, DirichletPolynomial::unit());
    CHECK(FI.coeffs() == F.coeffs());

    DirichletPolynomial a{{{1, {1.0, 0.0}}, {2, {1.0, 0.0}}}};
    DirichletPolynomial b{{{1, {1.0, 0.0}}, {3, {1.0, 0.0}}}};
    auto ab = convolve(a, b);
    CHECK(ab.coeffs().size() == 4);
    for (std::uint64_t n : {1, 2, 3, 6})
        CHECK(std::abs(ab.coeff(n) - Complex{1.0, 0.0}) < 1e-15);

    auto a2 = convolve(a, a);
    CHECK(std::abs(a2.coeff(1) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(a2.coeff(2) - Complex{2.0, 0.0}) < 1e-15);
    CHECK(std::abs(a2.coeff(4) - Complex{1.0, 0.0}) < 1e-15);
}

TEST_CASE("evaluate of a product factors, 100 random instances") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto F = random_poly(100 + i, 30, 6);
        auto G = random_poly(200 + i, 30, 6);
        Complex s{uniform01(1, i), uniform01(2, i) * 4.0 - 2.0};
        Complex lhs = evaluate(convolve(F, G), s);
        Complex rhs = evaluate(F, s) * evaluate(G, s);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("power binomial oracle") {
    DirichletPolynomial F{{{1, {1.0, 0.0}}, {2, {1.0, 0.0}}}};
    CHECK(power(F, 1).coeffs() == F.coeffs());
    auto sq = power(F, 2);
    CHECK(sq.coeffs() == convolve(F, F).coeffs());
    for (unsigned k = 1; k <= 8; ++k) {
        auto Fk = power(F, k);
        for (unsigned j = 0; j <= k; ++j) {
            std::uint64_t n = 1ULL << j;
            CHECK(std::abs(Fk.coeff(n) - Complex{static_cast<double>(binomial(k, j)), 0.0}) <
                  1e-12);
        }
    }
    CHECK_THROWS_AS(power(F, 0), std::domain_error);
}

TEST_CASE("homogeneous_part partitions") {
    DirichletPolynomial::CoeffMap m;
    for (std::uint64_t n = 1; n <= 4; ++n)
        m[n] = Complex{1.0, 0.0};
    DirichletPolynomial F{std::move(m)};

    auto h1 = homogeneous_part(F, 1);
    CHECK(h1.coeffs().size() == 2);
    CHECK(std::abs(h1.coeff(2) - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(h1.coeff(3) - Complex{1.0, 0.0}) < 1e-15);

    auto h0 = homogeneous_part(F, 0);
    CHECK(h0.coeffs().size() == 1);
    CHECK(std::abs(h0.coeff(1) - Complex{1.0, 0.0}) < 1e-15);

    // parts sum back to F
    auto G = random_poly(11, 200, 12);
    DirichletPolynomial::CoeffMap sum;
    for (unsigned part = 0; part <= 10; ++part) {
        auto h = homogeneous_part(G, part);
        for (const auto& [n, a] : h.coeffs())
            sum[n] += a;
    }
    REQUIRE(sum.size() == G.coeffs().size());
    for (const auto& [n, a] : G.coeffs())
        CHECK(std::abs(sum[n] - a) < 1e-15);
}

TEST_CASE("bohr_lift round trip and multiplicativity") {
    DirichletPolynomial F{{{12, {2.5, -1.0}}}};
    auto f = bohr_lift(F);
    REQUIRE(f.terms.size() == 1);
    MultiIndex expected{{2, 2}, {3, 1}};
    CHECK(f.terms.begin()->first == expected);
    CHECK(std::abs(f.terms.begin()->second - Complex{2.5, -1.0}) < 1e-15);

    DirichletPolynomial C{{{1, {3.0, 0.5}}}};
    auto fc = bohr_lift(C);
    REQUIRE(fc.terms.size() == 1);
    CHECK(fc.terms.begin()->first.empty());

    auto G = random_poly(21, 500, 10);
    auto lifted = bohr_lift(G);
    REQUIRE(lifted.terms.size() == G.coeffs().size());
    for (const auto& [nu, a] : lifted.terms)
        CHECK(std::abs(G.coeff(bohr_integer(nu)) - a) < 1e-15);

    // lift of a convolution equals the termwise product of lifts
    auto A = random_poly(31, 20, 4);
    auto B = random_poly(32, 20, 4);
    auto lhs = bohr_lift(convolve(A, B));
    std::map<MultiIndex, Complex> rhs;
    for (const auto& [nu, a] : bohr_lift(A).terms)
        for (const auto& [mu, b] : bohr_lift(B).terms) {
            std::uint64_t n = bohr_integer(nu) * bohr_integer(mu);
            rhs[factorize(n).index] += a * b;
        }
    REQUIRE(lhs.terms.size() <= rhs.size());
    for (const auto& [nu, c] : rhs) {
        auto it = lhs.terms.find(nu);
        Complex got = it == lhs.terms.end() ? Complex{0.0, 0.0} : it->second;
        CHECK(std::abs(got - c) < 1e-12);
    }
}

TEST_CASE("evaluate_on_torus") {
    DirichletPolynomial::CoeffMap m;
    for (std::uint64_t n = 1; n <= 10; ++n)
        m[n] = Complex{1.0, 0.0};
    DirichletPolynomial F{std::move(m)};
    auto f = bohr_lift(F);

    TorusPoint ones;
    for (std::uint64_t p : {2, 3, 5, 7})
        ones.coords[p] = Complex{1.0, 0.0};
    CHECK(std::abs(evaluate_on_torus(f, ones) - evaluate(F, {0.0, 0.0})) < 1e-12);

    TorusPolynomial constant;
    constant.terms[{}] = Complex{4.0, -1.0};
    CHECK(std::abs(evaluate_on_torus(constant, TorusPoint{}) - Complex{4.0, -1.0}) < 1e-15);

    // z_p = p^{-it} reproduces the vertical line
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto G = random_poly(41 + i, 100, 8);
        double t = 10.0 * uniform01(5, i) - 5.0;
        auto g = bohr_lift(G);
        TorusPoint z;
        for (const auto& [nu, a] : g.terms)
            for (const auto& pp : nu) {
                double lp = std::log(static_cast<double>(pp.prime));
                z.coords[pp.prime] = Complex{std::cos(t * lp), -std::sin(t * lp)};
            }
        Complex lhs = evaluate_on_torus(g, z);
        Complex rhs = evaluate(G, {0.0, t});
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }

    TorusPolynomial needs2;
    needs2.terms[MultiIndex{{2, 1}}] = Complex{1.0, 0.0};
    CHECK_THROWS_AS(evaluate_on_torus(needs2, TorusPoint{}), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
    auto F = random_poly(99, 1000, 15);
    auto back = polynomial_from_json(to_json(F));
    REQUIRE(back.coeffs().size() == F.coeffs().size());
    for (const auto& [n, a] : F.coeffs())
        CHECK(back.coeff(n) == a);
    CHECK_THROWS(polynomial_from_json("[1,2,3]"));
}

TEST_CASE("convolve overflow is explicit") {
    DirichletPolynomial big{{{1ULL << 62, {1.0, 0.0}}}};
    CHECK_THROWS_AS(convolve(big, big), std::overflow_error);
}
