#include "dlab/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dlab {

DirichletPolynomial::DirichletPolynomial(CoeffMap coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first == 0)
            throw std::domain_error("DirichletPolynomial: index 0 is not a frequency");
        if (it->second == Complex{0.0, 0.0})
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

DirichletPolynomial DirichletPolynomial::unit() {
    return DirichletPolynomial{{{1, Complex{1.0, 0.0}}}};
}

std::uint64_t DirichletPolynomial::length() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

Complex DirichletPolynomial::coeff(std::uint64_t n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

Complex evaluate(const DirichletPolynomial& F, Complex s) {
    Complex sum{0.0, 0.0};
    for (const auto& [n, a] : F.coeffs())
        sum += a * std::exp(-s * std::log(static_cast<double>(n)));
    return sum;
}

DirichletPolynomial convolve(const DirichletPolynomial& F, const DirichletPolynomial& G) {
    if (F.is_zero() || G.is_zero())
        return {};
    std::uint64_t lf = F.length(), lg = G.length();
    if (lf > UINT64_MAX / lg)
        throw std::overflow_error("convolve: product length exceeds 64-bit range");
    DirichletPolynomial::CoeffMap out;
    for (const auto& [j, a] : F.coeffs())
        for (const auto& [k, b] : G.coeffs())
            out[j * k] += a * b;
    return DirichletPolynomial{std::move(out)};
}

DirichletPolynomial power(const DirichletPolynomial& F, unsigned k) {
    if (k == 0)
        throw std::domain_error("power: k must be >= 1");
    DirichletPolynomial result = F;
    for (unsigned i = 1; i < k; ++i)
        result = convolve(result, F);
    return result;
}

DirichletPolynomial homogeneous_part(const DirichletPolynomial& F, unsigned m) {
    DirichletPolynomial::CoeffMap out;
    for (const auto& [n, a] : F.coeffs())
        if (multiplicative_stats(n).big_omega == m)
            out[n] = a;
    return DirichletPolynomial{std::move(out)};
}

TorusPolynomial bohr_lift(const DirichletPolynomial& F) {
    TorusPolynomial f;
    for (const auto& [n, a] : F.coeffs())
        f.terms[factorize(n).index] = a;
    return f;
}

Complex evaluate_on_torus(const TorusPolynomial& f, const TorusPoint& z) {
    Complex sum{0.0, 0.0};
    for (const auto& [nu, a] : f.terms) {
        Complex term = a;
        for (const PrimePower& pp : nu) {
            auto it = z.coords.find(pp.prime);
            if (it == z.coords.end())
                throw std::invalid_argument("evaluate_on_torus: point lacks coordinate for prime " +
                                            std::to_string(pp.prime));
            for (std::uint32_t e = 0; e < pp.exponent; ++e)
                term *= it->second;
        }
        sum += term;
    }
    return sum;
}

std::string to_json(const DirichletPolynomial& F) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [n, a] : F.coeffs())
        obj[std::to_string(n)] = {a.real(), a.imag()};
    return obj.dump();
}

DirichletPolynomial polynomial_from_json(const std::string& text) {
    nlohmann::json obj = nlohmann::json::parse(text);
    if (!obj.is_object())
        throw std::invalid_argument("polynomial_from_json: expected a JSON object");
    DirichletPolynomial::CoeffMap coeffs;
    for (const auto& [key, val] : obj.items()) {
        if (!val.is_array() || val.size() != 2)
            throw std::invalid_argument("polynomial_from_json: coefficient must be [re, im]");
        std::uint64_t n = std::stoull(key);
        coeffs[n] = Complex{val[0].get<double>(), val[1].get<double>()};
    }
    return DirichletPolynomial{std::move(coeffs)};
}

}  // namespace dlab
