#include "itsa/lag_polynomial.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace itsa {

LagPolynomial::LagPolynomial() : coef_{{0, 1.0}} {}

LagPolynomial::LagPolynomial(std::map<int, double> coefficients) : coef_(std::move(coefficients)) {
    for (const auto& [lag, c] : coef_)
        if (lag < 0) throw std::invalid_argument("lag polynomial with negative lag");
    std::erase_if(coef_, [](const auto& kv) { return kv.second == 0.0; });
}

LagPolynomial LagPolynomial::difference_operator(int lag) {
    if (lag < 1) throw std::invalid_argument("difference operator requires lag >= 1");
    return LagPolynomial({{0, 1.0}, {lag, -1.0}});
}

LagPolynomial LagPolynomial::operator_polynomial(std::span<const double> coefficients, int lag) {
    if (lag < 1) throw std::invalid_argument("operator polynomial requires lag >= 1");
    std::map<int, double> c{{0, 1.0}};
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        c[static_cast<int>(i + 1) * lag] = -coefficients[i];
    return LagPolynomial(std::move(c));
}

double LagPolynomial::at(int lag) const {
    auto it = coef_.find(lag);
    return it == coef_.end() ? 0.0 : it->second;
}

int LagPolynomial::degree() const { return coef_.empty() ? 0 : coef_.rbegin()->first; }

double LagPolynomial::apply(std::span<const double> x, std::size_t t) const {
    double acc = 0.0;
    for (const auto& [lag, c] : coef_) acc += c * x[t - static_cast<std::size_t>(lag)];
    return acc;
}

LagPolynomial poly_multiply(const LagPolynomial& a, const LagPolynomial& b) {
    std::map<int, double> out;
    for (const auto& [la, ca] : a.coef_)
        for (const auto& [lb, cb] : b.coef_) out[la + lb] += ca * cb;
    return LagPolynomial(std::move(out));
}

LagPolynomial LagPolynomial::operator*(const LagPolynomial& other) const {
    return poly_multiply(*this, other);
}

LagPolynomial LagPolynomial::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    LagPolynomial acc;
    for (int i = 0; i < exponent; ++i) acc = poly_multiply(acc, *this);
    return acc;
}

bool LagPolynomial::almost_equal(const LagPolynomial& other, double tol) const {
    const int deg = std::max(degree(), other.degree());
    for (int lag = 0; lag <= deg; ++lag)
        if (std::abs(at(lag) - other.at(lag)) > tol) return false;
    return true;
}

}  // namespace itsa
