#include "itsa/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace itsa {

void SarimaOrder::validate(int max_order) const {
    const int all[] = {p, d, q, P, D, Q};
    for (int v : all) {
        if (v < 0) throw std::invalid_argument("negative order in " + to_string());
        if (v > max_order)
            throw std::invalid_argument("order exceeds maximum " + std::to_string(max_order) + " in " +
                                        to_string());
    }
    if (k < 1) throw std::invalid_argument("seasonal lag must be positive in " + to_string());
    if ((P > 0 || D > 0 || Q > 0) && k < 2)
        throw std::invalid_argument("seasonal terms require lag k >= 2 in " + to_string());
}

std::string SarimaOrder::to_string() const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%d,%d,%d)x(%d,%d,%d)_%d", p, d, q, P, D, Q, k);
    return buf;
}

void RegressorMatrix::add_column(std::string name, std::vector<double> values) {
    if (values.size() != rows_)
        throw std::invalid_argument("regressor '" + name + "' has length " +
                                    std::to_string(values.size()) + ", expected " + std::to_string(rows_));
    if (index_of(name) >= 0) throw std::invalid_argument("duplicate regressor name '" + name + "'");
    names_.push_back(std::move(name));
    columns_.push_back(std::move(values));
}

const std::vector<double>& RegressorMatrix::column(std::string_view name) const {
    const int j = index_of(name);
    if (j < 0) throw std::invalid_argument("no regressor named '" + std::string(name) + "'");
    return columns_[static_cast<std::size_t>(j)];
}

int RegressorMatrix::index_of(std::string_view name) const {
    for (std::size_t j = 0; j < names_.size(); ++j)
        if (names_[j] == name) return static_cast<int>(j);
    return -1;
}

bool roots_outside_unit_circle(std::span<const double> coefficients) {
    std::vector<double> a(coefficients.begin(), coefficients.end());
    while (!a.empty() && a.back() == 0.0) a.pop_back();
    for (std::size_t j = a.size(); j > 0; --j) {
        const double kappa = a[j - 1];
        if (!std::isfinite(kappa) || std::abs(kappa) >= 1.0) return false;
        const double denom = 1.0 - kappa * kappa;
        std::vector<double> next(j - 1);
        for (std::size_t i = 0; i + 1 < j; ++i) next[i] = (a[i] + kappa * a[j - 2 - i]) / denom;
        a = std::move(next);
    }
    return true;
}

bool params_admissible(const SarimaParams& params) {
    return roots_outside_unit_circle(params.phi) && roots_outside_unit_circle(params.Phi) &&
           roots_outside_unit_circle(params.theta) && roots_outside_unit_circle(params.Theta);
}

std::pair<LagPolynomial, LagPolynomial> expand_difference_equation(const SarimaOrder& order,
                                                                   const SarimaParams& params) {
    if (static_cast<int>(params.phi.size()) != order.p || static_cast<int>(params.theta.size()) != order.q ||
        static_cast<int>(params.Phi.size()) != order.P || static_cast<int>(params.Theta.size()) != order.Q)
        throw std::invalid_argument("parameter lengths inconsistent with " + order.to_string());

    LagPolynomial ar = LagPolynomial::operator_polynomial(params.phi) *
                       LagPolynomial::operator_polynomial(params.Phi, order.k) *
                       LagPolynomial::difference_operator(1).pow(order.d);
    if (order.D > 0) ar = ar * LagPolynomial::difference_operator(order.k).pow(order.D);

    LagPolynomial ma = LagPolynomial::operator_polynomial(params.theta) *
                       LagPolynomial::operator_polynomial(params.Theta, order.k);
    return {std::move(ar), std::move(ma)};
}

}  // namespace itsa
