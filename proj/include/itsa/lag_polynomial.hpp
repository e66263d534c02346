#pragma once

#include <map>
#include <span>
#include <vector>

namespace itsa {

/// Polynomial in the backshift operator B, stored sparsely as lag ->
/// coefficient because seasonal products leave long runs of zeros.
/// Immutable value type.
class LagPolynomial {
public:
    /// The multiplicative identity (constant 1).
    LagPolynomial();

    explicit LagPolynomial(std::map<int, double> coefficients);

    /// 1 - B^lag.
    static LagPolynomial difference_operator(int lag);

    /// 1 - c_1 B^lag - c_2 B^(2 lag) - ... for AR/MA operator coefficients
    /// in the Box-Jenkins sign convention. lag > 1 builds seasonal factors.
    static LagPolynomial operator_polynomial(std::span<const double> coefficients, int lag = 1);

    double at(int lag) const;
    int degree() const;
    const std::map<int, double>& coefficients() const { return coef_; }

    /// Evaluates sum_j c_j x[t - j]; requires t >= degree().
    double apply(std::span<const double> x, std::size_t t) const;

    LagPolynomial pow(int exponent) const;

    friend LagPolynomial poly_multiply(const LagPolynomial& a, const LagPolynomial& b);
    LagPolynomial operator*(const LagPolynomial& other) const;

    bool almost_equal(const LagPolynomial& other, double tol) const;

private:
    std::map<int, double> coef_;
};

LagPolynomial poly_multiply(const LagPolynomial& a, const LagPolynomial& b);

}  // namespace itsa
