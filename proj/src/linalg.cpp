#include "itsa/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace itsa {

bool cholesky_factor(std::vector<double>& a, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j];
        for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        const double root = std::sqrt(d);
        a[j * n + j] = root;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
            a[i * n + j] = s / root;
        }
    }
    // zero the strict upper triangle so callers see a clean factor
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a[i * n + j] = 0.0;
    return true;
}

bool invert_spd(std::vector<double>& a, std::size_t n) {
    std::vector<double> l = a;
    if (!cholesky_factor(l, n)) return false;
    // invert L in place
    for (std::size_t i = 0; i < n; ++i) {
        l[i * n + i] = 1.0 / l[i * n + i];
        for (std::size_t j = 0; j < i; ++j) {
            double s = 0.0;
            for (std::size_t k = j; k < i; ++k) s += l[i * n + k] * l[k * n + j];
            l[i * n + j] = -s * l[i * n + i];
        }
    }
    // a = L^-T L^-1
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double s = 0.0;
            for (std::size_t k = i; k < n; ++k) s += l[k * n + i] * l[k * n + j];
            a[i * n + j] = s;
            a[j * n + i] = s;
        }
    }
    return true;
}

bool invert(std::vector<double>& a, std::size_t n) {
    std::vector<double> aug(n * 2 * n, 0.0);
    const std::size_t w = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = a[i * n + j];
        aug[i * w + n + i] = 1.0;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(aug[r * w + col]) > std::abs(aug[pivot * w + col])) pivot = r;
        const double pv = aug[pivot * w + col];
        if (!std::isfinite(pv) || std::abs(pv) < 1e-300) return false;
        if (pivot != col)
            for (std::size_t j = 0; j < w; ++j) std::swap(aug[pivot * w + j], aug[col * w + j]);
        const double inv = 1.0 / aug[col * w + col];
        for (std::size_t j = 0; j < w; ++j) aug[col * w + j] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double f = aug[r * w + col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < w; ++j) aug[r * w + j] -= f * aug[col * w + j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = aug[i * w + n + j];
    return true;
}

OlsResult ols(const std::vector<std::span<const double>>& columns, std::span<const double> y,
              double ridge) {
    const std::size_t k = columns.size();
    const std::size_t n = y.size();
    if (k == 0) throw std::invalid_argument("ols requires at least one column");
    for (const auto& c : columns)
        if (c.size() != n) throw std::invalid_argument("ols column length mismatch");

    std::vector<double> xtx(k * k, 0.0);
    std::vector<double> xty(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            double s = 0.0;
            for (std::size_t t = 0; t < n; ++t) s += columns[i][t] * columns[j][t];
            xtx[i * k + j] = s;
            xtx[j * k + i] = s;
        }
        double s = 0.0;
        for (std::size_t t = 0; t < n; ++t) s += columns[i][t] * y[t];
        xty[i] = s;
    }
    if (ridge > 0.0) {
        double dmax = 0.0;
        for (std::size_t i = 0; i < k; ++i) dmax = std::max(dmax, xtx[i * k + i]);
        const double bump = ridge * (dmax > 0.0 ? dmax : 1.0);
        for (std::size_t i = 0; i < k; ++i) xtx[i * k + i] += bump;
    }

    OlsResult out;
    out.xtx_inverse = xtx;
    if (!invert_spd(out.xtx_inverse, k)) {
        out.xtx_inverse = xtx;
        if (!invert(out.xtx_inverse, k)) throw std::runtime_error("ols design matrix is singular");
    }
    out.beta.assign(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.beta[i] += out.xtx_inverse[i * k + j] * xty[j];

    out.rss = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        double fit = 0.0;
        for (std::size_t i = 0; i < k; ++i) fit += out.beta[i] * columns[i][t];
        const double r = y[t] - fit;
        out.rss += r * r;
    }
    out.n_obs = n;
    out.n_coef = k;
    return out;
}

}  // namespace itsa
