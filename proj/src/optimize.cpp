#include "itsa/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace itsa {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

double guarded(const Objective& f, std::span<const double> x) {
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
}
}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start,
                             const NelderMeadOptions& options) {
    const std::size_t n = start.size();
    NelderMeadResult result;
    if (n == 0) {
        result.fx = guarded(f, start);
        result.tolerance_met = true;
        return result;
    }

    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    std::vector<std::vector<double>> vertex(n + 1, std::vector<double>(start.begin(), start.end()));
    for (std::size_t i = 0; i < n; ++i) vertex[i + 1][i] += 0.1 * std::max(1.0, std::abs(start[i]));
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = guarded(f, vertex[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), candidate(n);

    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&fv](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];

        const double spread = fv[worst] - fv[best];
        if (std::isfinite(fv[worst]) && spread <= options.tolerance * (std::abs(fv[best]) + 1e-30)) {
            result.tolerance_met = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += vertex[i][j];
        }
        for (double& c : centroid) c /= static_cast<double>(n);

        auto blend = [&](double coef) {
            for (std::size_t j = 0; j < n; ++j)
                candidate[j] = centroid[j] + coef * (vertex[worst][j] - centroid[j]);
        };

        blend(-alpha);
        const double f_reflect = guarded(f, candidate);
        if (f_reflect < fv[order[0]]) {
            std::vector<double> reflected = candidate;
            blend(-gamma);
            const double f_expand = guarded(f, candidate);
            if (f_expand < f_reflect) {
                vertex[worst] = candidate;
                fv[worst] = f_expand;
            } else {
                vertex[worst] = std::move(reflected);
                fv[worst] = f_reflect;
            }
            continue;
        }
        if (f_reflect < fv[second_worst]) {
            vertex[worst] = candidate;
            fv[worst] = f_reflect;
            continue;
        }

        blend(f_reflect < fv[worst] ? -rho : rho);
        const double f_contract = guarded(f, candidate);
        if (f_contract < std::min(f_reflect, fv[worst])) {
            vertex[worst] = candidate;
            fv[worst] = f_contract;
            continue;
        }

        for (std::size_t i = 0; i <= n; ++i) {
            if (i == best) continue;
            for (std::size_t j = 0; j < n; ++j)
                vertex[i][j] = vertex[best][j] + sigma * (vertex[i][j] - vertex[best][j]);
            fv[i] = guarded(f, vertex[i]);
        }
    }

    const std::size_t best =
        static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    result.x = vertex[best];
    result.fx = fv[best];
    result.iterations = iter;
    return result;
}

std::vector<double> fd_gradient(const Objective& f, std::span<const double> x, double rel_step) {
    const std::size_t n = x.size();
    std::vector<double> grad(n, 0.0);
    std::vector<double> point(x.begin(), x.end());
    const double f0 = guarded(f, point);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = rel_step * std::max(1.0, std::abs(x[i]));
        const double xi = point[i];
        point[i] = xi + h;
        const double fp = guarded(f, point);
        point[i] = xi - h;
        const double fm = guarded(f, point);
        point[i] = xi;
        if (std::isfinite(fp) && std::isfinite(fm)) {
            grad[i] = (fp - fm) / (2.0 * h);
        } else if (std::isfinite(fp) && std::isfinite(f0)) {
            grad[i] = (fp - f0) / h;
        } else if (std::isfinite(fm) && std::isfinite(f0)) {
            grad[i] = (f0 - fm) / h;
        } else {
            grad[i] = 0.0;
        }
    }
    return grad;
}

std::vector<double> fd_hessian(const Objective& f, std::span<const double> x, double rel_step) {
    const std::size_t n = x.size();
    std::vector<double> hess(n * n, 0.0);
    std::vector<double> point(x.begin(), x.end());
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = rel_step * std::max(1.0, std::abs(x[i]));
    const double f0 = guarded(f, point);

    for (std::size_t i = 0; i < n; ++i) {
        const double xi = point[i];
        point[i] = xi + h[i];
        const double fp = guarded(f, point);
        point[i] = xi - h[i];
        const double fm = guarded(f, point);
        point[i] = xi;
        hess[i * n + i] = (fp - 2.0 * f0 + fm) / (h[i] * h[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double xi = point[i], xj = point[j];
            point[i] = xi + h[i];
            point[j] = xj + h[j];
            const double fpp = guarded(f, point);
            point[j] = xj - h[j];
            const double fpm = guarded(f, point);
            point[i] = xi - h[i];
            point[j] = xj + h[j];
            const double fmp = guarded(f, point);
            point[j] = xj - h[j];
            const double fmm = guarded(f, point);
            point[i] = xi;
            point[j] = xj;
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * h[i] * h[j]);
            hess[i * n + j] = v;
            hess[j * n + i] = v;
        }
    }
    return hess;
}

BfgsResult bfgs_minimize(const Objective& f, std::span<const double> start, const BfgsOptions& options) {
    const std::size_t n = start.size();
    BfgsResult result;
    result.x.assign(start.begin(), start.end());
    result.fx = guarded(f, result.x);
    if (n == 0) {
        result.tolerance_met = true;
        return result;
    }

    std::vector<double> grad = fd_gradient(f, result.x, options.fd_step);
    std::vector<double> inv_hess(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) inv_hess[i * n + i] = 1.0;

    std::vector<double> direction(n), x_new(n), grad_new(n), s(n), yv(n);

    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            double d = 0.0;
            for (std::size_t j = 0; j < n; ++j) d += inv_hess[i * n + j] * grad[j];
            direction[i] = -d;
        }
        double slope = 0.0;
        for (std::size_t i = 0; i < n; ++i) slope += direction[i] * grad[i];
        if (!(slope < 0.0)) {
            // reset to steepest descent when the approximation degrades
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) inv_hess[i * n + j] = (i == j) ? 1.0 : 0.0;
                direction[i] = -grad[i];
            }
            slope = 0.0;
            for (std::size_t i = 0; i < n; ++i) slope -= grad[i] * grad[i];
            if (slope == 0.0) {
                result.tolerance_met = true;
                break;
            }
        }

        double step = 1.0;
        double f_new = kInf;
        bool accepted = false;
        for (int ls = 0; ls < 60; ++ls) {
            for (std::size_t i = 0; i < n; ++i) x_new[i] = result.x[i] + step * direction[i];
            f_new = guarded(f, x_new);
            if (f_new <= result.fx + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no descent available along this direction

        grad_new = fd_gradient(f, x_new, options.fd_step);
        double sy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - result.x[i];
            yv[i] = grad_new[i] - grad[i];
            sy += s[i] * yv[i];
        }

        const double f_prev = result.fx;
        result.x = x_new;
        result.fx = f_new;
        grad = grad_new;

        if (sy > 1e-12) {
            // standard BFGS inverse update
            const double rho_bfgs = 1.0 / sy;
            std::vector<double> hy(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) hy[i] += inv_hess[i * n + j] * yv[j];
            double yhy = 0.0;
            for (std::size_t i = 0; i < n; ++i) yhy += yv[i] * hy[i];
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    inv_hess[i * n + j] += (1.0 + rho_bfgs * yhy) * rho_bfgs * s[i] * s[j] -
                                           rho_bfgs * (s[i] * hy[j] + hy[i] * s[j]);
                }
            }
        }

        if (std::abs(f_prev - result.fx) <= options.tolerance * (std::abs(f_prev) + 1e-30)) {
            result.tolerance_met = true;
            ++iter;
            break;
        }
    }

    result.gradient = grad;
    result.iterations = iter;
    return result;
}

}  // namespace itsa
