#pragma once

#include <functional>
#include <span>
#include <vector>

namespace itsa {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
    int max_iterations = 500;
    double tolerance = 1e-10;  ///< relative spread of simplex objective values
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
    bool tolerance_met = false;
};

/// Derivative-free simplex minimization with the standard reflection /
/// expansion / contraction / shrink coefficients. The initial simplex is
/// fixed: vertex i perturbs coordinate i by 0.1 * max(1, |start_i|), so
/// runs are deterministic. Objectives may return +infinity to reject a
/// region.
NelderMeadResult nelder_mead(const Objective& f, std::span<const double> start,
                             const NelderMeadOptions& options = {});

struct BfgsOptions {
    int max_iterations = 500;
    double tolerance = 1e-10;      ///< relative objective change
    double fd_step = 1e-5;         ///< relative central-difference step
};

struct BfgsResult {
    std::vector<double> x;
    double fx = 0.0;
    std::vector<double> gradient;  ///< at the final point
    int iterations = 0;
    bool tolerance_met = false;
};

/// Quasi-Newton polish with numerically differenced gradients and an
/// Armijo backtracking line search. Infinite objective values simply
/// force the line search to shrink, which keeps iterates inside soft
/// constraint barriers.
BfgsResult bfgs_minimize(const Objective& f, std::span<const double> start,
                         const BfgsOptions& options = {});

/// Central-difference gradient with per-coordinate step
/// rel_step * max(1, |x_i|). Falls back to a one-sided difference when the
/// far point of the stencil is not finite.
std::vector<double> fd_gradient(const Objective& f, std::span<const double> x, double rel_step);

/// Dense symmetric central-difference Hessian (row-major n*n).
std::vector<double> fd_hessian(const Objective& f, std::span<const double> x, double rel_step);

}  // namespace itsa
