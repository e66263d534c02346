#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "itsa/model.hpp"
#include "itsa/series.hpp"

namespace itsa {

struct FitConfig {
    int max_iterations = 500;
    double tolerance = 1e-10;            ///< relative objective change
    double finite_difference_step = 1e-5;  ///< relative step for gradients
    int parameter_max_order = 3;
    int min_obs_per_param = 10;
};

enum class SeMethod { Hessian, Opg, Unavailable };

/// Estimation output for one model. Residuals live on the differenced
/// scale and have length n_effective = n - d - D*k; fitted values are on
/// the original scale with the first d + D*k observations carried over
/// unchanged (they condition the recursion).
struct FitResult {
    SarimaOrder model;
    SarimaParams params;

    std::vector<std::string> coef_names;  ///< free coefficients, packing order
    std::vector<double> coef;
    std::vector<double> std_errors;  ///< NaN where unavailable
    std::vector<double> t_stats;

    std::vector<double> residuals;
    std::vector<double> fitted;
    std::vector<double> mean_path;  ///< m_t, length n

    double css = 0.0;
    bool converged = false;
    bool stationary_ok = true;
    bool invertible_ok = true;
    SeMethod se_method = SeMethod::Unavailable;
    std::size_t n_effective = 0;
    bool intercept_estimated = false;

    int coef_index(std::string_view name) const;
    double coef_value(std::string_view name) const;
    double std_error(std::string_view name) const;
    double t_stat(std::string_view name) const;
};

/// One column per intervention / covariate definition, aligned to the
/// series. Step columns are 0 before onset and 1 afterwards; pulses are
/// one-hot. Suspicious columns (constant, or annihilated by any
/// differencing) produce warnings on the returned matrix, not errors.
RegressorMatrix build_regressors(const TimeSeries& series,
                                 const std::vector<InterventionSpec>& interventions,
                                 const std::vector<CovariateDef>& covariates = {});

/// Conditional sum of squares for the mean function + SARIMA noise model:
/// subtract m_t, apply the differencing operators, run the ARMA recursion
/// with pre-sample values of the differenced series imputed by its
/// empirical mean and pre-sample innovations set to 0. Returns +infinity
/// for parameter points violating stationarity/invertibility or producing
/// non-finite intermediates, which keeps derivative-free search inside the
/// admissible region.
double css_objective(const SarimaParams& params, const TimeSeries& series,
                     const RegressorMatrix& regressors, const SarimaOrder& order);

/// m_t = omega_0 + sum_j omega_j x_jt.
std::vector<double> predict_mean(const SarimaParams& params, const RegressorMatrix& regressors);

/// Minimizes the CSS objective over all free coefficients: Nelder-Mead
/// from a fixed neutral start (AR/MA at zero, mean coefficients from OLS
/// of the differenced series on the differenced regressors), then BFGS
/// with central finite differences. Standard errors come from the inverse
/// numerical Hessian of the objective scaled by 2*sigma2, falling back to
/// the outer-product-of-gradients approximation when the Hessian is not
/// positive definite. The intercept is estimated only when no differencing
/// is applied (otherwise the operators annihilate it and it is fixed at 0).
/// Failure to converge is recorded on the result, never thrown.
FitResult fit(const TimeSeries& series, const RegressorMatrix& regressors, const SarimaOrder& order,
              const FitConfig& config = {});

}  // namespace itsa
