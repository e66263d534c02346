#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace itsa {

/// Minimal dense routines for the small symmetric systems this project
/// needs (parameter counts stay in the low tens). Matrices are row-major.

/// In-place Cholesky factorization of a symmetric positive definite matrix;
/// returns false when a non-positive pivot appears.
bool cholesky_factor(std::vector<double>& a, std::size_t n);

/// Inverts a symmetric positive definite matrix in place via Cholesky.
bool invert_spd(std::vector<double>& a, std::size_t n);

/// General in-place inverse by Gauss-Jordan elimination with partial
/// pivoting; returns false when the matrix is numerically singular.
bool invert(std::vector<double>& a, std::size_t n);

struct OlsResult {
    std::vector<double> beta;
    std::vector<double> xtx_inverse;  ///< row-major k x k
    double rss = 0.0;
    std::size_t n_obs = 0;
    std::size_t n_coef = 0;
};

/// Ordinary least squares of y on the given columns via normal equations.
/// When `ridge` > 0 that multiple of the largest diagonal entry is added to
/// the diagonal before factorization (used for degenerate starts). Throws
/// std::runtime_error if the system is singular and ridge == 0.
OlsResult ols(const std::vector<std::span<const double>>& columns, std::span<const double> y,
              double ridge = 0.0);

}  // namespace itsa
