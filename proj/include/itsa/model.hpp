#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itsa/calendar.hpp"
#include "itsa/lag_polynomial.hpp"
#include "itsa/series.hpp"

namespace itsa {

/// Seasonal ARIMA structure (p,d,q) x (P,D,Q)_k.
struct SarimaOrder {
    int p = 0, d = 0, q = 0;
    int P = 0, D = 0, Q = 0;
    int k = 1;

    /// Throws std::invalid_argument when an order exceeds max_order, is
    /// negative, or a seasonal term is requested with k < 2.
    void validate(int max_order = 3) const;

    /// Observations consumed by the differencing operators: d + D*k.
    int differencing_span() const { return d + D * k; }

    std::string to_string() const;

    bool operator==(const SarimaOrder&) const = default;
};

enum class InterventionKind { Step, Pulse };

/// A coded intervention: a step is 0 before onset and 1 from onset onward,
/// a pulse is 1 at onset only.
struct InterventionSpec {
    std::string name;
    InterventionKind kind = InterventionKind::Step;
    Date onset;
    int expected_sign = 0;  ///< +1 / -1 documentation only; 0 = unstated
};

/// Calendar-rule or date-range indicator covariate. The column is 1 where
/// the observation's weekday is in `weekdays`, or its date is listed in
/// `dates`, or it falls inside the inclusive `range`.
struct CovariateDef {
    std::string name;
    std::set<int> weekdays;            ///< 0 = Monday ... 6 = Sunday
    std::vector<Date> dates;           ///< e.g. holiday list
    std::optional<std::pair<Date, Date>> range;
};

/// Named regressor columns aligned to a series.
class RegressorMatrix {
public:
    RegressorMatrix() = default;
    explicit RegressorMatrix(std::size_t rows) : rows_(rows) {}

    /// Throws std::invalid_argument on duplicate names or length mismatch.
    void add_column(std::string name, std::vector<double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<double>& column(std::size_t j) const { return columns_[j]; }
    const std::vector<double>& column(std::string_view name) const;

    /// -1 when absent.
    int index_of(std::string_view name) const;

    const std::vector<std::string>& warnings() const { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

private:
    std::size_t rows_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
    std::vector<std::string> warnings_;
};

/// Coefficient values for a SarimaOrder plus mean-function coefficients.
/// omega[0] is the intercept; omega[1+j] belongs to regressor column j.
struct SarimaParams {
    std::vector<double> omega;
    std::vector<double> phi;
    std::vector<double> theta;
    std::vector<double> Phi;
    std::vector<double> Theta;
    double sigma2 = 0.0;

    double intercept() const { return omega.empty() ? 0.0 : omega[0]; }
};

/// True when 1 - c_1 z - ... - c_r z^r has all roots outside the unit
/// circle, via the inverse Levinson-Durbin recursion (no root finding).
/// Applies to AR coefficients (stationarity) and MA coefficients
/// (invertibility) alike under the Box-Jenkins sign convention.
bool roots_outside_unit_circle(std::span<const double> coefficients);

/// True when phi/Phi satisfy stationarity and theta/Theta invertibility.
bool params_admissible(const SarimaParams& params);

/// Expands the model's difference equation: the AR side is
/// phi(B) Phi(B^k) (1-B)^d (1-B^k)^D, the MA side theta(B) Theta(B^k),
/// so the noise recursion N_t = ... can be read off directly.
std::pair<LagPolynomial, LagPolynomial> expand_difference_equation(const SarimaOrder& order,
                                                                   const SarimaParams& params);

}  // namespace itsa
