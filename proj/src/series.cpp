#include "itsa/series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "itsa/errors.hpp"

namespace itsa {

TimeSeries::TimeSeries(std::vector<double> values, Date start)
    : values_(std::move(values)), start_(start) {
    if (values_.empty()) throw DataError("time series must contain at least one observation");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i]))
            throw DataError("non-finite value at " + date_at(i).to_string());
    }
}

std::size_t TimeSeries::index_of(Date d) const {
    if (!contains(d))
        throw std::out_of_range("date " + d.to_string() + " outside series span " + start_.to_string() +
                                ".." + last_date().to_string());
    return static_cast<std::size_t>(d - start_);
}

std::vector<double> difference(const std::vector<double>& x, int order, int seasonal_lag,
                               int seasonal_order) {
    if (order < 0 || seasonal_order < 0) throw std::invalid_argument("differencing orders must be >= 0");
    if (seasonal_order > 0 && seasonal_lag < 1)
        throw std::invalid_argument("seasonal differencing requires a positive seasonal lag");

    const std::size_t consumed =
        static_cast<std::size_t>(order) + static_cast<std::size_t>(seasonal_order) * seasonal_lag;
    if (x.size() <= consumed)
        throw std::length_error("series of length " + std::to_string(x.size()) +
                                " too short for differencing consuming " + std::to_string(consumed));

    std::vector<double> out = x;
    auto apply = [&out](std::size_t lag) {
        for (std::size_t t = out.size(); t-- > lag;) out[t] -= out[t - lag];
        out.erase(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(lag));
    };
    for (int i = 0; i < order; ++i) apply(1);
    for (int i = 0; i < seasonal_order; ++i) apply(static_cast<std::size_t>(seasonal_lag));
    return out;
}

TimeSeries difference(const TimeSeries& series, int order, int seasonal_lag, int seasonal_order) {
    std::vector<double> out = difference(series.values(), order, seasonal_lag, seasonal_order);
    const std::int64_t consumed = static_cast<std::int64_t>(series.size() - out.size());
    return TimeSeries(std::move(out), series.start() + consumed);
}

}  // namespace itsa
