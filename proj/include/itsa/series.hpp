#pragma once

#include <cstddef>
#include <vector>

#include "itsa/calendar.hpp"

namespace itsa {

/// An equally spaced daily time series. Observation i belongs to calendar
/// day start + i, so contiguity holds by construction; ingestion is
/// responsible for rejecting gaps and duplicates before building one.
/// Immutable after construction.
class TimeSeries {
public:
    TimeSeries() = default;

    /// Throws DataError if values is empty or contains a non-finite entry.
    TimeSeries(std::vector<double> values, Date start);

    const std::vector<double>& values() const { return values_; }
    Date start() const { return start_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    Date date_at(std::size_t i) const { return start_ + static_cast<std::int64_t>(i); }
    Date last_date() const { return date_at(values_.size() - 1); }

    bool contains(Date d) const { return d >= start_ && d <= last_date(); }

    /// Index of a calendar day within the span. Throws std::out_of_range
    /// when the date falls outside the series.
    std::size_t index_of(Date d) const;

private:
    std::vector<double> values_;
    Date start_;
};

/// Applies d first differences and D seasonal differences at lag
/// seasonal_lag. Output length shrinks by order + seasonal_order *
/// seasonal_lag. The two operators commute, so application order does not
/// matter. Throws std::length_error when the input is too short and
/// std::invalid_argument when seasonal_order > 0 with seasonal_lag < 1.
std::vector<double> difference(const std::vector<double>& x, int order, int seasonal_lag,
                               int seasonal_order);

/// Series overload; the start date advances past the consumed observations.
TimeSeries difference(const TimeSeries& series, int order, int seasonal_lag, int seasonal_order);

}  // namespace itsa
