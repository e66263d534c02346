#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace itsa {

/// Proleptic Gregorian calendar date at day resolution. Stored as a day
/// count so date arithmetic is plain integer arithmetic.
class Date {
public:
    Date() = default;
    Date(int year, int month, int day);

    /// Parses "YYYY-MM-DD". Throws DataError on malformed input.
    static Date parse(std::string_view iso);

    static Date from_day_number(std::int64_t days);

    /// Days since 1970-01-01 (negative before the epoch).
    std::int64_t day_number() const { return days_; }

    int year() const;
    int month() const;
    int day() const;

    /// 0 = Monday ... 6 = Sunday.
    int day_of_week() const;

    std::string to_string() const;

    Date operator+(std::int64_t days) const { return from_day_number(days_ + days); }
    Date operator-(std::int64_t days) const { return from_day_number(days_ - days); }
    std::int64_t operator-(const Date& other) const { return days_ - other.days_; }

    auto operator<=>(const Date&) const = default;

private:
    std::int64_t days_ = 0;
};

/// Day-of-week index for config strings ("mon".."sun", case-insensitive).
/// Throws ConfigError on anything else.
int parse_weekday(std::string_view name);

}  // namespace itsa
