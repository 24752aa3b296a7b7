// dates.hpp
// Calendar dates stored as days since 1970-01-01 (UTC civil). Trading
// calendars are just ordered date lists; the only arithmetic needed is
// parsing, formatting and weekday stepping for synthetic panels.

#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include "crashrisk/errors.hpp"

namespace crashrisk {

using Date = std::int32_t;

inline Date make_date(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}};
    if (!ymd.ok()) {
        throw DataError("invalid calendar date " + std::to_string(year) + "-" +
                        std::to_string(month) + "-" + std::to_string(day));
    }
    return static_cast<Date>(sys_days{ymd}.time_since_epoch().count());
}

// Strict ISO-8601 YYYY-MM-DD.
inline Date parse_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') {
        throw DataError("invalid date '" + std::string(s) + "', expected YYYY-MM-DD");
    }
    auto digits = [&](std::size_t pos, std::size_t len) {
        int v = 0;
        for (std::size_t i = pos; i < pos + len; ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw DataError("invalid date '" + std::string(s) + "', expected YYYY-MM-DD");
            }
            v = v * 10 + (s[i] - '0');
        }
        return v;
    };
    return make_date(digits(0, 4), static_cast<unsigned>(digits(5, 2)),
                     static_cast<unsigned>(digits(8, 2)));
}

inline std::string date_to_string(Date d) {
    using namespace std::chrono;
    year_month_day ymd{sys_days{days{d}}};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

inline bool is_weekend(Date d) {
    using namespace std::chrono;
    weekday wd{sys_days{days{d}}};
    return wd == Saturday || wd == Sunday;
}

inline Date next_weekday(Date d) {
    Date n = d + 1;
    while (is_weekend(n)) ++n;
    return n;
}

}  // namespace crashrisk
