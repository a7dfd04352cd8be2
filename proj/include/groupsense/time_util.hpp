#pragma once

#include <cstdint>
#include <string>

namespace groupsense {

// Seconds since the Unix epoch, UTC. All duration math downstream is done in
// whole minutes; second resolution is kept only for raw events and intervals.
using TimePoint = std::int64_t;

constexpr std::int64_t kSecondsPerMinute = 60;
constexpr std::int64_t kSecondsPerDay = 86400;
constexpr int kMinutesPerDay = 1440;

struct CivilDate {
    int year = 1970;
    unsigned month = 1;  // 1..12
    unsigned day = 1;    // 1..31
};

std::int64_t days_from_civil(int year, unsigned month, unsigned day);
CivilDate civil_from_days(std::int64_t days);

// "2022-02-07T12:00:00Z" <-> TimePoint. Throws DataError on malformed input.
TimePoint parse_iso8601(const std::string& s);
std::string format_iso8601(TimePoint t);

// Syslog carries the timestamp as two fields: "2022-02-07" "12:00:00".
TimePoint parse_date_time(const std::string& date, const std::string& hms);
std::string format_date(TimePoint t);
std::string format_hms(TimePoint t);

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    return a - floor_div(a, b) * b;
}

inline std::int64_t duration_minutes(TimePoint entry, TimePoint departure) {
    return (departure - entry) / kSecondsPerMinute;
}

// Calendar day index under a fixed UTC offset (minutes east of UTC).
inline std::int64_t local_day(TimePoint t, int utc_offset_minutes) {
    return floor_div(t + std::int64_t{utc_offset_minutes} * 60, kSecondsPerDay);
}

inline TimePoint day_start(std::int64_t day, int utc_offset_minutes) {
    return day * kSecondsPerDay - std::int64_t{utc_offset_minutes} * 60;
}

// Minute of the local day, 0..1439.
inline int minute_of_day(TimePoint t, int utc_offset_minutes) {
    return static_cast<int>(
        floor_mod(t + std::int64_t{utc_offset_minutes} * 60, kSecondsPerDay) / kSecondsPerMinute);
}

// ISO weekday, Monday=1 .. Sunday=7.
int iso_weekday(std::int64_t days);

// ISO-8601 week label, e.g. "2022-W06", under the given UTC offset.
std::string iso_week_label(TimePoint t, int utc_offset_minutes);

}  // namespace groupsense
