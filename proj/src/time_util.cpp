#include "groupsense/time_util.hpp"

#include <cstdio>

#include "groupsense/error.hpp"

namespace groupsense {

// Howard Hinnant's civil-date algorithms.
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{static_cast<int>(y + (m <= 2)), m, d};
}

namespace {

bool parse_date_fields(const std::string& s, int& y, unsigned& mo, unsigned& d) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 4 || i == 7) continue;
        if (s[i] < '0' || s[i] > '9') return false;
    }
    y = std::stoi(s.substr(0, 4));
    mo = static_cast<unsigned>(std::stoi(s.substr(5, 2)));
    d = static_cast<unsigned>(std::stoi(s.substr(8, 2)));
    return mo >= 1 && mo <= 12 && d >= 1 && d <= 31;
}

bool parse_hms_fields(const std::string& s, unsigned& h, unsigned& mi, unsigned& se) {
    if (s.size() != 8 || s[2] != ':' || s[5] != ':') return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 2 || i == 5) continue;
        if (s[i] < '0' || s[i] > '9') return false;
    }
    h = static_cast<unsigned>(std::stoi(s.substr(0, 2)));
    mi = static_cast<unsigned>(std::stoi(s.substr(3, 2)));
    se = static_cast<unsigned>(std::stoi(s.substr(6, 2)));
    return h < 24 && mi < 60 && se < 60;
}

}  // namespace

TimePoint parse_iso8601(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.back() == 'Z') body.pop_back();
    if (body.size() != 19 || body[10] != 'T')
        throw DataError("malformed ISO-8601 timestamp: '" + s + "'");
    int y;
    unsigned mo, d, h, mi, se;
    if (!parse_date_fields(body.substr(0, 10), y, mo, d) ||
        !parse_hms_fields(body.substr(11), h, mi, se))
        throw DataError("malformed ISO-8601 timestamp: '" + s + "'");
    return days_from_civil(y, mo, d) * kSecondsPerDay + h * 3600 + mi * 60 + se;
}

std::string format_iso8601(TimePoint t) {
    const std::int64_t days = floor_div(t, kSecondsPerDay);
    const std::int64_t sod = floor_mod(t, kSecondsPerDay);
    const CivilDate cd = civil_from_days(days);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ", cd.year, cd.month,
                  cd.day, static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod / 60) % 60), static_cast<long long>(sod % 60));
    return buf;
}

TimePoint parse_date_time(const std::string& date, const std::string& hms) {
    int y;
    unsigned mo, d, h, mi, se;
    if (!parse_date_fields(date, y, mo, d) || !parse_hms_fields(hms, h, mi, se))
        throw DataError("malformed timestamp: '" + date + " " + hms + "'");
    return days_from_civil(y, mo, d) * kSecondsPerDay + h * 3600 + mi * 60 + se;
}

std::string format_date(TimePoint t) {
    const CivilDate cd = civil_from_days(floor_div(t, kSecondsPerDay));
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", cd.year, cd.month, cd.day);
    return buf;
}

std::string format_hms(TimePoint t) {
    const std::int64_t sod = floor_mod(t, kSecondsPerDay);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02lld:%02lld:%02lld", static_cast<long long>(sod / 3600),
                  static_cast<long long>((sod / 60) % 60), static_cast<long long>(sod % 60));
    return buf;
}

int iso_weekday(std::int64_t days) {
    // 1970-01-01 was a Thursday.
    return static_cast<int>(floor_mod(days + 3, 7)) + 1;
}

namespace {

int weeks_in_iso_year(int year) {
    const int jan1 = iso_weekday(days_from_civil(year, 1, 1));
    const int dec31 = iso_weekday(days_from_civil(year, 12, 31));
    return (jan1 == 4 || dec31 == 4) ? 53 : 52;
}

}  // namespace

std::string iso_week_label(TimePoint t, int utc_offset_minutes) {
    const std::int64_t z = local_day(t, utc_offset_minutes);
    const CivilDate cd = civil_from_days(z);
    const int wd = iso_weekday(z);
    const int doy = static_cast<int>(z - days_from_civil(cd.year, 1, 1)) + 1;
    int year = cd.year;
    int week = (doy - wd + 10) / 7;
    if (week < 1) {
        year -= 1;
        week = weeks_in_iso_year(year);
    } else if (week > weeks_in_iso_year(year)) {
        year += 1;
        week = 1;
    }
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-W%02d", year, week);
    return buf;
}

}  // namespace groupsense
