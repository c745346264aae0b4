#include "hcast/datetime.hpp"

#include <charconv>
#include <cstdio>

namespace hcast {
namespace {

// Days since 1970-01-01 for a civil date (valid over the full int range).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yr + (m <= 2));
}

bool parse_int(const char* begin, const char* end, int& out) {
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

std::optional<Timestamp> parse_timestamp(const std::string& text) {
    // Accepted layouts: "YYYY-MM-DD" and "YYYY-MM-DD HH:MM:SS"
    // (also tolerating 'T' as the date/time separator).
    const char* s = text.c_str();
    const std::size_t n = text.size();
    if (n != 10 && n != 19) return std::nullopt;
    if (s[4] != '-' || s[7] != '-') return std::nullopt;

    CivilTime c;
    if (!parse_int(s, s + 4, c.year) || !parse_int(s + 5, s + 7, c.month) ||
        !parse_int(s + 8, s + 10, c.day))
        return std::nullopt;
    if (c.month < 1 || c.month > 12 || c.day < 1 || c.day > 31) return std::nullopt;

    if (n == 19) {
        if ((s[10] != ' ' && s[10] != 'T') || s[13] != ':' || s[16] != ':') return std::nullopt;
        if (!parse_int(s + 11, s + 13, c.hour) || !parse_int(s + 14, s + 16, c.minute) ||
            !parse_int(s + 17, s + 19, c.second))
            return std::nullopt;
        if (c.hour > 23 || c.minute > 59 || c.second > 59) return std::nullopt;
    }
    return timestamp_from_civil(c);
}

Timestamp timestamp_from_civil(const CivilTime& c) {
    return days_from_civil(c.year, c.month, c.day) * 86400 + c.hour * 3600 + c.minute * 60 +
           c.second;
}

CivilTime civil_from_timestamp(Timestamp ts) {
    std::int64_t days = ts / 86400;
    std::int64_t rem = ts % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    CivilTime c;
    civil_from_days(days, c.year, c.month, c.day);
    c.hour = static_cast<int>(rem / 3600);
    c.minute = static_cast<int>((rem % 3600) / 60);
    c.second = static_cast<int>(rem % 60);
    return c;
}

int day_of_week(Timestamp ts) {
    std::int64_t days = ts / 86400;
    if (ts % 86400 < 0) days -= 1;
    // 1970-01-01 was a Thursday; shift so Monday = 0.
    std::int64_t dow = (days + 3) % 7;
    if (dow < 0) dow += 7;
    return static_cast<int>(dow);
}

std::string format_timestamp(Timestamp ts) {
    const CivilTime c = civil_from_timestamp(ts);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d %02d:%02d:%02d", c.year, c.month, c.day,
                  c.hour, c.minute, c.second);
    return std::string(buf);
}

}  // namespace hcast
