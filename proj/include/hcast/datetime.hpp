#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hcast {

// Civil timestamps parsed from `YYYY-MM-DD` or `YYYY-MM-DD HH:MM:SS`,
// stored as seconds since 1970-01-01 00:00:00 (no timezone arithmetic).
using Timestamp = std::int64_t;

struct CivilTime {
    int year = 1970;
    int month = 1;   // 1..12
    int day = 1;     // 1..31
    int hour = 0;    // 0..23
    int minute = 0;  // 0..59
    int second = 0;  // 0..59
};

std::optional<Timestamp> parse_timestamp(const std::string& text);

CivilTime civil_from_timestamp(Timestamp ts);
Timestamp timestamp_from_civil(const CivilTime& c);

// Monday = 0 .. Sunday = 6.
int day_of_week(Timestamp ts);

// Formats as `YYYY-MM-DD HH:MM:SS` (always with the time part).
std::string format_timestamp(Timestamp ts);

}  // namespace hcast
