#pragma once

#include <cstdint>
#include <string>

namespace floodcast {

// ISO-8601 timestamps <-> Unix epoch seconds (UTC, proleptic Gregorian).
// Accepted input forms: "YYYY-MM-DD", "YYYY-MM-DD HH:MM", "YYYY-MM-DDTHH:MM",
// and the same with trailing ":SS". Throws DataError on anything else.
std::int64_t parse_iso8601(const std::string& text);

// Formats as "YYYY-MM-DDTHH:MM:SS".
std::string format_iso8601(std::int64_t epoch_seconds);

}  // namespace floodcast
