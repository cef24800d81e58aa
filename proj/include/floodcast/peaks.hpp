#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace floodcast {

// Maximal run of consecutive threshold exceedances. The apex is the run's
// discharge maximum, earliest index on ties.
struct PeakEvent {
    std::size_t start = 0;
    std::size_t end = 0;  // inclusive
    std::size_t apex = 0;
    double apex_value = 0.0;
};

// Threshold, per-step flags and exceedance magnitudes, grouped events.
struct PeakSet {
    double threshold = 0.0;
    std::vector<std::uint8_t> flags;    // discharge > threshold
    std::vector<double> magnitudes;     // max(discharge - threshold, 0)
    std::vector<PeakEvent> events;
};

struct EventMatch {
    std::size_t observed = 0;  // index into the observed event list
    std::size_t forecast = 0;  // index into the forecast event list
    int offset = 0;            // forecast apex - observed apex, in steps
};

struct MatchResult {
    std::vector<EventMatch> pairs;
    std::vector<std::size_t> unmatched_observed;
    std::vector<std::size_t> unmatched_forecast;
};

// Empirical quantile with linear interpolation between order statistics at
// rank (n-1)*q. Throws DataError on empty input or q outside (0,1).
double compute_threshold(std::span<const double> train_discharge, double quantile);

// Exceedance above the threshold, zero at or below it.
double peak_magnitude(double q6h, double threshold);

std::vector<std::uint8_t> exceedance_flags(std::span<const double> discharge,
                                           double threshold);

std::vector<PeakEvent> extract_events(std::span<const std::uint8_t> flags,
                                      std::span<const double> discharge);

// Greedy matching by ascending |apex offset|, each event used at most once,
// pairs only within +-max_offset steps; ties go to the earlier forecast event.
MatchResult match_events(const std::vector<PeakEvent>& observed,
                         const std::vector<PeakEvent>& forecast, int max_offset);

PeakSet build_peak_set(std::span<const double> discharge, double threshold);

// CSV export: start,end,apex,apex_value.
void write_events_csv(const std::vector<PeakEvent>& events, const std::string& path);

}  // namespace floodcast
