#include "floodcast/series.hpp"

#include <cmath>

#include "floodcast/errors.hpp"
#include "floodcast/timeutil.hpp"

namespace floodcast {

CatchmentSeries CatchmentSeries::create(std::string catchment_id, int step_hours,
                                        std::vector<std::int64_t> timestamps,
                                        std::vector<double> rainfall,
                                        std::vector<double> discharge) {
    if (step_hours < 1) throw DataError("step_hours must be >= 1");
    const std::size_t n = timestamps.size();
    if (rainfall.size() != n || discharge.size() != n)
        throw DataError(catchment_id + ": rainfall/discharge/timestamps length mismatch (" +
                        std::to_string(rainfall.size()) + "/" + std::to_string(discharge.size()) +
                        "/" + std::to_string(n) + ")");
    const std::int64_t step_s = static_cast<std::int64_t>(step_hours) * 3600;
    for (std::size_t i = 1; i < n; ++i) {
        if (timestamps[i] - timestamps[i - 1] != step_s)
            throw DataError(catchment_id + ": timestamps not at a constant " +
                            std::to_string(step_hours) + "h step near " +
                            format_iso8601(timestamps[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(rainfall[i]) || !std::isfinite(discharge[i]))
            throw DataError(catchment_id + ": missing value at " +
                            format_iso8601(timestamps[i]) +
                            " (gaps must be resolved before construction)");
        if (rainfall[i] < 0.0)
            throw DataError(catchment_id + ": negative rainfall at " +
                            format_iso8601(timestamps[i]));
        if (discharge[i] < 0.0)
            throw DataError(catchment_id + ": negative discharge at " +
                            format_iso8601(timestamps[i]));
    }
    CatchmentSeries s;
    s.catchment_id = std::move(catchment_id);
    s.step_hours = step_hours;
    s.timestamps = std::move(timestamps);
    s.rainfall = std::move(rainfall);
    s.discharge = std::move(discharge);
    return s;
}

CatchmentSeries CatchmentSeries::slice(std::size_t begin, std::size_t end) const {
    CatchmentSeries out;
    out.catchment_id = catchment_id;
    out.step_hours = step_hours;
    out.timestamps.assign(timestamps.begin() + static_cast<std::ptrdiff_t>(begin),
                          timestamps.begin() + static_cast<std::ptrdiff_t>(end));
    out.rainfall.assign(rainfall.begin() + static_cast<std::ptrdiff_t>(begin),
                        rainfall.begin() + static_cast<std::ptrdiff_t>(end));
    out.discharge.assign(discharge.begin() + static_cast<std::ptrdiff_t>(begin),
                         discharge.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

std::size_t SplitSpec::boundary_index(std::size_t n) const {
    return static_cast<std::size_t>(std::floor(train_fraction * static_cast<double>(n)));
}

std::size_t SplitSpec::validation_length(std::size_t n) const {
    return static_cast<std::size_t>(
        std::floor(validation_fraction * static_cast<double>(boundary_index(n))));
}

}  // namespace floodcast
