#pragma once

#include <span>
#include <vector>

namespace floodcast {

// Baseline forecast with the peak-model correction applied at the adjusted
// indices; everywhere else fused == baseline exactly.
struct CombinedForecast {
    std::vector<double> baseline;
    std::vector<double> fused;
    std::vector<std::size_t> adjusted_indices;
};

// Indices where the baseline forecast exceeds the threshold. Forecast-side
// detection: needs nothing from the future.
std::vector<std::size_t> identify_peak_indices(std::span<const double> baseline,
                                               double threshold);

// fused[i] = baseline[i] + weight * peak_predictions[j] at the j-th adjusted
// index; identity elsewhere. peak_predictions must align one-to-one with
// indices (throws DataError otherwise: that is an alignment bug upstream).
CombinedForecast fuse(std::span<const double> baseline,
                      const std::vector<std::size_t>& indices,
                      std::span<const double> peak_predictions, double weight);

}  // namespace floodcast
