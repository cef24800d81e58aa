#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "floodcast/config.hpp"
#include "floodcast/series.hpp"

namespace floodcast {

// One-step-ahead supervised design matrix. Row i describes time t = first_index + i
// using only observations at indices <= t; target[i] is the discharge at t+1.
struct FeatureMatrix {
    std::vector<std::string> column_names;
    std::vector<double> values;  // row-major, n_rows x n_cols
    std::vector<double> target;
    std::vector<std::int64_t> row_timestamps;     // issue time t
    std::vector<std::int64_t> target_timestamps;  // forecast valid time t+1
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;

    double at(std::size_t row, std::size_t col) const {
        return values[row * n_cols + col];
    }
    std::span<const double> row(std::size_t i) const {
        return {values.data() + i * n_cols, n_cols};
    }
    bool empty() const { return n_rows == 0; }

    // Keeps the listed rows, in the given order.
    FeatureMatrix select_rows(const std::vector<std::size_t>& rows) const;
};

enum class RollingStat { Mean, Std };

// output[t] = input[t-l]; the first l entries are NaN (unavailable).
// Throws DataError if l < 1 or l >= series length.
std::vector<double> lag(std::span<const double> series, int l);

// output[t] = stat over input[t-w+1 .. t]; the first w-1 entries are NaN.
// Std is the sample standard deviation (divisor w-1) and requires w >= 2.
// Throws DataError if w < 1 or w > series length.
std::vector<double> rolling_stat(std::span<const double> series, int w, RollingStat stat);

// Assembles current rainfall, rainfall lags 1..rain_lags, discharge lags
// 1..q_lags, and the four rolling statistics; drops the first max_history()
// rows and the last row (no target). Throws DataError if nothing remains.
FeatureMatrix build_matrix(const CatchmentSeries& block, const FeatureWindows& windows);

// Audit dump, CSV with header: row_timestamp, features..., target.
void write_feature_csv(const FeatureMatrix& matrix, const std::string& path);

}  // namespace floodcast
