#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floodcast/series.hpp"

namespace floodcast {

// Timestamped values straight from disk. NaN marks an explicitly missing
// value; absent timestamps are gaps and surface during resampling/alignment.
struct RawSeries {
    std::vector<std::int64_t> timestamps;  // strictly increasing
    std::vector<double> values;
};

// Reads a two-column CSV "timestamp,value" (header required, UTF-8, '.'
// decimal separator). The literal NaN/nan marks a missing value.
// Throws DataError with the line number on parse failures, duplicate or
// non-monotone timestamps.
RawSeries read_series(const std::string& path);

// Infers the native step from timestamp differences (their GCD). Throws if
// the series has fewer than two points or the GCD is not a whole hour.
int infer_step_hours(const RawSeries& series);

// Aggregates to the target step by trailing arithmetic means: the output
// value stamped t is the mean of the native values covering (t-target, t].
// Blocks are anchored at the first timestamp; a trailing partial block is
// dropped; a block with any missing hour (gap or NaN) yields NaN.
// Throws DataError if native_step does not divide target_step.
RawSeries resample_to_step(const RawSeries& series, int native_step_hours,
                           int target_step_hours);

// Intersects the two timestamp sets, requires the overlap to be contiguous
// at step_hours and free of missing values, and builds the validated series.
// Throws DataError on empty overlap or with a gap report otherwise.
CatchmentSeries align_and_build(const std::string& catchment_id,
                                const RawSeries& rainfall,
                                const RawSeries& discharge, int step_hours);

// Splits into contiguous train/validation/test blocks exhausting the series.
// min_block_len is the longest feature window + 1; a nonempty block shorter
// than that throws DataError (insufficient data).
SplitBlocks chronological_split(const CatchmentSeries& series, const SplitSpec& spec,
                                std::size_t min_block_len);

}  // namespace floodcast
