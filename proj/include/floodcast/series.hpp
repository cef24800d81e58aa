#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace floodcast {

// Aligned, regular-step rainfall and discharge record for one catchment.
// Construction validates every invariant: equal lengths, strictly increasing
// timestamps at fixed spacing, finite nonnegative values. Instances are
// immutable in practice (treated as read-only after construction) and safe
// to share across workers.
struct CatchmentSeries {
    std::string catchment_id;
    int step_hours = 6;
    std::vector<std::int64_t> timestamps;  // epoch seconds
    std::vector<double> rainfall;          // mm per step
    std::vector<double> discharge;         // m^3/s, mean over the trailing step

    // Throws DataError on any invariant violation; never repairs input.
    static CatchmentSeries create(std::string catchment_id, int step_hours,
                                  std::vector<std::int64_t> timestamps,
                                  std::vector<double> rainfall,
                                  std::vector<double> discharge);

    std::size_t size() const { return timestamps.size(); }

    // Contiguous [begin, end) view, copied.
    CatchmentSeries slice(std::size_t begin, std::size_t end) const;
};

// Chronological split rule. The validation block is the tail of the
// training block, so ordering is train | validation | test.
struct SplitSpec {
    double train_fraction = 0.7;
    double validation_fraction = 0.15;

    std::size_t boundary_index(std::size_t n) const;    // floor(train_fraction * n)
    std::size_t validation_length(std::size_t n) const; // floor(validation_fraction * boundary)
};

struct SplitBlocks {
    CatchmentSeries train;       // before the validation tail
    CatchmentSeries validation;  // may be empty
    CatchmentSeries test;
};

}  // namespace floodcast
