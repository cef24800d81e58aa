#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floodcast/config.hpp"
#include "floodcast/features.hpp"
#include "floodcast/tree.hpp"

namespace floodcast {

// Bagged variance-reduction forest; prediction is the plain mean over trees,
// summed in tree-index order so results are worker-count invariant.
struct RfModel {
    std::vector<RegressionTree> trees;
    std::vector<std::uint64_t> tree_seeds;  // per-tree bootstrap seed
    std::vector<std::string> feature_names;

    RfParams params;
    std::uint64_t rng_seed = 0;
    std::optional<double> oob_mse;  // out-of-bag MSE, when any row was left out
};

// Trains params.n_trees trees on bootstrap resamples (same size, with
// replacement). Per-tree seeds derive from (rng_seed, tree index), so any
// worker count yields bit-identical models. Throws PeakModelUnavailable
// when rows.n_rows < params.min_peak_rows; DataError on shape mismatches.
RfModel fit_rf(const FeatureMatrix& rows, const std::vector<double>& targets,
               const RfParams& params, std::uint64_t rng_seed, int workers = 1);

std::vector<double> predict_rf(const RfModel& model, const FeatureMatrix& rows);

std::string rf_to_json(const RfModel& model);
RfModel rf_from_json(const std::string& text);
void save_rf(const RfModel& model, const std::string& path);
RfModel load_rf(const std::string& path);

}  // namespace floodcast
