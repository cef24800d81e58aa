#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floodcast/config.hpp"
#include "floodcast/features.hpp"
#include "floodcast/tree.hpp"

namespace floodcast {

// Additive second-order boosted ensemble for squared-error regression:
// prediction(x) = base_score + learning_rate * sum_k leaf_k(x).
struct GbtModel {
    double base_score = 0.0;
    double learning_rate = 0.1;
    std::vector<RegressionTree> trees;
    std::vector<std::string> feature_names;

    GbtParams params;  // echoed into serialization
    std::uint64_t rng_seed = 0;
    int rounds_used = 0;                  // after early-stopping truncation
    double best_validation_kge = 0.0;     // -inf when no validation block
    std::vector<double> train_mse_history;  // per grown round, not serialized
};

// Grows up to params.n_rounds trees; with a nonempty validation matrix the
// ensemble is cut back to the round with the best validation KGE, stopping
// early after params.early_stop_patience rounds without improvement.
// Throws DataError on an empty train matrix or non-finite inputs.
GbtModel fit_gbt(const FeatureMatrix& train, const FeatureMatrix& validation,
                 const GbtParams& params, std::uint64_t rng_seed);

// Deterministic additive prediction. Throws DataError when the row schema
// does not match the training columns.
std::vector<double> predict_gbt(const GbtModel& model, const FeatureMatrix& rows);

// Early-stopping objective: verify::kge, with degenerate inputs mapped to
// -infinity (worst). Higher is better.
double kge_eval_hook(std::span<const double> predictions, std::span<const double> targets);

std::string gbt_to_json(const GbtModel& model);
GbtModel gbt_from_json(const std::string& text);
void save_gbt(const GbtModel& model, const std::string& path);
GbtModel load_gbt(const std::string& path);

}  // namespace floodcast
