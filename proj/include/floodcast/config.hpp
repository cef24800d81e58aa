#pragma once

#include <cstdint>
#include <string>

namespace floodcast {

// Gradient-boosted tree hyperparameters. Defaults are the locked structure
// used across all catchments.
struct GbtParams {
    double learning_rate = 0.1;
    int max_depth = 5;
    double subsample = 0.95;        // row fraction per boosting round
    double colsample = 0.90;        // feature fraction per split
    double min_child_weight = 1.0;  // minimum hessian sum per child
    double l1_penalty = 0.0;
    double l2_penalty = 1.0;
    double min_split_loss = 0.0;
    int n_rounds = 400;
    int early_stop_patience = 30;   // rounds without validation-KGE improvement
};

// Random-forest (peak model) hyperparameters.
struct RfParams {
    int n_trees = 700;
    int max_depth = 8;
    int min_samples_leaf = 5;
    double feature_fraction = 0.80;  // features considered per split
    int min_peak_rows = 10;          // below this the peak model is unavailable
};

// Lag orders and rolling-statistic windows for the supervised matrix.
struct FeatureWindows {
    int rain_lags = 4;
    int q_lags = 3;
    int q_rollmean_w = 4;
    int q_rollstd_w = 5;
    int rain_rollmean_w = 2;
    int rain_rollstd_w = 5;

    // Largest lag or window; rows with less history than this are dropped.
    int max_history() const;
};

// How peak indices are identified in the test block before fusion.
// Forecast: baseline exceeds the threshold (usable operationally).
// Observed: observations exceed the threshold (for ambiguity studies only).
enum class PeakIdentification { Forecast, Observed };

struct FrameworkConfig {
    GbtParams gbt;
    RfParams rf;
    FeatureWindows windows;

    double peak_quantile = 0.999;
    double fusion_weight = 0.95;
    PeakIdentification peak_identification = PeakIdentification::Forecast;

    double train_fraction = 0.7;
    double validation_fraction = 0.15;  // carved from the tail of the training block
    int event_max_offset = 4;           // event matching window, in steps
    int step_hours = 6;
    std::uint64_t rng_seed = 42;

    // Wall-draw power model for energy reporting.
    double p_high_watts = 130.0;
    double p_low_watts = 60.0;
    double w_high = 0.33;
};

// Checks every range constraint and returns the config unchanged.
// Throws ConfigError naming the offending field.
FrameworkConfig validate_config(const FrameworkConfig& config);

// Flat "key = value" document, one field per line, '#' comments.
// Unknown keys are an error, never silently ignored.
FrameworkConfig parse_config(const std::string& text);
FrameworkConfig load_config_file(const std::string& path);
std::string serialize_config(const FrameworkConfig& config);

bool operator==(const FeatureWindows& a, const FeatureWindows& b);
bool operator==(const GbtParams& a, const GbtParams& b);
bool operator==(const RfParams& a, const RfParams& b);
bool operator==(const FrameworkConfig& a, const FrameworkConfig& b);

}  // namespace floodcast
