#include "floodcast/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "floodcast/errors.hpp"
#include "kv_util.hpp"

namespace floodcast {

int FeatureWindows::max_history() const {
    return std::max({rain_lags, q_lags, q_rollmean_w, q_rollstd_w, rain_rollmean_w,
                     rain_rollstd_w});
}

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw ConfigError(field + ": " + what);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

FrameworkConfig validate_config(const FrameworkConfig& c) {
    require(c.gbt.learning_rate > 0.0 && c.gbt.learning_rate <= 1.0, "learning_rate",
            "must be in (0, 1]");
    require(c.gbt.max_depth >= 1, "max_depth", "must be >= 1");
    require(c.gbt.subsample > 0.0 && c.gbt.subsample <= 1.0, "subsample",
            "must be in (0, 1]");
    require(c.gbt.colsample > 0.0 && c.gbt.colsample <= 1.0, "colsample",
            "must be in (0, 1]");
    require(c.gbt.min_child_weight >= 0.0, "min_child_weight", "must be >= 0");
    require(c.gbt.l1_penalty >= 0.0, "l1_penalty", "must be >= 0");
    require(c.gbt.l2_penalty >= 0.0, "l2_penalty", "must be >= 0");
    require(c.gbt.min_split_loss >= 0.0, "min_split_loss", "must be >= 0");
    require(c.gbt.n_rounds >= 1, "n_rounds", "must be >= 1");
    require(c.gbt.early_stop_patience >= 1, "early_stop_patience", "must be >= 1");

    require(c.rf.n_trees >= 1, "rf_n_trees", "must be >= 1");
    require(c.rf.max_depth >= 1, "rf_max_depth", "must be >= 1");
    require(c.rf.min_samples_leaf >= 1, "rf_min_samples_leaf", "must be >= 1");
    require(c.rf.feature_fraction > 0.0 && c.rf.feature_fraction <= 1.0,
            "rf_feature_fraction", "must be in (0, 1]");
    require(c.rf.min_peak_rows >= 2, "rf_min_peak_rows", "must be >= 2");

    require(c.windows.rain_lags >= 1, "rain_lags", "must be >= 1");
    require(c.windows.q_lags >= 1, "q_lags", "must be >= 1");
    require(c.windows.q_rollmean_w >= 1, "q_rollmean_w", "must be >= 1");
    require(c.windows.q_rollstd_w >= 2, "q_rollstd_w", "must be >= 2");
    require(c.windows.rain_rollmean_w >= 1, "rain_rollmean_w", "must be >= 1");
    require(c.windows.rain_rollstd_w >= 2, "rain_rollstd_w", "must be >= 2");

    require(c.peak_quantile > 0.0 && c.peak_quantile < 1.0, "peak_quantile",
            "must be in (0, 1)");
    require(c.fusion_weight >= 0.0, "fusion_weight", "must be >= 0");
    require(c.train_fraction > 0.0 && c.train_fraction < 1.0, "train_fraction",
            "must be in (0, 1)");
    require(c.validation_fraction >= 0.0 && c.validation_fraction < 1.0,
            "validation_fraction", "must be in [0, 1)");
    require(c.event_max_offset >= 0, "event_max_offset", "must be >= 0");
    require(c.step_hours >= 1, "step_hours", "must be >= 1");

    require(c.p_high_watts > 0.0, "p_high_watts", "must be > 0");
    require(c.p_low_watts > 0.0, "p_low_watts", "must be > 0");
    require(c.w_high >= 0.0 && c.w_high <= 1.0, "w_high", "must be in [0, 1]");
    return c;
}

FrameworkConfig parse_config(const std::string& text) {
    FrameworkConfig c;
    for (const auto& [key, value] : kv::parse_lines(text)) {
        if (key == "learning_rate") c.gbt.learning_rate = kv::to_double(key, value);
        else if (key == "max_depth") c.gbt.max_depth = static_cast<int>(kv::to_int(key, value));
        else if (key == "subsample") c.gbt.subsample = kv::to_double(key, value);
        else if (key == "colsample") c.gbt.colsample = kv::to_double(key, value);
        else if (key == "min_child_weight") c.gbt.min_child_weight = kv::to_double(key, value);
        else if (key == "l1_penalty") c.gbt.l1_penalty = kv::to_double(key, value);
        else if (key == "l2_penalty") c.gbt.l2_penalty = kv::to_double(key, value);
        else if (key == "min_split_loss") c.gbt.min_split_loss = kv::to_double(key, value);
        else if (key == "n_rounds") c.gbt.n_rounds = static_cast<int>(kv::to_int(key, value));
        else if (key == "early_stop_patience") c.gbt.early_stop_patience = static_cast<int>(kv::to_int(key, value));
        else if (key == "rf_n_trees") c.rf.n_trees = static_cast<int>(kv::to_int(key, value));
        else if (key == "rf_max_depth") c.rf.max_depth = static_cast<int>(kv::to_int(key, value));
        else if (key == "rf_min_samples_leaf") c.rf.min_samples_leaf = static_cast<int>(kv::to_int(key, value));
        else if (key == "rf_feature_fraction") c.rf.feature_fraction = kv::to_double(key, value);
        else if (key == "rf_min_peak_rows") c.rf.min_peak_rows = static_cast<int>(kv::to_int(key, value));
        else if (key == "rain_lags") c.windows.rain_lags = static_cast<int>(kv::to_int(key, value));
        else if (key == "q_lags") c.windows.q_lags = static_cast<int>(kv::to_int(key, value));
        else if (key == "q_rollmean_w") c.windows.q_rollmean_w = static_cast<int>(kv::to_int(key, value));
        else if (key == "q_rollstd_w") c.windows.q_rollstd_w = static_cast<int>(kv::to_int(key, value));
        else if (key == "rain_rollmean_w") c.windows.rain_rollmean_w = static_cast<int>(kv::to_int(key, value));
        else if (key == "rain_rollstd_w") c.windows.rain_rollstd_w = static_cast<int>(kv::to_int(key, value));
        else if (key == "peak_quantile") c.peak_quantile = kv::to_double(key, value);
        else if (key == "fusion_weight") c.fusion_weight = kv::to_double(key, value);
        else if (key == "peak_identification") {
            if (value == "forecast") c.peak_identification = PeakIdentification::Forecast;
            else if (value == "observed") c.peak_identification = PeakIdentification::Observed;
            else throw ConfigError("peak_identification: expected 'forecast' or 'observed', got '" + value + "'");
        }
        else if (key == "train_fraction") c.train_fraction = kv::to_double(key, value);
        else if (key == "validation_fraction") c.validation_fraction = kv::to_double(key, value);
        else if (key == "event_max_offset") c.event_max_offset = static_cast<int>(kv::to_int(key, value));
        else if (key == "step_hours") c.step_hours = static_cast<int>(kv::to_int(key, value));
        else if (key == "rng_seed") c.rng_seed = kv::to_uint64(key, value);
        else if (key == "p_high_watts") c.p_high_watts = kv::to_double(key, value);
        else if (key == "p_low_watts") c.p_low_watts = kv::to_double(key, value);
        else if (key == "w_high") c.w_high = kv::to_double(key, value);
        else throw ConfigError("unknown config key '" + key + "'");
    }
    return validate_config(c);
}

FrameworkConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const FrameworkConfig& c) {
    std::ostringstream out;
    out << "learning_rate = " << fmt(c.gbt.learning_rate) << "\n"
        << "max_depth = " << c.gbt.max_depth << "\n"
        << "subsample = " << fmt(c.gbt.subsample) << "\n"
        << "colsample = " << fmt(c.gbt.colsample) << "\n"
        << "min_child_weight = " << fmt(c.gbt.min_child_weight) << "\n"
        << "l1_penalty = " << fmt(c.gbt.l1_penalty) << "\n"
        << "l2_penalty = " << fmt(c.gbt.l2_penalty) << "\n"
        << "min_split_loss = " << fmt(c.gbt.min_split_loss) << "\n"
        << "n_rounds = " << c.gbt.n_rounds << "\n"
        << "early_stop_patience = " << c.gbt.early_stop_patience << "\n"
        << "rf_n_trees = " << c.rf.n_trees << "\n"
        << "rf_max_depth = " << c.rf.max_depth << "\n"
        << "rf_min_samples_leaf = " << c.rf.min_samples_leaf << "\n"
        << "rf_feature_fraction = " << fmt(c.rf.feature_fraction) << "\n"
        << "rf_min_peak_rows = " << c.rf.min_peak_rows << "\n"
        << "rain_lags = " << c.windows.rain_lags << "\n"
        << "q_lags = " << c.windows.q_lags << "\n"
        << "q_rollmean_w = " << c.windows.q_rollmean_w << "\n"
        << "q_rollstd_w = " << c.windows.q_rollstd_w << "\n"
        << "rain_rollmean_w = " << c.windows.rain_rollmean_w << "\n"
        << "rain_rollstd_w = " << c.windows.rain_rollstd_w << "\n"
        << "peak_quantile = " << fmt(c.peak_quantile) << "\n"
        << "fusion_weight = " << fmt(c.fusion_weight) << "\n"
        << "peak_identification = "
        << (c.peak_identification == PeakIdentification::Forecast ? "forecast" : "observed") << "\n"
        << "train_fraction = " << fmt(c.train_fraction) << "\n"
        << "validation_fraction = " << fmt(c.validation_fraction) << "\n"
        << "event_max_offset = " << c.event_max_offset << "\n"
        << "step_hours = " << c.step_hours << "\n"
        << "rng_seed = " << c.rng_seed << "\n"
        << "p_high_watts = " << fmt(c.p_high_watts) << "\n"
        << "p_low_watts = " << fmt(c.p_low_watts) << "\n"
        << "w_high = " << fmt(c.w_high) << "\n";
    return out.str();
}

bool operator==(const FeatureWindows& a, const FeatureWindows& b) {
    return a.rain_lags == b.rain_lags && a.q_lags == b.q_lags &&
           a.q_rollmean_w == b.q_rollmean_w && a.q_rollstd_w == b.q_rollstd_w &&
           a.rain_rollmean_w == b.rain_rollmean_w && a.rain_rollstd_w == b.rain_rollstd_w;
}

bool operator==(const GbtParams& a, const GbtParams& b) {
    return a.learning_rate == b.learning_rate && a.max_depth == b.max_depth &&
           a.subsample == b.subsample && a.colsample == b.colsample &&
           a.min_child_weight == b.min_child_weight && a.l1_penalty == b.l1_penalty &&
           a.l2_penalty == b.l2_penalty && a.min_split_loss == b.min_split_loss &&
           a.n_rounds == b.n_rounds && a.early_stop_patience == b.early_stop_patience;
}

bool operator==(const RfParams& a, const RfParams& b) {
    return a.n_trees == b.n_trees && a.max_depth == b.max_depth &&
           a.min_samples_leaf == b.min_samples_leaf &&
           a.feature_fraction == b.feature_fraction && a.min_peak_rows == b.min_peak_rows;
}

bool operator==(const FrameworkConfig& a, const FrameworkConfig& b) {
    return a.gbt == b.gbt && a.rf == b.rf && a.windows == b.windows &&
           a.peak_quantile == b.peak_quantile && a.fusion_weight == b.fusion_weight &&
           a.peak_identification == b.peak_identification &&
           a.train_fraction == b.train_fraction &&
           a.validation_fraction == b.validation_fraction &&
           a.event_max_offset == b.event_max_offset && a.step_hours == b.step_hours &&
           a.rng_seed == b.rng_seed && a.p_high_watts == b.p_high_watts &&
           a.p_low_watts == b.p_low_watts && a.w_high == b.w_high;
}

}  // namespace floodcast
