#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "floodcast/peaks.hpp"
#include "json.hpp"

namespace floodcast {

// Per-time-step 2x2 contingency counts. Tables add component-wise.
struct ContingencyTable {
    std::int64_t hits = 0;
    std::int64_t false_alarms = 0;
    std::int64_t misses = 0;
    std::int64_t true_negatives = 0;

    std::int64_t total() const { return hits + false_alarms + misses + true_negatives; }

    ContingencyTable& operator+=(const ContingencyTable& other) {
        hits += other.hits;
        false_alarms += other.false_alarms;
        misses += other.misses;
        true_negatives += other.true_negatives;
        return *this;
    }
    friend ContingencyTable operator+(ContingencyTable a, const ContingencyTable& b) {
        a += b;
        return a;
    }
};

// Binary verification scores. A metric whose precondition fails (e.g. no
// forecast events for SR) is nullopt, never a silent zero.
struct BinaryMetrics {
    std::optional<double> pod;   // H/(H+M)
    std::optional<double> sr;    // H/(H+FA)
    std::optional<double> far;   // FA/(H+FA)
    std::optional<double> pofd;  // FA/(FA+TN)
    std::optional<double> fb;    // (H+FA)/(H+M)
    std::optional<double> fc;    // (H+TN)/N
    std::optional<double> csi;   // H/(H+M+FA)
    std::optional<double> ets;   // (H-Hr)/(H+M+FA-Hr), Hr = (H+M)(H+FA)/N
    std::optional<double> pss;   // POD - POFD
};

struct KgeResult {
    double kge = 0.0;
    double r = 0.0;
    double beta = 0.0;   // mean ratio sim/obs
    double gamma = 0.0;  // CV ratio (kge) or std ratio (kge_mod)
};

struct ContinuousMetrics {
    double mae = 0.0;
    double mse = 0.0;
    double rmse = 0.0;
    double me = 0.0;
    std::optional<double> r;  // undefined when either series is constant
    double var_e = 0.0;       // population variance of sim-obs
    double sd_e = 0.0;
    double mse_mean_bias2 = 0.0;        // (mean error)^2
    double mse_second_order_bias = 0.0; // (sd(sim)-sd(obs))^2, population sd
};

// 1 - sum((sim-obs)^2) / sum((obs-mean(obs))^2).
// Throws DegenerateInputError when the observations are constant.
double nse(std::span<const double> sim, std::span<const double> obs);

// KGE = 1 - sqrt((r-1)^2 + (beta-1)^2 + (gamma-1)^2), gamma = CV_s/CV_o.
// Throws DegenerateInputError on zero std or zero mean in either series.
KgeResult kge(std::span<const double> sim, std::span<const double> obs);

// Modified variant: gamma' = sigma_s/sigma_o.
KgeResult kge_mod(std::span<const double> sim, std::span<const double> obs);

struct RpeResult {
    double signed_rpe = 0.0;
    double abs_rpe = 0.0;
};

// (sim_peak - obs_peak) / obs_peak for one matched event pair.
// Throws DegenerateInputError when obs_peak is zero.
RpeResult rpe(double sim_peak, double obs_peak);

// Forecast apex index - observed apex index per matched pair, in steps.
std::vector<int> peak_timing_errors(const MatchResult& matches);

// e = sim - obs; population moments throughout, so the decomposition
// MSE = (mu_s-mu_o)^2 + (sd_s-sd_o)^2 + 2*sd_s*sd_o*(1-r) holds exactly.
// Throws DataError for length < 2 or mismatched lengths.
ContinuousMetrics continuous_metrics(std::span<const double> sim,
                                     std::span<const double> obs);

BinaryMetrics binary_metrics(const ContingencyTable& table);

// Per-step counts from exceedance flag vectors of equal length.
ContingencyTable build_contingency(std::span<const std::uint8_t> obs_flags,
                                   std::span<const std::uint8_t> fc_flags);

// Everything above for one forecast/observation pair at one threshold.
struct VerificationReport {
    std::optional<double> nse;
    std::optional<KgeResult> kge;
    std::optional<KgeResult> kge_mod;
    ContinuousMetrics continuous;
    ContingencyTable contingency;
    BinaryMetrics binary;

    double threshold = 0.0;
    std::vector<double> event_rpe;       // signed, per matched event
    std::vector<double> event_abs_rpe;
    std::vector<int> event_timing;       // steps, per matched event
    std::size_t n_observed_events = 0;
    std::size_t n_forecast_events = 0;
    std::size_t n_matched_events = 0;
};

VerificationReport make_report(std::span<const double> sim, std::span<const double> obs,
                               double threshold, int max_offset);

nlohmann::json report_to_json(const VerificationReport& report);

// Aggregate CSV in the 2x2 layout: observed yes/no columns, forecast yes/no rows.
void write_contingency_csv(const ContingencyTable& table, const std::string& path);

}  // namespace floodcast
