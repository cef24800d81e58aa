#pragma once

namespace floodcast {

// Workload-weighted wall-power model: mean draw is the phase-weighted
// average of high- and low-load power.
struct EnergyModel {
    double p_high_watts = 130.0;
    double p_low_watts = 60.0;
    double w_high = 0.33;
    double w_low = 0.67;

    double mean_power_watts() const {
        return w_high * p_high_watts + w_low * p_low_watts;
    }
};

struct EnergyEstimate {
    double per_task_kwh = 0.0;
    double cumulative_kwh = 0.0;  // linear extrapolation to n_tasks
};

// per_task = mean power * task_seconds / 3.6e6. Throws ConfigError on
// nonpositive duration/count or invalid model (powers <= 0, weights not
// summing to 1).
EnergyEstimate estimate_energy(const EnergyModel& model, double task_seconds,
                               long n_tasks);

}  // namespace floodcast
