#pragma once

#include <cstdint>
#include <string>

#include "floodcast/series.hpp"

namespace floodcast {

// Seeded storm/linear-reservoir generator. Storms arrive as an independent
// Bernoulli process; depths are Pareto distributed (heavy-tailed); storage
// follows S_{t+1} = k*S_t + c*rain_t and discharge is q0 + (1-k)*S_t plus
// optional Gaussian noise, clipped at zero.
struct SynthSpec {
    std::string catchment_id = "synth";
    std::size_t n_steps = 20000;
    std::uint64_t rng_seed = 1;

    double storm_probability = 0.10;  // per step
    double storm_depth_scale = 2.0;   // Pareto minimum, mm
    double storm_tail_alpha = 1.8;    // Pareto shape; smaller = heavier tail
    double recession_k = 0.8;         // per-step storage carryover, in (0,1)
    double runoff_c = 1.0;            // fraction of rain entering storage
    double baseflow_q0 = 2.0;         // m^3/s
    double initial_storage = 0.0;
    double noise_std = 0.0;           // observation noise, m^3/s

    std::int64_t start_timestamp = 1262304000;  // 2010-01-01T00:00:00
    int step_hours = 6;
};

// Throws ConfigError on out-of-range parameters.
SynthSpec validate_spec(const SynthSpec& spec);
SynthSpec parse_synth_spec(const std::string& text);  // flat key = value
SynthSpec load_synth_spec(const std::string& path);

// Deterministic given the seed.
CatchmentSeries generate(const SynthSpec& spec);

// Writes <id>_rain.csv and <id>_q.csv (the ingest schema) into out_dir;
// returns the two paths.
std::pair<std::string, std::string> write_series_csv(const CatchmentSeries& series,
                                                     const std::string& out_dir);

}  // namespace floodcast
