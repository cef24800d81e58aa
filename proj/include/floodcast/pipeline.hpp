#pragma once

#include <string>
#include <vector>

#include "floodcast/config.hpp"
#include "floodcast/verify.hpp"

namespace floodcast {

struct ManifestEntry {
    std::string catchment_id;
    std::string rain_path;
    std::string q_path;
};

// CSV "catchment_id,rain_path,q_path" with header; relative paths resolve
// against the manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::string& path);

enum class TaskStatus { Ok, PeakModelFallback, Failed };

struct TaskResult {
    std::string catchment_id;
    TaskStatus status = TaskStatus::Failed;
    std::string failure_stage;    // set when status == Failed
    std::string failure_message;
    double wall_seconds = 0.0;

    std::string forecast_csv;
    std::string gbt_model_path;
    std::string rf_model_path;    // empty on fallback
    std::string report_path;

    VerificationReport report;    // fused forecast vs observations (test block)
    double threshold = 0.0;
};

// Full per-catchment workflow: ingest -> split -> features -> threshold ->
// fit models -> predict -> fuse -> verify -> persist under out_dir/<id>/.
// Stage errors are captured into the result, never thrown. Artifacts are
// deterministic given inputs and config (timings stay out of them).
TaskResult run_catchment(const ManifestEntry& entry, const FrameworkConfig& config,
                         const std::string& out_dir);

struct BatchResult {
    std::vector<TaskResult> tasks;      // manifest order
    ContingencyTable aggregate;         // over non-failed tasks, id order
    BinaryMetrics aggregate_binary;
    std::size_t n_ok = 0;
    std::size_t n_fallback = 0;
    std::size_t n_failed = 0;
};

// Independent per-catchment tasks over a bounded worker pool. One bad
// catchment never aborts the batch. Writes aggregate_report.json,
// aggregate_contingency.csv and batch_summary.csv into out_dir.
// Throws DataError on an empty manifest.
BatchResult run_batch(const std::vector<ManifestEntry>& manifest,
                      const FrameworkConfig& config, const std::string& out_dir,
                      int workers);

// Per-catchment seed: derived from the config seed and the catchment id so
// results are independent of batch composition.
std::uint64_t catchment_seed(const FrameworkConfig& config, const std::string& id);

}  // namespace floodcast
