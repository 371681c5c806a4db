#ifndef FLATCURVE_EXPERIMENT_HPP
#define FLATCURVE_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flatcurve/centrality.hpp"
#include "flatcurve/curve.hpp"
#include "flatcurve/graph.hpp"

namespace flatcurve {

enum class ModelKind { ba, hk, file };
enum class ScenarioKind { none, fraction, threshold };

std::string to_string(ModelKind m);
std::string to_string(ScenarioKind s);

// Declarative Monte-Carlo experiment. Serialized as JSON with these exact
// field names; see config_from_json.
struct ExperimentConfig {
    ModelKind model = ModelKind::ba;
    NodeId n = 0;
    int m = 0;
    int m0_pa = 0;
    std::string input_path;  // model == file
    std::vector<Measure> measures;
    ScenarioKind scenario = ScenarioKind::none;
    double value = 0.0;  // fraction or threshold
    std::size_t mc_trials = 1;
    std::size_t source_trials = 0;  // 0 = every active node is a source
    std::uint64_t master_seed = 0;
    double kappa = kDefaultKappa;
    double damping = kDefaultDamping;
    bool recompute = false;

    void validate() const;
};

// One measure's isolation outcome within a trial.
struct ScenarioOutcome {
    Measure measure = Measure::degree;
    std::vector<double> curve_before;
    std::vector<double> curve_after;
    std::optional<GammaParams> gamma_before;
    std::optional<GammaParams> gamma_after;
    double peak_drop = 1.0;
    double mean_distance_change = 0.0;
    std::size_t isolated_count = 0;
    std::size_t skipped_count = 0;
    bool threshold_reached = true;
};

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string status = "ok";  // "ok" or "error: ..."
    double gcc1 = 0.0;
    double gcc2 = 0.0;
    int diameter = 0;
    std::vector<double> curve;  // pre-isolation averaged curve
    std::optional<GammaParams> gamma;
    std::vector<ScenarioOutcome> outcomes;  // one per measure when a scenario runs
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrialRecord> records;
    std::size_t failed_trials = 0;
};

// Runs trial `index` in isolation. Every random choice inside the trial
// derives from hash(master_seed, index), so a record can be reproduced
// without running its siblings. All measures of a trial run against the
// same graph, which keeps cross-measure comparisons seed-paired.
TrialRecord run_trial(const ExperimentConfig& cfg, std::size_t index);

// Runs all trials, possibly across workers (0 = FLATCURVE_WORKERS env or
// hardware concurrency). Records are ordered by trial index regardless of
// scheduling, so parallel and serial runs produce identical reports.
ExperimentReport run_experiment(const ExperimentConfig& cfg, std::size_t workers = 0);

nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// Full report including aggregate means/stddevs and trial-averaged curves.
// `generated_at` is the only non-deterministic field.
nlohmann::json report_to_json(const ExperimentReport& rep);

enum class ReportFormat { json, csv };

// CSV rows are flat per (trial, measure): trial, seed, gcc1, gcc2,
// diameter, k_before, theta_before, k_after, theta_after, peak_drop,
// isolated_count, measure. Cells without a value stay empty.
void write_report(const ExperimentReport& rep, const std::string& path, ReportFormat format);

std::size_t default_worker_count();

}  // namespace flatcurve

#endif
