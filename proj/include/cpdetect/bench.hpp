#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpdetect/panel.hpp"
#include "cpdetect/screen.hpp"
#include "cpdetect/segment.hpp"

namespace cpdetect {

struct BenchScenario {
    std::string id;
    SimulationScenario panel;
    ScreenMethod screen_method = ScreenMethod::DTCCS;
    ScreeningParams screen_params;
    std::optional<int> keep;                 // SIS/HOLP budget; default NT/log(NT)
    std::vector<PenaltyKind> penalties;      // detection runs, may be empty (screen only)
    DetectParams detect_params;              // kind/a overridden per penalty
    int n_reps = 50;
    std::uint64_t seed = 1;
};

// one replication's outcome for both stages
struct RepRecord {
    int rep = -1;
    bool failed = false;
    std::string error;
    std::vector<int> selected_covariates;    // 1-based
    bool screen_success = false;             // truth subset of selected
    double screen_fdr_rate = 0.0;            // |sel \ truth| / max(1,|sel|)
    bool screen_any_irrelevant = false;      // indicator convention
    int screen_n_true = 0, screen_n_irrelevant = 0;
    // per penalty, aligned with scenario.penalties
    std::vector<std::vector<int>> change_points;
    std::vector<bool> detect_success;
    std::vector<double> detect_fdr_rate;
    std::vector<int> detect_n_true, detect_n_irrelevant;
};

struct MetricsRow {
    std::string scenario_id;
    int n_subjects = 0, n_times = 0, n_covariates = 0;
    std::string stage;    // "screen" | "detect"
    std::string method;   // screening method
    std::string penalty;  // "-" for screen rows
    double tdr = 0.0;
    double fdr = 0.0;     // rate form (primary convention)
    double mean_true = 0.0, sd_true = 0.0;
    double mean_irrelevant = 0.0, sd_irrelevant = 0.0;
    int failed_reps = 0;
    // secondary conventions (raw JSONL carries per-rep values)
    double fdr_indicator = 0.0;
    double mean_irrelevant_t1 = 0.0;  // res_N convention: block t=1 counted
};

struct MetricsTable {
    std::vector<MetricsRow> rows;
    std::vector<std::pair<std::string, std::vector<RepRecord>>> raw;  // per scenario

    // pinned column schema:
    // scenario_id,N,T,p,stage,method,penalty,tdr,fdr,mean_true,sd_true,
    // mean_irrelevant,sd_irrelevant,failed_reps
    std::string to_csv() const;
    std::string raw_jsonl() const;
};

struct ScreenRepMetrics {
    bool success = false;
    double fdr_rate = 0.0;
    bool any_irrelevant = false;
    int n_true = 0;
    int n_irrelevant = 0;
};
ScreenRepMetrics screening_metrics(const std::vector<int>& selected, const std::vector<int>& truth);

struct ChangePointRepMetrics {
    bool success = false;
    double fdr_rate = 0.0;
    int n_true = 0;
    int n_irrelevant = 0;
};
ChangePointRepMetrics changepoint_metrics(const std::vector<int>& detected,
                                          const std::vector<int>& truth);

// runs every (scenario, rep) cell, OpenMP-parallel with per-rep seed
// scenario.seed ^ rep; results are deterministic for any parallelism
MetricsTable run_benchmark(const std::vector<BenchScenario>& grid, int parallelism);

RepRecord run_one_rep(const BenchScenario& sc, int rep);

std::vector<BenchScenario> load_grid_json(const std::string& path);

}  // namespace cpdetect
