#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace cpdetect {

// Balanced panel: N subjects observed at T common time points with p covariates.
// Raw values as loaded or simulated, before any standardization.
struct PanelDataset {
    int n_subjects = 0;   // N
    int n_times = 0;      // T
    int n_covariates = 0; // p
    Eigen::MatrixXd y;    // N x T, y(i,t)
    Eigen::MatrixXd x;    // (N*T) x p, row i*T + t  (subject-major raw layout)
    std::vector<std::string> subject_ids;
    std::vector<std::string> time_ids;  // ascending

    int raw_row(int subject, int time) const { return subject * n_times + time; }

    // validates shape bounds and finiteness, throws InvalidInput
    void validate() const;
};

// Centered/standardized stacked form of a panel. Rows are time-major:
// stacked row t*N + i, so the time-t block occupies rows [t*N, (t+1)*N).
struct StackedDesign {
    int n_subjects = 0;
    int n_times = 0;
    Eigen::VectorXd y_stacked;       // NT
    Eigen::MatrixXd x_stacked;       // NT x p, columns mean 0 and norm sqrt(NT)
    Eigen::VectorXd col_means;       // p
    Eigen::VectorXd col_scales;      // p; 0 marks a dropped (constant) column
    Eigen::VectorXd subject_means_y; // N
    std::vector<int> dropped_columns;

    int rows() const { return static_cast<int>(y_stacked.size()); }
    int cols() const { return static_cast<int>(x_stacked.cols()); }
    int row_of(int subject, int time) const { return time * n_subjects + subject; }
};

struct SimulationScenario {
    int n_subjects = 20;
    int n_times = 20;
    int n_covariates = 30;
    double signal_high = 7.0;
    double signal_low = 2.0;
    double signal_const = 5.0;
    double noise_sd = 1.0;
    std::uint64_t seed = 1;
};

struct GroundTruth {
    std::vector<int> true_covariates;    // 1-based covariate indices
    std::vector<int> true_change_points; // 1-based times, subset of {2..T}
    std::uint64_t seed = 0;
};

// beta(t,j) schedule of the synthetic design: covariates 1,2 switch low->high
// at floor(T/2)+1; covariates 3,4 go low->high->low at floor(T/3)+1 and
// floor(2T/3)+1; covariates 5,6 stay constant; the rest are zero.
Eigen::MatrixXd coefficient_schedule(int n_times, int n_covariates, double hi, double lo, double cst);
std::vector<int> schedule_change_points(int n_times);

PanelDataset simulate_panel(const SimulationScenario& sc, GroundTruth* truth = nullptr);

StackedDesign standardize_and_stack(const PanelDataset& data);

// CSV schema: header "subject,time,y,x1,...,xp", one observation per line,
// decimal ASCII with 17 significant digits on write.
PanelDataset load_panel_csv(const std::string& path);
void write_panel_csv(const PanelDataset& data, const std::string& path);

void write_ground_truth_json(const GroundTruth& truth, const std::string& path);

}  // namespace cpdetect
