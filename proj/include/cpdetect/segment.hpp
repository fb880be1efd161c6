#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "cpdetect/panel.hpp"

namespace cpdetect {

// Cumulative re-parameterization theta_1 = beta_1, theta_t = beta_t - beta_{t-1}.
// The stacked design X* = X A (A lower-triangular of identity blocks) is never
// materialized; apply/adjoint run through prefix/suffix sums over time blocks.
class CumulativeDesign {
  public:
    CumulativeDesign(const StackedDesign& design, const std::vector<int>& active);

    int n_per_time() const { return n_; }
    int n_times() const { return t_; }
    int group_size() const { return m_; }
    const Eigen::MatrixXd& block(int t) const { return blocks_[t]; }
    const Eigen::MatrixXd& time_gram(int t) const { return time_gram_[t]; }
    const Eigen::MatrixXd& suffix_gram(int t) const { return suffix_gram_[t]; }
    double block_curvature(int t) const { return nu_[t]; }  // (2/NT) * lambda_max(suffix_gram)
    const std::vector<int>& active() const { return active_; }
    bool underdetermined() const { return m_ * t_ >= n_ * t_; }

    // X* theta; theta is T blocks of length m stacked
    Eigen::VectorXd apply(const Eigen::VectorXd& theta) const;
    // X*' v
    Eigen::VectorXd adjoint(const Eigen::VectorXd& v) const;

  private:
    int n_ = 0, t_ = 0, m_ = 0;
    std::vector<int> active_;
    std::vector<Eigen::MatrixXd> blocks_;       // N x m per time
    std::vector<Eigen::MatrixXd> time_gram_;    // X_t' X_t
    std::vector<Eigen::MatrixXd> suffix_gram_;  // sum_{s>=t} X_s' X_s
    std::vector<double> nu_;
};

enum class PenaltyKind { GroupLasso, GroupSCAD, GroupMCP };

struct PenaltySpec {
    PenaltyKind kind = PenaltyKind::GroupMCP;
    double lambda1 = 0.0;
    double a = 3.0;  // SCAD default 3.7 (a > 2), MCP default 3 (a > 1)
    bool penalize_first_block = false;

    PenaltySpec() = default;
    PenaltySpec(PenaltyKind k, double lambda, double a_param, bool pen_first = false);

    static double default_a(PenaltyKind k) { return k == PenaltyKind::GroupSCAD ? 3.7 : 3.0; }
};

// closed-form penalty value at x >= 0
double penalty_value(const PenaltySpec& spec, double x);

// argmin over theta of (nu/2)||theta - z||^2 + p1(||theta||_2; lambda, a),
// by exact comparison of the piecewise scalar candidates along z/||z||
Eigen::VectorXd group_threshold(const PenaltySpec& spec, const Eigen::VectorXd& z,
                                double step_curvature);

struct GroupFit {
    Eigen::MatrixXd theta;              // T x m, row t = theta_t
    std::vector<double> objective_trace; // per sweep, non-increasing
    double lambda1 = 0.0;
    bool converged = false;
    int n_sweeps = 0;
    double ebic = 0.0;
    double rss = 0.0;                   // fit residual sum of squares
};

GroupFit group_coordinate_descent(const CumulativeDesign& cd, const Eigen::VectorXd& y,
                                  const PenaltySpec& spec,
                                  const Eigen::MatrixXd* init = nullptr,
                                  double tol = 1e-7, int max_sweeps = 10000);

// geometric grid from lambda_max (all penalized blocks zero) down to
// lambda_max * min_ratio
std::vector<double> lambda_path(const CumulativeDesign& cd, const Eigen::VectorXd& y,
                                int n_points = 50, double min_ratio = 1e-3,
                                bool penalize_first_block = false);

// extended BIC of the fit's support: NT log(RSS/NT) + df log(NT) + 2 gamma df log(T)
// with df = m * (#nonzero blocks including block 1) and RSS from the unpenalized
// least-squares refit on that support. Exact-fit supports return -inf (overfit
// sentinel, excluded from path selection).
double ebic(const GroupFit& fit, const CumulativeDesign& cd, const Eigen::VectorXd& y,
            double gamma = 0.5, double zero_tol = 1e-6);

struct RefitResult {
    Eigen::MatrixXd theta;   // T x m, zero off-support
    Eigen::MatrixXd beta;    // T x m cumulative sums
    double rss = 0.0;
    bool ridge_fallback = false;  // RidgeFallbackWarning
};

// oracle least squares on blocks {1} union S; all other blocks exactly zero
RefitResult post_select_refit(const CumulativeDesign& cd, const Eigen::VectorXd& y,
                              const std::vector<int>& change_points);

struct DetectParams {
    PenaltyKind kind = PenaltyKind::GroupMCP;
    double a = 3.0;
    bool penalize_first_block = false;
    int n_lambdas = 50;
    double min_ratio = 1e-3;
    double gamma = 0.5;      // eBIC
    double zero_tol = 1e-6;  // relative support threshold
    double tol = 1e-7;
    int max_sweeps = 10000;
};

struct ChangePointResult {
    std::vector<int> change_points;     // 1-based times, subset of {2..T}
    Eigen::MatrixXd theta_refit;        // T x m
    Eigen::MatrixXd beta_path;          // T x m, beta_t = sum_{s<=t} theta_s
    double selected_lambda1 = 0.0;
    std::vector<double> ebic_curve;     // one entry per lambda, -inf marks overfit
    std::vector<double> lambdas;
    bool ridge_fallback = false;
    int n_overfit_skipped = 0;
};

ChangePointResult detect_change_points(const CumulativeDesign& cd, const Eigen::VectorXd& y,
                                       const DetectParams& params);

// support of a fitted theta under the relative threshold; 1-based, t >= 2
std::vector<int> extract_support(const Eigen::MatrixXd& theta, double zero_tol);

std::string to_string(PenaltyKind k);
PenaltyKind penalty_from_string(const std::string& s);

}  // namespace cpdetect
