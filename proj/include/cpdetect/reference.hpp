#pragma once

// Serial reference implementations used by the test suites and the kernel
// benchmark. Everything here evaluates the textbook formula directly (explicit
// inverses, dense matrices, quadrature, exhaustive search) and stays
// independent of the production code paths it checks.

#include <Eigen/Dense>
#include <vector>

#include "cpdetect/panel.hpp"
#include "cpdetect/segment.hpp"

namespace cpdetect::reference {

// (I - H_j) v via the explicit (p-1)x(p-1) inverse
Eigen::VectorXd tilt_primal_explicit(const Eigen::MatrixXd& x, int j, double lambda0,
                                     const Eigen::VectorXd& v);

// (I - H_j) v via the NT x NT dual form with the deleted-column Gram rebuilt
// from scratch
Eigen::VectorXd tilt_dual_scratch(const Eigen::MatrixXd& x, int j, double lambda0,
                                  const Eigen::VectorXd& v);

double hdce_explicit(const Eigen::MatrixXd& x, int j, const Eigen::VectorXd& z, double lambda0);

// serial HDCE scan over all columns (marginal correlation when lambda0 = inf)
Eigen::VectorXd hdce_scan_serial(const Eigen::MatrixXd& x, const Eigen::VectorXd& z,
                                 double lambda0);

// serial Gram X X'
Eigen::MatrixXd gram_serial(const Eigen::MatrixXd& x);

// ridge coefficients by explicitly formed normal equations
Eigen::VectorXd ridge_normal_equations(const Eigen::MatrixXd& xa, const Eigen::VectorXd& y,
                                       double lambda);

// Moore-Penrose pseudo-inverse solve via SVD: X^+ y
Eigen::VectorXd pinv_solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

// two-pass column standard deviations, denominator n (population convention)
Eigen::VectorXd two_pass_col_sd(const Eigen::MatrixXd& x);

// dense block lower-triangular A of identity blocks, (Tm) x (Tm)
Eigen::MatrixXd dense_cumulative_operator(int n_times, int group_size);

// adaptive Simpson quadrature of the SCAD/MCP integral definitions
double penalty_quadrature(PenaltyKind kind, double lambda, double a, double x);

// per-time OLS with intercept: returns coefficient vector for one time block
Eigen::VectorXd ols_per_time(const Eigen::MatrixXd& x_t, const Eigen::VectorXd& y_t,
                             Eigen::VectorXd* std_errors = nullptr);

// brute-force 1-d proximal minimum on a dense grid
double prox_grid_min(PenaltyKind kind, double lambda, double a, double nu, double znorm,
                     double hi, double step);

// hierarchical grid search for the T=3, m=1 GCD objective; returns best theta
// and its objective value
struct GridSearchResult {
    Eigen::Vector3d theta;
    double objective;
};
GridSearchResult gcd_grid_oracle(const CumulativeDesign& cd, const Eigen::VectorXd& y,
                                 const PenaltySpec& spec, double lo, double hi);

// objective of Eq-(9) form evaluated directly from dense matrices
double objective_dense(const CumulativeDesign& cd, const Eigen::VectorXd& y,
                       const PenaltySpec& spec, const Eigen::MatrixXd& theta);

}  // namespace cpdetect::reference
