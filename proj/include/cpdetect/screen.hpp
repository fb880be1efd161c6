#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cpdetect/panel.hpp"

namespace cpdetect {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ScreenMethod { DTCCS, SIS, HOLP };

enum class TiltRoute { Auto, Primal, Dual };

struct ScreeningParams {
    std::optional<int> pick_per_iter;   // d; auto = max(1, NT/(2K))
    std::optional<double> omega;        // sugar: d = floor(omega*NT)
    int max_iters = 10;                 // K
    std::optional<int> cap_m;           // auto = max(d, floor(min(sqrt(p/NT)*K*log(NT), NT-1)))
    std::optional<std::vector<double>> lambda0_schedule; // explicit, else knot rule
    double ridge_active = 1.0;          // lambda0' for the current-residual ridge fit
    std::optional<double> gic_hn;       // auto = log(p)/NT
    TiltRoute route = TiltRoute::Auto;

    int resolve_d(int nt) const;
    int resolve_cap(int nt, int p) const;
    double resolve_hn(int nt, int p) const;
    void validate() const;  // throws InvalidInput
};

struct ScreeningIteration {
    std::vector<int> picked;    // 0-based covariate indices, rank order
    double lambda0 = kInf;
    double gic = 0.0;           // cumulative active set after this iteration
    double gic_delta = 0.0;     // vs previous iteration
};

struct ScreeningResult {
    std::vector<int> active;                   // 0-based, selection order, no duplicates
    std::vector<ScreeningIteration> per_iter;
    std::vector<Eigen::VectorXd> hdce_trace;   // per iteration: p-vector, NaN for already-active
    ScreenMethod method = ScreenMethod::DTCCS;
    bool ridge_jitter = false;                 // HOLP fallback applied
    int d_used = 0;
    int cap_used = 0;
    double hn_used = 0.0;
};

// (I - H_j) v with H_j the ridge hat matrix of column j regressed on the
// remaining columns, Eq-style H_j = X_{-j}(X_{-j}' X_{-j} + lambda0 I)^{-1} X_{-j}'.
// Primal route solves the (p-1)-dimensional system; dual route works on the
// NT x NT Gram with a rank-one downdate. lambda0 = +inf returns v unchanged.
Eigen::VectorXd tilt_residualize(const StackedDesign& design, int j, double lambda0,
                                 const Eigen::VectorXd& v, TiltRoute route = TiltRoute::Auto);

// normalized tilted correlation rho_j = X_j'(I-H_j)z / (||(I-H_j)X_j|| * ||z||);
// 0 when either norm vanishes. Bounded by 1 in magnitude.
double hdce(const StackedDesign& design, int j, const Eigen::VectorXd& z, double lambda0,
            TiltRoute route = TiltRoute::Auto);

// all-column HDCE scan sharing the factorization; entries for active columns
// are NaN. OpenMP-parallel over j; deterministic for any thread count.
Eigen::VectorXd hdce_scan(const StackedDesign& design, const Eigen::VectorXd& z, double lambda0,
                          const std::vector<bool>& is_active, TiltRoute route = TiltRoute::Auto);

// residual of Y after ridge regression on the active columns; Y itself when empty
Eigen::VectorXd current_residual(const StackedDesign& design, const std::vector<int>& active,
                                 double ridge_active);

// knot rule: k=1 -> +inf; k>=2 -> square of the k-th largest |X_j' z| over inactive j
double lambda0_knots(const StackedDesign& design, const Eigen::VectorXd& z, int k,
                     const std::vector<int>& active);

// log(RSS/NT) + |active| * hn, least-squares RSS (ridge fallback when collinear)
double gic_score(const StackedDesign& design, const std::vector<int>& active, double hn,
                 double ridge_active = 1.0);

ScreeningResult dtccs_screen(const StackedDesign& design, const ScreeningParams& params);

// marginal |X_j' Y| ranking; keep <= 0 means the default floor(NT/log(NT))
ScreeningResult sis_screen(const StackedDesign& design, int keep = 0);

// minimum-norm interpolator ranking |X'(XX')^{-1} Y|; singular Gram falls back
// to a recorded ridge jitter 1e-8 * trace/NT
ScreeningResult holp_screen(const StackedDesign& design, int keep = 0);

int default_keep(int nt);

std::string to_string(ScreenMethod m);
ScreenMethod screen_method_from_string(const std::string& s);

}  // namespace cpdetect
