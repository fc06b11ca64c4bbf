#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace indel {

/// q-ary entropy: x log_q(q-1) - x log_q x - (1-x) log_q(1-x) on
/// [0, 1-1/q], and 1 on (1-1/q, 1]. H_q(0) = 0 by the 0 log 0 = 0 convention.
double q_ary_entropy(int q, double x);

/// Linear-programming asymptotic rate bound for binary constant-weight codes:
/// 0 when delta >= 2w(1-w), otherwise
/// H_2( (1/2)(1 - sqrt(1 - (sqrt(4w(1-w) - delta(2-delta)) - delta)^2)) ).
/// Inner radicands are clamped to their mathematical domains; clamping only
/// absorbs round-off at the branch boundary.
double rlp(double delta, double omega);

/// Asymptotic Elias-type rate bound (1 - H_q(delta)) / (1 - delta), clamped
/// below at 0.
double yasunaga_asymptotic(int q, double delta);

/// The function whose infimum over 0 <= sigma < delta, 0 <= omega < 1 gives
/// the LP-based rate bound:
/// ((1-sigma)/(1-omega)) (1 - H_q(omega)
///                        + rlp(2(delta-sigma)(1-omega)/(1-sigma), omega) / log2 q).
/// At (sigma, omega) = (0, delta) this reduces to yasunaga_asymptotic.
double lp_objective(int q, double delta, double sigma, double omega);

struct OptimizerConfig {
    int grid_sigma = 200;
    int grid_omega = 200;
    double arg_tol = 1e-9;       ///< refinement tolerance on sigma, omega
    double value_tol = 1e-10;    ///< value resolution claimed by the optimizer
    double boundary_eps = 1e-9;  ///< exclusion from the open boundaries
};

/// One point of a rate curve: the best objective value found and where.
struct RatePoint {
    double delta = 0;
    int q = 2;
    double value = 0;
    double sigma_opt = 0;
    double omega_opt = 0;
};

/// Upper estimate of the infimum in the LP-based bound: coarse grid over
/// (sigma, omega) with the boundary excluded by epsilon, the exact recovery
/// point (0, delta) seeded in, then coordinate-wise golden-section
/// refinement. Every evaluated point is feasible, so the result is a valid
/// upper bound on the asymptotic rate. Deterministic for a fixed config.
RatePoint lp_asymptotic(int q, double delta, const OptimizerConfig& cfg = {});

/// Derivative of (1 - H_q(w))/(1 - w) at w = delta: the closed form
/// log_q(q delta / (q-1)) / (1-delta)^2 paired with a central
/// finite-difference estimate. Requires 0 < delta < 1 - 1/q; both values are
/// negative there.
std::pair<double, double> entropy_slope_check(int q, double delta);

struct RateCurveRow {
    double delta = 0;
    double yasunaga = 0;
    double lp = 0;
    double sigma_opt = 0;
    double omega_opt = 0;
};

/// Per-delta evaluation of both asymptotic bounds, sorted by delta.
std::vector<RateCurveRow> rate_curve(int q, std::vector<double> deltas,
                                     const OptimizerConfig& cfg = {});

/// CSV with header `delta,yasunaga,lp,sigma_opt,omega_opt` and 12 significant
/// digits per value.
void write_rate_curve_csv(std::ostream& os, const std::vector<RateCurveRow>& rows);

} // namespace indel
