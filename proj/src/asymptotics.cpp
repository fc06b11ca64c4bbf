#include "indel/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace indel {

namespace {

void require_q(int q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
}

// minimizes f over [a, b] by golden-section search down to arg tolerance
template <typename F>
double golden_min(F&& f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double q_ary_entropy(int q, double x) {
    require_q(q);
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("q_ary_entropy: x must be in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x > 1.0 - 1.0 / q) return 1.0;
    const double lq = std::log(static_cast<double>(q));
    return (x * std::log(static_cast<double>(q - 1)) - x * std::log(x) -
            (1.0 - x) * std::log1p(-x)) /
           lq;
}

double rlp(double delta, double omega) {
    if (delta < 0.0 || delta > 1.0 || omega < 0.0 || omega > 1.0)
        throw std::invalid_argument("rlp: arguments must be in [0, 1]");
    const double boundary = 2.0 * omega * (1.0 - omega);
    if (delta >= boundary) return 0.0;
    double inner_rad = 4.0 * omega * (1.0 - omega) - delta * (2.0 - delta);
    inner_rad = std::max(inner_rad, 0.0);
    const double inner = std::sqrt(inner_rad) - delta;
    double outer_rad = 1.0 - inner * inner;
    outer_rad = std::clamp(outer_rad, 0.0, 1.0);
    const double x = 0.5 * (1.0 - std::sqrt(outer_rad));
    return q_ary_entropy(2, x);
}

double yasunaga_asymptotic(int q, double delta) {
    require_q(q);
    if (delta <= 0.0 || delta >= 1.0)
        throw std::invalid_argument("yasunaga_asymptotic: delta must be in (0, 1)");
    return std::max(0.0, (1.0 - q_ary_entropy(q, delta)) / (1.0 - delta));
}

double lp_objective(int q, double delta, double sigma, double omega) {
    require_q(q);
    if (!(0.0 <= sigma && sigma < delta && delta < 1.0))
        throw std::invalid_argument("lp_objective: need 0 <= sigma < delta < 1");
    if (!(0.0 <= omega && omega < 1.0))
        throw std::invalid_argument("lp_objective: need 0 <= omega < 1");
    const double lp_arg = 2.0 * (delta - sigma) * (1.0 - omega) / (1.0 - sigma);
    return (1.0 - sigma) / (1.0 - omega) *
           (1.0 - q_ary_entropy(q, omega) +
            rlp(std::min(lp_arg, 1.0), omega) / std::log2(static_cast<double>(q)));
}

RatePoint lp_asymptotic(int q, double delta, const OptimizerConfig& cfg) {
    require_q(q);
    if (delta <= 0.0 || delta >= 1.0)
        throw std::invalid_argument("lp_asymptotic: delta must be in (0, 1)");

    const double eps = cfg.boundary_eps;
    const double sigma_hi = std::max(0.0, delta - eps);
    const double omega_hi = 1.0 - eps;

    // seed with the exact recovery point (0, delta)
    double best_v = lp_objective(q, delta, 0.0, delta);
    double best_s = 0.0, best_w = delta;
    auto consider = [&](double s, double w) {
        const double v = lp_objective(q, delta, s, w);
        if (v < best_v) {
            best_v = v;
            best_s = s;
            best_w = w;
        }
    };

    const int ns = std::max(1, cfg.grid_sigma);
    const int nw = std::max(2, cfg.grid_omega);
    const double step_s = ns > 1 ? sigma_hi / (ns - 1) : 0.0;
    const double step_w = omega_hi / (nw - 1);
    for (int i = 0; i < ns; ++i) {
        const double s = ns > 1 ? i * step_s : 0.0;
        for (int j = 0; j < nw; ++j) consider(s, j * step_w);
    }

    // coordinate-wise golden-section refinement around the grid argmin
    for (int pass = 0; pass < 40; ++pass) {
        const double s_prev = best_s, w_prev = best_w;
        if (sigma_hi > 0.0) {
            const double lo = std::max(0.0, best_s - step_s);
            const double hi = std::min(sigma_hi, best_s + step_s);
            const double s = golden_min(
                [&](double x) { return lp_objective(q, delta, x, best_w); }, lo, hi,
                cfg.arg_tol);
            consider(s, best_w);
        }
        {
            const double lo = std::max(0.0, best_w - step_w);
            const double hi = std::min(omega_hi, best_w + step_w);
            const double w = golden_min(
                [&](double x) { return lp_objective(q, delta, best_s, x); }, lo, hi,
                cfg.arg_tol);
            consider(best_s, w);
        }
        if (std::abs(best_s - s_prev) < cfg.arg_tol &&
            std::abs(best_w - w_prev) < cfg.arg_tol)
            break;
    }

    RatePoint point;
    point.delta = delta;
    point.q = q;
    point.value = std::clamp(best_v, 0.0, 1.0);
    point.sigma_opt = best_s;
    point.omega_opt = best_w;
    return point;
}

std::pair<double, double> entropy_slope_check(int q, double delta) {
    require_q(q);
    const double plateau = 1.0 - 1.0 / q;
    if (!(0.0 < delta && delta < plateau))
        throw std::invalid_argument("entropy_slope_check: need 0 < delta < 1 - 1/q");
    const double analytic =
        std::log(q * delta / (q - 1.0)) / std::log(static_cast<double>(q)) /
        ((1.0 - delta) * (1.0 - delta));
    const double h = std::min({1e-5, delta / 2.0, (plateau - delta) / 2.0});
    auto f = [&](double w) { return (1.0 - q_ary_entropy(q, w)) / (1.0 - w); };
    const double numeric = (f(delta + h) - f(delta - h)) / (2.0 * h);
    return {analytic, numeric};
}

std::vector<RateCurveRow> rate_curve(int q, std::vector<double> deltas,
                                     const OptimizerConfig& cfg) {
    std::sort(deltas.begin(), deltas.end());
    std::vector<RateCurveRow> rows;
    rows.reserve(deltas.size());
    for (double delta : deltas) {
        const RatePoint p = lp_asymptotic(q, delta, cfg);
        rows.push_back(RateCurveRow{delta, yasunaga_asymptotic(q, delta), p.value,
                                    p.sigma_opt, p.omega_opt});
    }
    return rows;
}

void write_rate_curve_csv(std::ostream& os, const std::vector<RateCurveRow>& rows) {
    os << "delta,yasunaga,lp,sigma_opt,omega_opt\n";
    char buf[160];
    for (const RateCurveRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g", r.delta,
                      r.yasunaga, r.lp, r.sigma_opt, r.omega_opt);
        os << buf << '\n';
    }
}

} // namespace indel
