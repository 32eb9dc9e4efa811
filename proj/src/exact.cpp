#include "rkdg/exact.hpp"

#include <cmath>
#include <string>

#include "rkdg/errors.hpp"

namespace rkdg {

namespace {
constexpr int n_samples = 10000;
constexpr double newton_tol = 1e-13;
constexpr int max_iter = 100;
}  // namespace

ExactOracle::ExactOracle(const ProblemSpec& problem) : problem_(problem) {
    // Sample g(x) = f'(u_I(x)); the first crossing of characteristics is
    // t* = -1 / min g', estimated from adjacent differences.
    double dx = (problem_.b - problem_.a) / n_samples;
    double min_slope = 0.0;
    double prev = problem_.flux.f1(problem_.initial(problem_.a));
    fp_min_ = fp_max_ = prev;
    for (int i = 1; i <= n_samples; ++i) {
        double g = problem_.flux.f1(problem_.initial(problem_.a + i * dx));
        min_slope = std::min(min_slope, (g - prev) / dx);
        fp_min_ = std::min(fp_min_, g);
        fp_max_ = std::max(fp_max_, g);
        prev = g;
    }
    if (min_slope < 0.0) t_star_ = -1.0 / min_slope;
}

double ExactOracle::interior_foot(double t, double x, double lo, double hi) const {
    auto residual = [&](double x0) {
        return x0 + t * problem_.flux.f1(problem_.initial(x0)) - x;
    };
    double rlo = residual(lo), rhi = residual(hi);
    if (rlo > 0.0 || rhi < 0.0)
        throw OracleError("characteristic foot not bracketed at t=" + std::to_string(t) +
                          ", x=" + std::to_string(x));
    // Newton safeguarded by the bracket; the residual derivative is taken
    // by a centered difference since the datum is supplied as a callable.
    double x0 = 0.5 * (lo + hi);
    double scale = 1.0 + std::abs(x);
    for (int it = 0; it < max_iter; ++it) {
        double r = residual(x0);
        if (std::abs(r) <= newton_tol * scale) return x0;
        (r > 0.0 ? hi : lo) = x0;
        double eps = 1e-7 * (1.0 + std::abs(x0));
        double dr = (residual(x0 + eps) - residual(x0 - eps)) / (2.0 * eps);
        double next = dr != 0.0 ? x0 - r / dr : x0;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (hi - lo < 1e-16 * scale) return 0.5 * (lo + hi);
        x0 = next;
    }
    return x0;
}

double ExactOracle::boundary_value(double t, double x) const {
    if (problem_.bc.periodic())
        throw OracleError("boundary branch queried on a periodic problem");
    auto phi = [&](double s) {
        return problem_.a + (t - s) * problem_.flux.f1(problem_.bc.uL(s)) - x;
    };
    double lo = 0.0, hi = t;
    double plo = phi(lo), phi_hi = phi(hi);
    if (plo < 0.0 || phi_hi > 0.0)
        throw OracleError("boundary characteristic not bracketed at t=" +
                          std::to_string(t) + ", x=" + std::to_string(x));
    double scale = 1.0 + std::abs(x);
    double s = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        double r = phi(s);
        if (std::abs(r) <= 1e-15 * scale || hi - lo < 1e-16 * (1.0 + t)) break;
        (r > 0.0 ? lo : hi) = s;
        double eps = 1e-7 * (1.0 + std::abs(s));
        double upper = std::min(s + eps, t);
        double lower = std::max(s - eps, 0.0);
        double dr = (phi(upper) - phi(lower)) / (upper - lower);
        double next = dr != 0.0 ? s - r / dr : s;
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        s = next;
    }
    return problem_.bc.uL(s);
}

double ExactOracle::value(double t, double x) const {
    if (t < 0.0) throw OracleError("oracle queried at negative time");
    if (!(t < t_star_))
        throw OracleError("pre-shock oracle invalid beyond t*=" + std::to_string(t_star_));
    if (t == 0.0) return problem_.initial(x);

    if (problem_.bc.periodic()) {
        // The datum must be (b-a)-periodic; the foot may land outside the
        // domain and is evaluated directly.
        double lo = x - t * fp_max_ - 1e-9 * (1.0 + std::abs(x));
        double hi = x - t * fp_min_ + 1e-9 * (1.0 + std::abs(x));
        return problem_.initial(interior_foot(t, x, lo, hi));
    }
    // Inflow problem: if the foot would land left of the boundary the point
    // is fed by boundary data instead.
    auto residual_at_a = problem_.a + t * problem_.flux.f1(problem_.initial(problem_.a)) - x;
    if (residual_at_a > 0.0) return boundary_value(t, x);
    return problem_.initial(interior_foot(t, x, problem_.a, x));
}

}  // namespace rkdg
