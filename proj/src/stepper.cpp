#include "rkdg/stepper.hpp"

#include <cmath>
#include <string>

#include "rkdg/errors.hpp"
#include "rkdg/operator.hpp"

namespace rkdg {

namespace {

// SSP convex-combination weights as rationals; each stage must mix the
// previous states with weights summing to one.
struct Rational {
    long num, den;
    double value() const { return static_cast<double>(num) / den; }
};
static_assert(3 + 1 == 4, "rk3 stage two weights 3/4 + 1/4 must sum to 1");
static_assert(1 + 2 == 3, "rk3 stage three weights 1/3 + 2/3 must sum to 1");
static_assert(1 + 1 == 2, "rk2 weights 1/2 + 1/2 must sum to 1");

constexpr Rational r34{3, 4}, r14{1, 4}, r13{1, 3}, r23{2, 3}, r12{1, 2};

void check_finite(const Field& f, int stage) {
    for (double v : f)
        if (!std::isfinite(v))
            throw BlowupError("non-finite state at RK stage " + std::to_string(stage));
}

Field rhs(const DGSolution& u, const FluxModel& flux, const BoundaryModel& bc,
          double t) {
    return mass_solve(apply_H(u, flux, bc, t), u.mesh);
}

DGSolution combine(const DGSolution& a, double wa, const DGSolution& b, double wb,
                   const Field& L, double tauw) {
    DGSolution out = b;
    for (size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = wa * a.c[i] + wb * b.c[i] + tauw * L[i];
    return out;
}

}  // namespace

double RunConfig::effective_gamma() const {
    if (gamma > 0.0) return gamma;
    if (mode == CflMode::fixed && tau_fixed > 0.0)
        return tau_fixed / std::pow(h, 1.0 + alpha());
    throw ConfigError("gamma must be set for automatic step selection");
}

void RunConfig::validate() const {
    if (p < 1 || p > 10) throw ConfigError("p must lie in 1..10");
    if (k < 1 || k > 3) throw ConfigError("k must lie in 1..3");
    if (!(h > 0.0)) throw ConfigError("h must be positive");
    if (!(mu > 0.0) || mu > 1.0) throw ConfigError("mu must lie in (0,1]");
    if (t_final < 0.0) throw ConfigError("t_final must be nonnegative");
    if (mode == CflMode::fixed && !(tau_fixed > 0.0))
        throw ConfigError("fixed step mode needs tau > 0");
    if (mode == CflMode::automatic && !(gamma > 0.0))
        throw ConfigError("automatic step mode needs gamma > 0");
    if (!(kappa > 0.0)) throw ConfigError("kappa must be positive");
    if (!(m_ceiling > 0.0)) throw ConfigError("indicator ceiling must be positive");
}

TauSelection select_tau(const RunConfig& cfg, const FluxModel& flux, const Mesh& mesh,
                        double time_left) {
    TauSelection sel;
    double h = mesh.h;
    double strengthened = cfg.effective_gamma() * std::pow(h, 1.0 + cfg.alpha());
    if (cfg.mode == CflMode::automatic) {
        sel.tau = std::min(h / flux.beta, strengthened);
    } else {
        if (!(cfg.tau_fixed > 0.0)) throw ConfigError("fixed step mode needs tau > 0");
        sel.tau = cfg.tau_fixed;
        sel.standard_cfl_ok = flux.beta * sel.tau <= h * (1.0 + 1e-12);
        sel.strengthened_cfl_ok = sel.tau <= strengthened * (1.0 + 1e-12);
    }
    // Land exactly on t_final: take the remaining interval whenever it no
    // longer exceeds the nominal step.
    if (time_left <= sel.tau * (1.0 + 1e-9)) sel.tau = time_left;
    return sel;
}

DGSolution step_tvd_rk(const DGSolution& u, double tau, int k, const FluxModel& flux,
                       const BoundaryModel& bc) {
    if (k < 1 || k > 3) throw ConfigError("TVD RK order must be 1, 2 or 3");
    double t = u.t;

    Field L0 = rhs(u, flux, bc, t);
    check_finite(L0, 1);
    DGSolution s1 = combine(u, 0.0, u, 1.0, L0, tau);  // u + tau L(u)
    s1.t = t + tau;
    if (k == 1) return s1;

    Field L1 = rhs(s1, flux, bc, t + tau);
    check_finite(L1, 2);
    if (k == 2) {
        DGSolution out = combine(u, r12.value(), s1, r12.value(), L1, r12.value() * tau);
        out.t = t + tau;
        return out;
    }

    DGSolution s2 = combine(u, r34.value(), s1, r14.value(), L1, r14.value() * tau);
    s2.t = t + 0.5 * tau;
    Field L2 = rhs(s2, flux, bc, t + 0.5 * tau);
    check_finite(L2, 3);
    DGSolution out = combine(u, r13.value(), s2, r23.value(), L2, r23.value() * tau);
    out.t = t + tau;
    return out;
}

}  // namespace rkdg
