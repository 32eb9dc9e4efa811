#pragma once
#include <limits>
#include <vector>

#include "rkdg/boundary.hpp"
#include "rkdg/flux.hpp"
#include "rkdg/solution.hpp"

namespace rkdg {

enum class CflMode { fixed, automatic };

// Solver configuration shared by the stepper, the indicators and the
// estimator.  alpha is always mu/p; gamma = 0 means "derive the effective
// gamma from the fixed step size", which keeps the strengthened CFL ratio
// tau / h^(1+alpha) consistent inside the estimator.
struct RunConfig {
    int p = 3;
    int k = 3;
    double h = 0.05;
    double mu = 1.0;
    double gamma = 0.0;
    double tau_fixed = 0.0;
    double t_final = 0.0;
    CflMode mode = CflMode::fixed;
    double kappa = 2.0;
    double m_ceiling = 1e4;
    std::vector<double> snapshots;

    double alpha() const { return mu / p; }
    double effective_gamma() const;
    void validate() const;
};

struct TauSelection {
    double tau = 0.0;
    bool standard_cfl_ok = true;      // beta * tau <= h
    bool strengthened_cfl_ok = true;  // tau <= gamma * h^(1+alpha)
};

// Step size for the next step.  Automatic mode returns
// min(h/beta, gamma h^(1+alpha)); fixed mode returns tau_fixed and flags
// violated CFL bounds instead of failing.  The result is clipped so the
// run lands exactly on t_final (time_left is the remaining interval).
TauSelection select_tau(const RunConfig& cfg, const FluxModel& flux, const Mesh& mesh,
                        double time_left = std::numeric_limits<double>::infinity());

// One TVD Runge-Kutta step of order k (1, 2 or 3).  Boundary data is
// evaluated at the stage times t, t+tau, t+tau/2 of the standard SSP
// tableau.  Non-finite stage values raise BlowupError.
DGSolution step_tvd_rk(const DGSolution& u, double tau, int k, const FluxModel& flux,
                       const BoundaryModel& bc);

}  // namespace rkdg
