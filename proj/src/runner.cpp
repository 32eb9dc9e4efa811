#include "rkdg/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rkdg/errors.hpp"
#include "rkdg/stepper.hpp"

namespace rkdg {

namespace {

Mesh build_mesh(const ProblemSpec& problem, const RunConfig& cfg) {
    double span = problem.b - problem.a;
    int m = static_cast<int>(std::lround(span / cfg.h));
    if (m < 1 || std::abs(m * cfg.h - span) > 1e-9 * span)
        throw ConfigError("cell size h=" + std::to_string(cfg.h) +
                          " does not tile the domain evenly");
    return Mesh(problem.a, problem.b, m);
}

bool matches_time(double t, double target) {
    return std::abs(t - target) <= 1e-9 * std::max(1.0, std::abs(target));
}

}  // namespace

RunArtifact run_simulation(const ProblemSpec& problem, const RunConfig& cfg) {
    cfg.validate();
    auto t_begin = std::chrono::steady_clock::now();

    RunArtifact art;
    art.problem_name = problem.name;
    art.cfg = cfg;
    art.gamma_effective = cfg.effective_gamma();

    Mesh mesh = build_mesh(problem, cfg);
    auto basis = std::make_shared<Basis>(cfg.p);
    DGSolution u = project_l2(problem.initial, mesh, basis, 0.0);

    EstimatorConstants consts = derive_constants(cfg.p, cfg.k);
    art.budget.E0 = initial_error(u, problem.initial);
    art.budget.E_global = art.budget.E0;

    std::vector<double> want = cfg.snapshots;
    if (want.empty()) want.push_back(cfg.t_final);
    std::sort(want.begin(), want.end());

    try {
        for (;;) {
            SpatialIndicator S = spatial_indicator(u, cfg, problem.flux, problem.bc, u.t);
            TemporalIndicator T = temporal_indicator(u, cfg.k, problem.flux, problem.bc, u.t);
            art.max_D_tilde = std::max(art.max_D_tilde, S.D_tilde);
            for (double v : S.M_max) art.max_M = std::max(art.max_M, v);
            art.max_d = std::max(art.max_d, T.max_component());

            // Label the snapshot with the requested time; the accumulated
            // u.t may be off by a few ulps after many steps.
            for (double ts : want)
                if (matches_time(u.t, ts)) {
                    art.snapshots.push_back(Snapshot{ts, u, S, T});
                    break;
                }

            double remaining = cfg.t_final - u.t;
            if (remaining <= 1e-12 * std::max(1.0, cfg.t_final)) break;

            TauSelection sel = select_tau(cfg, problem.flux, mesh, remaining);
            art.cfl_standard_warned = art.cfl_standard_warned || !sel.standard_cfl_ok;
            art.cfl_strengthened_warned =
                art.cfl_strengthened_warned || !sel.strengthened_cfl_ok;

            SpatialEstimate fs = spatial_F(S, consts, cfg, problem.flux, mesh);
            TemporalEstimate gt = temporal_G(T, S, consts, cfg, problem.flux, mesh);
            if (S.max_component() > cfg.m_ceiling || T.max_component() > cfg.m_ceiling) {
                fs.trusted = false;
                gt.trusted = false;
            }
            accumulate(art.budget, fs, gt, sel.tau, u.t + sel.tau, cfg);

            u = step_tvd_rk(u, sel.tau, cfg.k, problem.flux, problem.bc);
            ++art.steps;
        }
        art.completed = true;
    } catch (const BlowupError& e) {
        art.completed = false;
        art.abort_reason = e.what();
        art.snapshots.push_back(Snapshot{
            u.t, u, SpatialIndicator{}, TemporalIndicator{}});
    }

    art.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
    return art;
}

double l1_error_vs_oracle(const DGSolution& u, const ExactOracle& oracle, double t) {
    return l1_distance(u, [&](double x) { return oracle.value(t, x); });
}

StudyResult convergence_study(const ProblemSpec& problem, const RunConfig& base_cfg,
                              const std::vector<double>& h_list) {
    if (h_list.empty()) throw ConfigError("convergence study needs a mesh list");
    ExactOracle oracle(problem);
    if (!oracle.safe_for_study(base_cfg.t_final))
        throw OracleError("study horizon t_final=" + std::to_string(base_cfg.t_final) +
                          " exceeds 0.9 t* = " + std::to_string(0.9 * oracle.crossing_time()));

    StudyResult res;
    for (double h : h_list) {
        RunConfig cfg = base_cfg;
        cfg.h = h;
        cfg.snapshots = {cfg.t_final};
        RunArtifact art = run_simulation(problem, cfg);
        if (!art.completed)
            throw BlowupError("study run at h=" + std::to_string(h) +
                              " blew up: " + art.abort_reason);
        const DGSolution& uf = art.snapshots.back().u;
        StudyRow row;
        row.h = h;
        row.l1_error = l1_error_vs_oracle(uf, oracle, cfg.t_final);
        row.estimate = art.budget.E_global;
        row.effectivity = row.estimate / row.l1_error;
        res.rows.push_back(row);
    }
    // Least squares slope of log error against log h.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = static_cast<int>(res.rows.size());
    for (const auto& r : res.rows) {
        double lx = std::log(r.h), ly = std::log(r.l1_error);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    res.fitted_order = n > 1 ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    return res;
}

}  // namespace rkdg
