#pragma once
#include <string>
#include <vector>

#include "rkdg/estimator.hpp"
#include "rkdg/exact.hpp"
#include "rkdg/indicators.hpp"
#include "rkdg/problems.hpp"

namespace rkdg {

struct Snapshot {
    double t = 0;
    DGSolution u;
    SpatialIndicator S;
    TemporalIndicator T;
};

// Everything a run produces, kept in memory; report emission is separate.
struct RunArtifact {
    std::string problem_name;
    RunConfig cfg;
    double gamma_effective = 0;
    std::vector<Snapshot> snapshots;
    ErrorBudget budget;
    int steps = 0;
    double wall_seconds = 0;
    bool completed = false;
    std::string abort_reason;
    bool cfl_standard_warned = false;
    bool cfl_strengthened_warned = false;
    // run-wide indicator maxima for the summary
    double max_D_tilde = 0;
    double max_M = 0;
    double max_d = 0;
};

// Advances the problem to cfg.t_final, computing both indicators and the
// budget every step and snapshotting at the configured times.  Blow-up
// does not throw: the artifact comes back with completed=false and the
// last good state snapshotted.
RunArtifact run_simulation(const ProblemSpec& problem, const RunConfig& cfg);

// L1 distance between the final state of an artifact-producing run and the
// characteristics oracle at time t.
double l1_error_vs_oracle(const DGSolution& u, const ExactOracle& oracle, double t);

struct StudyRow {
    double h = 0;
    double l1_error = 0;
    double estimate = 0;
    double effectivity = 0;
};

struct StudyResult {
    std::vector<StudyRow> rows;
    double fitted_order = 0;
};

// Runs the problem over the mesh sequence and fits the observed L1 order.
// Requires t_final <= 0.9 t*; otherwise the study is rejected.
StudyResult convergence_study(const ProblemSpec& problem, const RunConfig& base_cfg,
                              const std::vector<double>& h_list);

}  // namespace rkdg
