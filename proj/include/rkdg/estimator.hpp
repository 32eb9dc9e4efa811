#pragma once
#include <functional>
#include <vector>

#include "rkdg/flux.hpp"
#include "rkdg/indicators.hpp"
#include "rkdg/solution.hpp"
#include "rkdg/stepper.hpp"

namespace rkdg {

// Constants that depend only on the discretization orders.  The projection
// constants C1..C3 are normalized so that on a cell of width h
//   ||w - proj w||_Lq <= Cq h^(p+1) ||w^(p+1)||_Lq,
// C_inv is the L2 Markov constant in the form ||v_x|| <= (C_inv/h) ||v||,
// C_tr the edge trace constant |v(edge)| <= C_tr sqrt(2/h) ||v||, and C_rk
// the Taylor remainder factor (1+C_inv)^k / (k+1)!.  B_tilde and C_tilde
// scale the coefficient matrix bound of the differentiated weak form.
struct EstimatorConstants {
    int p = 0;
    int k = 1;
    double C1 = 0, C2 = 0, C3 = 0;
    double C_inv = 0;
    double C_tr = 0;
    double C_rk = 0;
    double B_tilde = 0;
    double C_tilde = 0;
};

EstimatorConstants derive_constants(int p, int k);

// Per-step spatial bound: local_space = tau h^(p+mu) F with
//   F = beta Dt e^(beta gamma) |O|  +  C1 |O| N h^(1-mu)  +  Q_n,
// where Dt is the worst rescaled jump, N the surrogate bound on the
// (p+1)-th derivative growth rate, and Q_n integrates the Gronwall
// inequality for the scheme-vs-transport gap over one step.
struct SpatialEstimate {
    double F = 0;
    double transport = 0;
    double projection = 0;
    double Q_n = 0;
    double N_p1 = 0;
    double C4 = 0, C5 = 0, C6 = 0;
    bool trusted = true;
};

SpatialEstimate spatial_F(const SpatialIndicator& S, const EstimatorConstants& consts,
                          const RunConfig& cfg, const FluxModel& flux, const Mesh& mesh);

// Per-step temporal bound: local_time = tau^(k+1) G with
//   G = C_rk [ (1 + c h^alpha) d_max[k+1] + d h^alpha ] |O|,
// c and d from the stability bracket of the differentiated weak form.
struct TemporalEstimate {
    double G = 0;
    double c_bracket = 0;
    double d_forcing = 0;
    bool trusted = true;
};

TemporalEstimate temporal_G(const TemporalIndicator& T, const SpatialIndicator& S,
                            const EstimatorConstants& consts, const RunConfig& cfg,
                            const FluxModel& flux, const Mesh& mesh);

struct StepRecord {
    int n = 0;
    double t = 0;
    double tau = 0;
    double F = 0;
    double G = 0;
    double local_space = 0;
    double local_time = 0;
    double E_global = 0;
    bool trusted = true;
};

// Running budget E_global = E_0 + sum of local terms; the L1 contraction
// of the exact evolution contributes a factor of exactly one, so the
// update is a plain sum.  Untrusted steps keep their row but only finite
// parts enter the running total.
struct ErrorBudget {
    double E0 = 0;
    double E_global = 0;
    bool all_trusted = true;
    std::vector<StepRecord> steps;
};

double local_space_term(double F, double tau, const RunConfig& cfg);
double local_time_term(double G, double tau, const RunConfig& cfg);

void accumulate(ErrorBudget& budget, const SpatialEstimate& fs, const TemporalEstimate& gt,
                double tau, double t_after, const RunConfig& cfg);

// ||g - u0||_L1 by 4(p+2)-point cellwise quadrature.
double initial_error(const DGSolution& u0, const std::function<double(double)>& g);

}  // namespace rkdg
