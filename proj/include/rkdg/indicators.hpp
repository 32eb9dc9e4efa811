#pragma once
#include <vector>

#include "rkdg/boundary.hpp"
#include "rkdg/flux.hpp"
#include "rkdg/solution.hpp"
#include "rkdg/stepper.hpp"

namespace rkdg {

// Spatial smoothness data at time t_n.  At interface j (the left edge of
// cell j), M[j][l] is the l-th derivative trace from the right and L[j][l]
// the trace from the left; the inflow interface takes L from the boundary
// data pushed through the PDE.  J = M - L, and D rescales each jump by
// h^(p+1+mu-l(1+alpha)) so that bounded D means the scheme is numerically
// smooth at the design order.
struct SpatialIndicator {
    int m = 0;
    int p = 0;
    std::vector<double> M, L, J, D;  // m x (p+1), [j*(p+1)+l]
    std::vector<double> M_max, J_max, D_max;  // per order l
    double D_tilde = 0.0;            // max_jl |D|

    double at(const std::vector<double>& a, int j, int l) const {
        return a[static_cast<size_t>(j) * (p + 1) + l];
    }
    double max_component() const;
};

// Temporal smoothness data: coefficient fields of d^l u/dt^l at t_n for
// l = 1..k+1 obtained by differentiating the semi-discrete weak form, plus
// their sup norms over quadrature nodes and cell edges.
struct TemporalIndicator {
    int k = 0;
    std::vector<Field> d;        // d[l-1] is the l-th derivative field
    std::vector<double> d_max;   // d_max[l-1] = sup |d^l u/dt^l|

    double max_component() const;
};

// Spatial derivative traces of the exact solution at the inflow boundary,
// orders 0..max_order, from the time derivatives of u_L and the flux.
// Orders 0..2 use the closed forms
//   L0 = u_L,  L1 = -u_L'/f'(u_L),
//   L2 = -(2 f''(u_L) u_L'^2 - f'(u_L) u_L'') / f'(u_L)^3,
// higher orders differentiate u_x = -u_t/f'(u) recursively with jets.
std::vector<double> boundary_derivatives(const BoundaryModel& bc, const FluxModel& flux,
                                         double t, int max_order);

// Same values computed purely by the jet recursion; exposed so tests can
// pin the closed forms against it.
std::vector<double> boundary_derivatives_recursion(const BoundaryModel& bc,
                                                   const FluxModel& flux, double t,
                                                   int max_order);

SpatialIndicator spatial_indicator(const DGSolution& u, const RunConfig& cfg,
                                   const FluxModel& flux, const BoundaryModel& bc,
                                   double t);

// Differentiation depth is capped at 4 total time derivatives (k <= 3).
TemporalIndicator temporal_indicator(const DGSolution& u, int k, const FluxModel& flux,
                                     const BoundaryModel& bc, double t);

}  // namespace rkdg
