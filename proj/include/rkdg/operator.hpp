#pragma once
#include "rkdg/boundary.hpp"
#include "rkdg/flux.hpp"
#include "rkdg/solution.hpp"

namespace rkdg {

// Right side of the weak form before mass inversion:
//   H_j(u, phi_i) = (f(u), phi_i_x)_j + fhat_{j-1/2} phi_i(-1) - fhat_{j+1/2} phi_i(+1)
// with the Godunov flux at interfaces, u_L(t) as the upwind trace at an
// inflow, and the interior trace reused at a pure outflow.  t is the time
// at which boundary data is evaluated (stage time during stepping).
Field apply_H(const DGSolution& u, const FluxModel& flux, const BoundaryModel& bc,
              double t);

// Assembles the same weak form from precomputed integrand values: vol[j*nq+q]
// holds the volume integrand at quadrature node q of cell j (a stand-in for
// f(u) or any of its time derivatives) and fhat[j] the interface value at
// interface j = 0..m.  Shared by the operator and the temporal indicator so
// both differentiate the identical discrete form.
Field assemble_weak_form(const DGSolution& u, const std::vector<double>& vol,
                         const std::vector<double>& fhat);

// Inverts the diagonal mass matrix (h/2 per mode): scales by 2/h.
Field mass_solve(const Field& rhs, const Mesh& mesh);

}  // namespace rkdg
