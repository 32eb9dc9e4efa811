#pragma once
#include <limits>

#include "rkdg/problems.hpp"

namespace rkdg {

// Characteristics solution of the scalar conservation law, valid strictly
// before characteristic crossing.  Each evaluation solves
//   x = x0 + t f'(u_I(x0))
// for the characteristic foot with a safeguarded Newton iteration; points
// fed by the inflow boundary instead trace back to the boundary crossing
// time s and return u_L(s).
class ExactOracle {
  public:
    explicit ExactOracle(const ProblemSpec& problem);

    // First crossing time estimated from 10^4 samples of d/dx f'(u_I);
    // +inf when the data never compresses.
    double crossing_time() const { return t_star_; }

    // Throws OracleError at or beyond the crossing time.
    double value(double t, double x) const;

    // Boundary branch exposed for boundary-expansion tests: solves
    // a + (t-s) f'(u_L(s)) = x for s in [0,t] and returns u_L(s).
    double boundary_value(double t, double x) const;

    // Convergence studies require t_final <= 0.9 t*.
    bool safe_for_study(double t_final) const { return t_final <= 0.9 * t_star_; }

  private:
    ProblemSpec problem_;
    double t_star_ = std::numeric_limits<double>::infinity();
    double fp_min_ = 0.0;  // range of f'(u_I) over the sampled data
    double fp_max_ = 0.0;

    double interior_foot(double t, double x, double lo, double hi) const;
};

}  // namespace rkdg
