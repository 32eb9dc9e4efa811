#pragma once
#include <functional>
#include <vector>

namespace rkdg {

// Boundary closure.  Inflow carries the Dirichlet trace u_L(t) together
// with as many time derivatives as the caller can supply analytically;
// the indicator and the temporal differentiation both consume them.
// Periodic wraps both ends.  The right boundary of an inflow problem is
// pure outflow and needs no data.
struct BoundaryModel {
    enum class Kind { periodic, inflow };
    Kind kind = Kind::periodic;

    // derivs[q](t) = d^q u_L / dt^q; present only for inflow.
    std::vector<std::function<double(double)>> derivs;

    bool periodic() const { return kind == Kind::periodic; }
    int max_order() const { return static_cast<int>(derivs.size()) - 1; }

    double uL(double t) const { return uL_deriv(t, 0); }
    double uL_deriv(double t, int order) const;
};

BoundaryModel make_periodic();
BoundaryModel make_inflow(std::vector<std::function<double(double)>> derivs);
// Constant inflow value: derivatives through order 8 are supplied as zero.
BoundaryModel make_constant_inflow(double value);

}  // namespace rkdg
