#include "rkdg/problems.hpp"

#include <cmath>

#include "rkdg/errors.hpp"

namespace rkdg {

ProblemSpec example1() {
    ProblemSpec ps;
    ps.name = "example1";
    // The datum stays inside [0.63, 1.41]; the band below leaves room for
    // discrete overshoot before the blow-up guard trips.
    ps.flux = make_burgers(0.5, 1.5);
    ps.a = 0.0;
    ps.b = 10.0;
    ps.initial = [](double x) { return 1.0 - std::pow(x / 11.0, 3) * std::sin(x); };
    ps.bc = make_constant_inflow(1.0);
    ps.defaults.p = 3;
    ps.defaults.k = 3;
    ps.defaults.h = 0.05;
    ps.defaults.mu = 1.0;
    ps.defaults.tau_fixed = 0.005;
    ps.defaults.mode = CflMode::fixed;
    // gamma pinned by the reference step size: tau = gamma h^(1+alpha).
    ps.defaults.gamma = 0.005 / std::pow(0.05, 1.0 + 1.0 / 3.0);
    ps.defaults.t_final = 2.0;
    ps.defaults.snapshots = {0.05, 1.05, 2.0};
    return ps;
}

ProblemSpec example2() {
    ProblemSpec ps;
    ps.name = "example2";
    ps.flux = make_burgers(0.2, 0.8);
    ps.a = 0.0;
    ps.b = 10.0;
    ps.initial = [](double x) { return 0.5 + 0.25 * std::sin(M_PI * x / 5.0); };
    ps.bc = make_periodic();
    ps.defaults.p = 4;
    ps.defaults.k = 3;
    ps.defaults.h = 0.05;
    ps.defaults.mu = 1.0;
    ps.defaults.tau_fixed = 0.005;
    ps.defaults.mode = CflMode::fixed;
    ps.defaults.gamma = 0.005 / std::pow(0.05, 1.0 + 1.0 / 4.0);
    ps.defaults.t_final = 1.0;
    ps.defaults.snapshots = {1.0};
    return ps;
}

ProblemSpec linear_advection() {
    ProblemSpec ps;
    ps.name = "linadv";
    ps.flux = make_linear_advection(1.0, 0.2, 0.8);
    ps.a = 0.0;
    ps.b = 10.0;
    ps.initial = [](double x) { return 0.5 + 0.25 * std::sin(M_PI * x / 5.0); };
    ps.bc = make_periodic();
    ps.defaults.p = 2;
    ps.defaults.k = 3;
    ps.defaults.h = 0.05;
    ps.defaults.mu = 1.0;
    ps.defaults.tau_fixed = 0.005;
    ps.defaults.mode = CflMode::fixed;
    ps.defaults.gamma = 0.005 / std::pow(0.05, 1.5);
    ps.defaults.t_final = 1.0;
    ps.defaults.snapshots = {1.0};
    return ps;
}

ProblemSpec problem_by_name(const std::string& name) {
    if (name == "example1") return example1();
    if (name == "example2") return example2();
    if (name == "linadv") return linear_advection();
    throw ConfigError("unknown problem '" + name +
                      "' (available: example1, example2, linadv)");
}

}  // namespace rkdg
