#pragma once
#include <functional>
#include <string>

#include "rkdg/boundary.hpp"
#include "rkdg/flux.hpp"
#include "rkdg/stepper.hpp"

namespace rkdg {

// A complete experiment definition: flux, domain, data and the default
// solver configuration the experiment is normally run with.
struct ProblemSpec {
    std::string name;
    FluxModel flux;
    double a = 0.0;
    double b = 1.0;
    std::function<double(double)> initial;
    BoundaryModel bc;
    RunConfig defaults;
};

// Burgers inflow problem on [0,10]: u0 = 1 - (x/11)^3 sin x, u_L = 1,
// run at (p,k,h,tau) = (3,3,0.05,0.005) to t = 2.
ProblemSpec example1();

// Burgers periodic problem on [0,10]: u0 = 1/2 + sin(pi x/5)/4,
// run at (p,k,h,tau) = (4,3,0.05,0.005) to t = 1.
ProblemSpec example2();

// Unit-speed linear advection with the example-2 datum; exact solution is
// a pure translation, used for convergence baselines.
ProblemSpec linear_advection();

ProblemSpec problem_by_name(const std::string& name);

}  // namespace rkdg
