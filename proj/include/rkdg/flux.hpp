#pragma once
#include <functional>
#include <string>
#include <vector>

namespace rkdg {

// Scalar flux together with the bounds the scheme and the estimator need.
// The admissible range [u_min, u_max] is the band the solution is expected
// to stay in; the west-wind requirement f'(w) > 0 is enforced by sampling
// on that band when the model is built.  U is the amplitude bound used by
// the blow-up guard, beta = max f', delta = max |f''|, both on the band.
struct FluxModel {
    std::string name;
    std::function<double(int, double)> deriv_fn;  // (order, w) -> d^order f / dw^order
    double u_min = -1.0;
    double u_max = 1.0;
    double U = 1.0;
    double beta = 1.0;
    double delta = 0.0;

    double f(double w) const { return deriv_fn(0, w); }
    double f1(double w) const { return deriv_fn(1, w); }
    double f2(double w) const { return deriv_fn(2, w); }
    double deriv(int q, double w) const { return deriv_fn(q, w); }

    // max |f^{(q)}| on the admissible band, sampled; cached by the caller
    // if it matters (the estimator calls this a handful of times per step).
    double deriv_bound(int q) const;
};

// Builds a model from the derivative callback, sampling the band for the
// west-wind check and for beta and delta.
FluxModel make_flux(std::string name, std::function<double(int, double)> deriv_fn,
                    double u_min, double u_max);

FluxModel make_burgers(double u_min, double u_max);
FluxModel make_linear_advection(double speed, double u_min, double u_max);

// Godunov numerical flux.  Evaluated with the general min/max formula and
// checked against the west-wind reduction f(u_left); arguments beyond U
// signal blow-up and abort the run.
double godunov_flux(double u_left, double u_right, const FluxModel& flux);

}  // namespace rkdg
