#include "rkdg/boundary.hpp"

#include <string>

#include "rkdg/errors.hpp"

namespace rkdg {

double BoundaryModel::uL_deriv(double t, int order) const {
    if (kind != Kind::inflow)
        throw ConfigError("boundary trace requested from a periodic boundary model");
    if (order < 0 || order > max_order())
        throw ConfigError("boundary derivative of order " + std::to_string(order) +
                          " required but only orders up to " +
                          std::to_string(max_order()) + " are provided");
    return derivs[order](t);
}

BoundaryModel make_periodic() {
    return BoundaryModel{};
}

BoundaryModel make_inflow(std::vector<std::function<double(double)>> derivs) {
    if (derivs.empty())
        throw ConfigError("inflow boundary needs at least u_L itself");
    BoundaryModel b;
    b.kind = BoundaryModel::Kind::inflow;
    b.derivs = std::move(derivs);
    return b;
}

BoundaryModel make_constant_inflow(double value) {
    std::vector<std::function<double(double)>> d;
    d.push_back([value](double) { return value; });
    for (int q = 1; q <= 8; ++q)
        d.push_back([](double) { return 0.0; });
    return make_inflow(std::move(d));
}

}  // namespace rkdg
