#include "rkdg/solution.hpp"

#include <cmath>
#include <string>

#include "rkdg/errors.hpp"

namespace rkdg {

double DGSolution::cell_mean(int j) const {
    // phi_0 = 1/sqrt(2), so the mean is c0/sqrt(2).
    return c[idx(j, 0)] / std::sqrt(2.0);
}

double DGSolution::eval(double x, int l) const {
    if (l > degree()) return 0.0;
    int j = mesh.cell_of(x);
    double xi = mesh.to_ref(j, x);
    auto v = basis_values(degree(), xi, l);
    double s = 0.0;
    for (int i = 0; i <= degree(); ++i) s += c[idx(j, i)] * v[i];
    return s * std::pow(2.0 / mesh.h, l);
}

double DGSolution::eval_side(int j, Side side, int l) const {
    if (l > degree()) return 0.0;
    if (j < 0 || j > mesh.m)
        throw ConfigError("interface index " + std::to_string(j) + " out of range");
    int cell_j = side == Side::right ? j : j - 1;
    if (cell_j < 0)
        throw ConfigError("left trace at the inflow interface requires the boundary model");
    if (cell_j > mesh.m - 1)
        throw ConfigError("right trace at interface m lies outside the mesh");
    int ref_side = side == Side::right ? -1 : +1;
    double s = 0.0;
    for (int i = 0; i <= degree(); ++i)
        s += c[idx(cell_j, i)] * basis->edge(ref_side, l, i);
    return s * std::pow(2.0 / mesh.h, l);
}

double DGSolution::eval_field_ref(const Field& f, int j, double xi, int l) const {
    auto v = basis_values(degree(), xi, l);
    double s = 0.0;
    for (int i = 0; i <= degree(); ++i)
        s += f[idx(j, i)] * v[i];
    return s * std::pow(2.0 / mesh.h, l);
}

DGSolution project_l2(const std::function<double(double)>& g, const Mesh& mesh,
                      std::shared_ptr<const Basis> basis, double t0) {
    DGSolution u(mesh, std::move(basis), t0);
    const Basis& B = *u.basis;
    for (int j = 0; j < mesh.m; ++j) {
        for (int q = 0; q < B.n_quad(); ++q) {
            double x = mesh.from_ref(j, B.qnode(q));
            double gv = g(x);
            if (!std::isfinite(gv))
                throw ConfigError("projection data non-finite at x=" + std::to_string(x));
            for (int i = 0; i < B.n_modes(); ++i)
                u.c[u.idx(j, i)] += B.qweight(q) * gv * B.val(q, i);
        }
    }
    return u;
}

double l1_distance(const DGSolution& u, const std::function<double(double)>& g) {
    const Basis& B = *u.basis;
    QuadRule rule = gauss_legendre(4 * B.n_quad());
    double total = 0.0;
    for (int j = 0; j < u.mesh.m; ++j) {
        double s = 0.0;
        for (size_t q = 0; q < rule.node.size(); ++q) {
            double xi = rule.node[q];
            double x = u.mesh.from_ref(j, xi);
            auto v = basis_values(u.degree(), xi, 0);
            double uv = 0.0;
            for (int i = 0; i <= u.degree(); ++i) uv += u.c[u.idx(j, i)] * v[i];
            s += rule.weight[q] * std::abs(uv - g(x));
        }
        total += 0.5 * u.mesh.h * s;
    }
    return total;
}

double tv_from_traces(const DGSolution& u) {
    double tv = 0.0;
    double prev = u.eval_side(0, Side::right, 0);
    for (int j = 0; j < u.mesh.m; ++j) {
        double left = u.eval_side(j, Side::right, 0);       // left edge of cell j
        double right = u.eval_side(j + 1, Side::left, 0);   // right edge of cell j
        tv += std::abs(left - prev) + std::abs(right - left);
        prev = right;
    }
    return tv;
}

}  // namespace rkdg
