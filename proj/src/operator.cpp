#include "rkdg/operator.hpp"

namespace rkdg {

Field assemble_weak_form(const DGSolution& u, const std::vector<double>& vol,
                         const std::vector<double>& fhat) {
    const Basis& B = *u.basis;
    const int m = u.mesh.m;
    const int nm = B.n_modes();
    Field H(static_cast<size_t>(m) * nm, 0.0);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < nm; ++i) {
            double s = 0.0;
            for (int q = 0; q < B.n_quad(); ++q)
                s += B.qweight(q) * vol[j * B.n_quad() + q] * B.der(q, i);
            s += fhat[j] * B.edge(-1, 0, i);
            s -= fhat[j + 1] * B.edge(+1, 0, i);
            H[u.idx(j, i)] = s;
        }
    }
    return H;
}

Field apply_H(const DGSolution& u, const FluxModel& flux, const BoundaryModel& bc,
              double t) {
    const Basis& B = *u.basis;
    const int m = u.mesh.m;

    std::vector<double> vol(static_cast<size_t>(m) * B.n_quad());
    for (int j = 0; j < m; ++j)
        for (int q = 0; q < B.n_quad(); ++q) {
            double uv = 0.0;
            for (int i = 0; i < B.n_modes(); ++i)
                uv += u.c[u.idx(j, i)] * B.val(q, i);
            vol[j * B.n_quad() + q] = flux.f(uv);
        }

    std::vector<double> fhat(m + 1);
    for (int j = 0; j <= m; ++j) {
        double ul, ur;
        if (j == 0) {
            ur = u.eval_side(0, Side::right, 0);
            ul = bc.periodic() ? u.eval_side(m, Side::left, 0) : bc.uL(t);
        } else if (j == m) {
            ul = u.eval_side(m, Side::left, 0);
            ur = bc.periodic() ? u.eval_side(0, Side::right, 0) : ul;  // pure outflow
        } else {
            ul = u.eval_side(j, Side::left, 0);
            ur = u.eval_side(j, Side::right, 0);
        }
        fhat[j] = godunov_flux(ul, ur, flux);
    }
    return assemble_weak_form(u, vol, fhat);
}

Field mass_solve(const Field& rhs, const Mesh& mesh) {
    Field out(rhs);
    double s = 2.0 / mesh.h;
    for (auto& v : out) v *= s;
    return out;
}

}  // namespace rkdg
