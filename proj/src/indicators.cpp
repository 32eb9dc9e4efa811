#include "rkdg/indicators.hpp"

#include <cmath>
#include <string>

#include "rkdg/errors.hpp"
#include "rkdg/jets.hpp"
#include "rkdg/operator.hpp"

namespace rkdg {

namespace {

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Jet reciprocal(const Jet& f) {
    Jet g(f.order());
    g.a[0] = 1.0 / f.a[0];
    for (int k = 1; k <= f.order(); ++k) {
        double s = 0.0;
        for (int i = 1; i <= k; ++i) s += f.a[i] * g.a[k - i];
        g.a[k] = -s / f.a[0];
    }
    return g;
}

}  // namespace

double SpatialIndicator::max_component() const {
    double worst = 0.0;
    for (double v : M) worst = std::max(worst, std::abs(v));
    for (double v : D) worst = std::max(worst, std::abs(v));
    return worst;
}

double TemporalIndicator::max_component() const {
    double worst = 0.0;
    for (double v : d_max) worst = std::max(worst, v);
    return worst;
}

std::vector<double> boundary_derivatives_recursion(const BoundaryModel& bc,
                                                   const FluxModel& flux, double t,
                                                   int max_order) {
    const int R = max_order;
    std::vector<double> ul(R + 1);
    for (int q = 0; q <= R; ++q) ul[q] = bc.uL_deriv(t, q);

    // A[s] is the t-jet of the s-th spatial derivative of u at the boundary.
    // Differentiating u_t + f'(u) u_x = 0 s times in x and solving for the
    // highest spatial derivative gives
    //   A_{s+1} = -( dt A_s + sum_{i=1..s} C(s,i) B_i A_{s+1-i} ) / f'(u),
    // where B_i is the t-jet of the i-th x-derivative of f'(u), expanded by
    // Faa di Bruno over the already known A_1..A_i.  Top jet coefficients
    // degrade by one order per recursion level, which never reaches the
    // constant terms reported here.
    std::vector<Jet> A, B;
    A.push_back(Jet::from_derivs(ul));
    B.push_back(compose_flux(flux, 1, A[0]));  // B[0] = f'(u) itself
    for (int s = 0; s < R; ++s) {
        Jet term = A[s].dt();
        for (int i = 1; i <= s; ++i)
            term = term + (B[i] * A[s + 1 - i]).scaled(binom(s, i));
        A.push_back((term * reciprocal(B[0])).scaled(-1.0));

        int i = s + 1;
        Jet Bi(R);
        for (const auto& mult : partitions(i)) {
            int blocks = 0;
            for (int c : mult) blocks += c;
            Jet prod = compose_flux(flux, 1 + blocks, A[0]);
            bool usable = true;
            for (size_t part = 0; part < mult.size(); ++part)
                for (int rep = 0; rep < mult[part]; ++rep) {
                    if (static_cast<int>(part) + 1 >= static_cast<int>(A.size())) {
                        usable = false;
                        break;
                    }
                    prod = prod * A[part + 1];
                }
            if (!usable) continue;  // cannot happen: parts of i never exceed i
            Bi = Bi + prod.scaled(fdb_coefficient(i, mult));
        }
        B.push_back(Bi);
    }

    std::vector<double> out(R + 1);
    for (int l = 0; l <= R; ++l) out[l] = A[l].value();
    return out;
}

std::vector<double> boundary_derivatives(const BoundaryModel& bc, const FluxModel& flux,
                                         double t, int max_order) {
    std::vector<double> out;
    if (max_order >= 3) {
        out = boundary_derivatives_recursion(bc, flux, t, max_order);
    } else {
        out.assign(max_order + 1, 0.0);
    }
    double u0 = bc.uL_deriv(t, 0);
    out[0] = u0;
    if (max_order >= 1) {
        double fp = flux.f1(u0);
        double u1 = bc.uL_deriv(t, 1);
        out[1] = -u1 / fp;
        if (max_order >= 2) {
            double u2 = bc.uL_deriv(t, 2);
            out[2] = -(2.0 * flux.f2(u0) * u1 * u1 - fp * u2) / (fp * fp * fp);
        }
    }
    return out;
}

SpatialIndicator spatial_indicator(const DGSolution& u, const RunConfig& cfg,
                                   const FluxModel& flux, const BoundaryModel& bc,
                                   double t) {
    const int p = u.degree();
    if (cfg.p != p)
        throw ConfigError("config degree p=" + std::to_string(cfg.p) +
                          " does not match the solution degree " + std::to_string(p));
    const int m = u.mesh.m;
    const double h = u.mesh.h;

    SpatialIndicator S;
    S.m = m;
    S.p = p;
    S.M.assign(static_cast<size_t>(m) * (p + 1), 0.0);
    S.L.assign(S.M.size(), 0.0);
    S.J.assign(S.M.size(), 0.0);
    S.D.assign(S.M.size(), 0.0);
    S.M_max.assign(p + 1, 0.0);
    S.J_max.assign(p + 1, 0.0);
    S.D_max.assign(p + 1, 0.0);

    std::vector<double> scale(p + 1);
    for (int l = 0; l <= p; ++l)
        scale[l] = std::pow(h, p + 1 + cfg.mu - l * (1.0 + cfg.alpha()));

    std::vector<double> bdry;
    if (!bc.periodic()) bdry = boundary_derivatives(bc, flux, t, p);

    for (int j = 0; j < m; ++j) {
        for (int l = 0; l <= p; ++l) {
            size_t a = static_cast<size_t>(j) * (p + 1) + l;
            S.M[a] = u.eval_side(j, Side::right, l);
            if (j > 0)
                S.L[a] = u.eval_side(j, Side::left, l);
            else
                S.L[a] = bc.periodic() ? u.eval_side(m, Side::left, l) : bdry[l];
            S.J[a] = S.M[a] - S.L[a];
            S.D[a] = S.J[a] / scale[l];
            S.M_max[l] = std::max(S.M_max[l], std::abs(S.M[a]));
            S.J_max[l] = std::max(S.J_max[l], std::abs(S.J[a]));
            S.D_max[l] = std::max(S.D_max[l], std::abs(S.D[a]));
            S.D_tilde = std::max(S.D_tilde, std::abs(S.D[a]));
        }
    }
    return S;
}

TemporalIndicator temporal_indicator(const DGSolution& u, int k, const FluxModel& flux,
                                     const BoundaryModel& bc, double t) {
    if (k < 1)
        throw ConfigError("temporal indicator needs k >= 1");
    if (k + 1 > 4)
        throw ConfigError("temporal differentiation depth " + std::to_string(k + 1) +
                          " exceeds the implemented cap of 4");
    const Basis& B = *u.basis;
    const int m = u.mesh.m;
    const int nq = B.n_quad();
    const int nm = B.n_modes();

    TemporalIndicator T;
    T.k = k;

    // Pointwise samples of u and each derivative field: quadrature nodes,
    // and the two edge traces of every cell.
    auto sample_nodes = [&](const Field& f, std::vector<double>& nodes,
                            std::vector<double>& left, std::vector<double>& right) {
        nodes.assign(static_cast<size_t>(m) * nq, 0.0);
        left.assign(m, 0.0);
        right.assign(m, 0.0);
        for (int j = 0; j < m; ++j) {
            for (int q = 0; q < nq; ++q) {
                double s = 0.0;
                for (int i = 0; i < nm; ++i) s += f[u.idx(j, i)] * B.val(q, i);
                nodes[j * nq + q] = s;
            }
            double sl = 0.0, sr = 0.0;
            for (int i = 0; i < nm; ++i) {
                sl += f[u.idx(j, i)] * B.edge(-1, 0, i);
                sr += f[u.idx(j, i)] * B.edge(+1, 0, i);
            }
            left[j] = sl;
            right[j] = sr;
        }
    };

    std::vector<std::vector<double>> nodes(k + 2), eleft(k + 2), eright(k + 2);
    sample_nodes(u.c, nodes[0], eleft[0], eright[0]);

    // First derivative is exactly the semi-discrete right side.
    T.d.push_back(mass_solve(apply_H(u, flux, bc, t), u.mesh));
    sample_nodes(T.d[0], nodes[1], eleft[1], eright[1]);

    for (int l = 1; l <= k; ++l) {
        // Build d[l+1] from the weak form differentiated l times: the
        // integrand and the upwind interface values are the l-th time
        // derivative of f(u), expanded pointwise through jets of u.
        std::vector<double> vol(static_cast<size_t>(m) * nq);
        std::vector<double> derivs(l + 1);
        for (int j = 0; j < m; ++j)
            for (int q = 0; q < nq; ++q) {
                for (int r = 0; r <= l; ++r) derivs[r] = nodes[r][j * nq + q];
                vol[j * nq + q] =
                    compose_flux(flux, 0, Jet::from_derivs(derivs)).deriv_value(l);
            }

        std::vector<double> fhat(m + 1);
        auto upwind_jet = [&](int src_cell) {
            for (int r = 0; r <= l; ++r) derivs[r] = eright[r][src_cell];
            return Jet::from_derivs(derivs);
        };
        for (int j = 0; j <= m; ++j) {
            if (j == 0 && !bc.periodic()) {
                std::vector<double> uld(l + 1);
                for (int r = 0; r <= l; ++r) uld[r] = bc.uL_deriv(t, r);
                fhat[j] = compose_flux(flux, 0, Jet::from_derivs(uld)).deriv_value(l);
            } else {
                int src = j == 0 ? m - 1 : j - 1;  // periodic wrap or upwind cell
                fhat[j] = compose_flux(flux, 0, upwind_jet(src)).deriv_value(l);
            }
        }
        T.d.push_back(mass_solve(assemble_weak_form(u, vol, fhat), u.mesh));
        sample_nodes(T.d[l], nodes[l + 1], eleft[l + 1], eright[l + 1]);
    }

    T.d_max.assign(k + 1, 0.0);
    for (int l = 1; l <= k + 1; ++l) {
        double worst = 0.0;
        for (double v : nodes[l]) worst = std::max(worst, std::abs(v));
        for (double v : eleft[l]) worst = std::max(worst, std::abs(v));
        for (double v : eright[l]) worst = std::max(worst, std::abs(v));
        T.d_max[l - 1] = worst;
    }
    return T;
}

}  // namespace rkdg
