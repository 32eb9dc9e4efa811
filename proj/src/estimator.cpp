#include "rkdg/estimator.hpp"

#include <cmath>

#include "rkdg/basis.hpp"
#include "rkdg/errors.hpp"
#include "rkdg/jets.hpp"

namespace rkdg {

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ||P_{p+1}||_L1 on [-1,1] by composite Gauss; the integrand has kinks at
// the polynomial's roots, so split the interval finely.
double legendre_l1_norm(int n) {
    QuadRule rule = gauss_legendre(8);
    const int pieces = 256;
    double total = 0.0;
    for (int s = 0; s < pieces; ++s) {
        double a = -1.0 + 2.0 * s / pieces, b = -1.0 + 2.0 * (s + 1) / pieces;
        for (size_t q = 0; q < rule.node.size(); ++q) {
            double x = 0.5 * (a + b) + 0.5 * (b - a) * rule.node[q];
            // plain Legendre value: undo the orthonormal scaling
            double v = basis_values(n, x, 0)[n] / std::sqrt((2.0 * n + 1.0) / 2.0);
            total += 0.5 * (b - a) * rule.weight[q] * std::abs(v);
        }
    }
    return total;
}

// Largest eigenvalue of the (p+1)x(p+1) stiffness matrix of the
// orthonormal basis, by power iteration; gives the reference-cell Markov
// constant max ||v'|| / ||v||.
double markov_constant(int p) {
    const int n = p + 1;
    QuadRule rule = gauss_legendre(p + 2);
    std::vector<double> K(static_cast<size_t>(n) * n, 0.0);
    for (size_t q = 0; q < rule.node.size(); ++q) {
        auto d = basis_values(p, rule.node[q], 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                K[i * n + j] += rule.weight[q] * d[i] * d[j];
    }
    std::vector<double> v(n, 1.0), w(n, 0.0);
    double lambda = 0.0;
    for (int it = 0; it < 500; ++it) {
        for (int i = 0; i < n; ++i) {
            w[i] = 0.0;
            for (int j = 0; j < n; ++j) w[i] += K[i * n + j] * v[j];
        }
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-300) return 0.0;  // K vanishes for p = 0
        lambda = 0.0;
        for (int i = 0; i < n; ++i) {
            lambda += v[i] * w[i];
            v[i] = w[i] / norm;
        }
    }
    return std::sqrt(std::max(lambda, 0.0));
}

// Faa di Bruno style bound over partitions of n: sum of
// coeff * bound(f^(shift + blocks)) * prod a[part], optionally restricted
// to partitions with at least min_blocks blocks and all parts <= max_part.
double bell_bound(int n, int shift, int min_blocks, int max_part,
                  const FluxModel& flux, const std::vector<double>& a) {
    double total = 0.0;
    for (const auto& mult : partitions(n)) {
        int blocks = 0;
        bool ok = true;
        for (size_t part = 0; part < mult.size(); ++part) {
            blocks += mult[part];
            if (mult[part] > 0 && static_cast<int>(part) + 1 > max_part) ok = false;
        }
        if (!ok || blocks < min_blocks) continue;
        double term = fdb_coefficient(n, mult) * flux.deriv_bound(shift + blocks);
        for (size_t part = 0; part < mult.size(); ++part)
            for (int rep = 0; rep < mult[part]; ++rep)
                term *= a[part];
        total += term;
    }
    return total;
}

}  // namespace

EstimatorConstants derive_constants(int p, int k) {
    if (p < 0 || p > 10) throw ConfigError("estimator constants support p in 0..10");
    if (k < 1 || k > 3) throw ConfigError("estimator constants support k in 1..3");
    EstimatorConstants c;
    c.p = p;
    c.k = k;
    // Projection error of a degree p+1 polynomial is its Legendre tail
    // a P_{p+1}, with (p+1)-th derivative a * P_{p+1}^{(p+1)}; the ratio is
    // the same for every such polynomial, giving closed-form constants.
    double d_top = factorial(2 * p + 2) / (std::pow(2.0, p + 1) * factorial(p + 1));
    double ref_scale = std::pow(2.0, p + 1);
    c.C1 = legendre_l1_norm(p + 1) / (2.0 * d_top) / ref_scale;
    c.C2 = 1.0 / (std::sqrt(2.0 * p + 3.0) * d_top) / ref_scale;
    c.C3 = 1.0 / d_top / ref_scale;
    c.C_inv = 2.0 * markov_constant(p);
    c.C_tr = (p + 1) / std::sqrt(2.0);
    c.C_rk = std::pow(1.0 + c.C_inv, k) / factorial(k + 1);
    c.B_tilde = (p + 1) * std::sqrt((2.0 * p + 1.0) / 2.0);
    c.C_tilde = std::sqrt(2.0);
    return c;
}

SpatialEstimate spatial_F(const SpatialIndicator& S, const EstimatorConstants& consts,
                          const RunConfig& cfg, const FluxModel& flux, const Mesh& mesh) {
    SpatialEstimate e;
    const double beta = flux.beta;
    const double gamma = cfg.effective_gamma();
    const double h = mesh.h;
    const double omega = mesh.length();
    const int p = S.p;

    // Surrogate for the (p+1)-th derivative growth rate: the forcing terms
    // of the transport equation for w^(p+1), with every lower derivative
    // replaced by its measured maximum.  kappa covers growth over the step.
    double poly = 0.0;
    std::vector<double> a(p + 1, 0.0);
    for (int l = 1; l <= p; ++l) a[l - 1] = S.M_max[l];
    for (int i = 2; i <= p + 1; ++i)
        poly += binom(p + 1, i) * bell_bound(i, 1, 1, p, flux, a) * S.M_max[p + 2 - i];
    e.N_p1 = cfg.kappa * poly;

    double grow = std::exp(beta * gamma);
    e.transport = beta * S.D_tilde * grow * omega;
    e.projection = consts.C1 * omega * e.N_p1 * std::pow(h, 1.0 - cfg.mu);
    e.C4 = beta * (1.0 + consts.C_inv + consts.C_tr * consts.C_tr);
    e.C5 = beta * S.D_tilde * grow * (1.0 + consts.C_tr * consts.C3 * std::sqrt(omega)) +
           beta * consts.C2 * std::sqrt(omega) * e.N_p1 * std::pow(h, 1.0 - cfg.mu);
    e.C6 = beta * consts.C2 * std::sqrt(omega) * e.N_p1;
    double x = gamma * std::pow(h, cfg.alpha());
    e.Q_n = std::sqrt(omega) * (std::expm1(e.C4 * x) / e.C4) * (e.C5 + e.C6 * x) / x;
    e.F = e.transport + e.projection + e.Q_n;
    e.trusted = std::isfinite(e.F);
    return e;
}

TemporalEstimate temporal_G(const TemporalIndicator& T, const SpatialIndicator& S,
                            const EstimatorConstants& consts, const RunConfig& cfg,
                            const FluxModel& flux, const Mesh& mesh) {
    TemporalEstimate e;
    const int k = T.k;
    const double gamma = cfg.effective_gamma();
    const double ha = std::pow(mesh.h, cfg.alpha());
    // Row-sum bound on the coefficient matrix of the differentiated weak
    // form: 2p+2 coupled modes, each entry within beta (1 + C_inv + C_tr^2).
    double band = (2.0 * consts.p + 2.0) * (1.0 + consts.C_inv + consts.C_tr * consts.C_tr);
    e.c_bracket = consts.C_tilde * consts.B_tilde * band * flux.beta * gamma;
    // Forcing of the top-derivative equation: partitions of k+1 with at
    // least two blocks, lower d_max values in place of the derivatives.
    std::vector<double> a(k + 1, 0.0);
    for (int l = 1; l <= k; ++l) a[l - 1] = T.d_max[l - 1];
    double forcing = bell_bound(k + 1, 0, 2, k, flux, a);
    e.d_forcing = consts.C_tilde * consts.B_tilde * band * gamma * forcing;

    double d_top = T.d_max[k];
    e.G = consts.C_rk * ((1.0 + e.c_bracket * ha) * d_top + e.d_forcing * ha) * mesh.length();
    e.trusted = std::isfinite(e.G) && std::isfinite(S.D_tilde);
    return e;
}

double local_space_term(double F, double tau, const RunConfig& cfg) {
    return tau * std::pow(cfg.h, cfg.p + cfg.mu) * F;
}

double local_time_term(double G, double tau, const RunConfig& cfg) {
    return std::pow(tau, cfg.k + 1) * G;
}

void accumulate(ErrorBudget& budget, const SpatialEstimate& fs, const TemporalEstimate& gt,
                double tau, double t_after, const RunConfig& cfg) {
    StepRecord rec;
    rec.n = static_cast<int>(budget.steps.size()) + 1;
    rec.t = t_after;
    rec.tau = tau;
    rec.F = fs.F;
    rec.G = gt.G;
    rec.local_space = local_space_term(fs.F, tau, cfg);
    rec.local_time = local_time_term(gt.G, tau, cfg);
    rec.trusted = fs.trusted && gt.trusted;
    if (std::isfinite(rec.local_space)) budget.E_global += rec.local_space;
    if (std::isfinite(rec.local_time)) budget.E_global += rec.local_time;
    rec.E_global = budget.E_global;
    budget.all_trusted = budget.all_trusted && rec.trusted;
    budget.steps.push_back(rec);
}

double initial_error(const DGSolution& u0, const std::function<double(double)>& g) {
    return l1_distance(u0, g);
}

}  // namespace rkdg
