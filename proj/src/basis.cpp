#include "rkdg/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace rkdg {

namespace {

// P_n^{(l)}(x) for n = 0..nmax, one derivative order l, via the
// differentiated three-term recurrence
//   (n+1) P_{n+1}^{(l)} = (2n+1) (x P_n^{(l)} + l P_n^{(l-1)}) - n P_{n-1}^{(l)}.
// Returns a (nmax+1) x (lmax+1) table indexed [n][l].
std::vector<std::vector<double>> legendre_table(int nmax, int lmax, double x) {
    std::vector<std::vector<double>> P(nmax + 1, std::vector<double>(lmax + 1, 0.0));
    P[0][0] = 1.0;
    if (nmax == 0) return P;
    P[1][0] = x;
    if (lmax >= 1) P[1][1] = 1.0;
    for (int n = 1; n < nmax; ++n) {
        for (int l = 0; l <= lmax; ++l) {
            double lower = l > 0 ? l * P[n][l - 1] : 0.0;
            P[n + 1][l] = ((2 * n + 1) * (x * P[n][l] + lower) - n * P[n - 1][l]) / (n + 1);
        }
    }
    return P;
}

}  // namespace

QuadRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("quadrature needs at least one point");
    QuadRule r;
    r.node.assign(n, 0.0);
    r.weight.assign(n, 0.0);
    // Newton on P_n from the Chebyshev-like initial guesses; roots come out
    // in decreasing order, store them increasing and symmetrize exactly.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            auto P = legendre_table(n, 1, x);
            double f = P[n][0];
            dp = P[n][1];
            double dx = f / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto P = legendre_table(n, 1, x);
        dp = P[n][1];
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.node[n - 1 - i] = x;
        r.node[i] = -x;
        r.weight[i] = r.weight[n - 1 - i] = w;
    }
    if (n % 2 == 1) r.node[n / 2] = 0.0;
    return r;
}

std::vector<double> basis_values(int p, double xi, int l) {
    auto P = legendre_table(p, l, xi);
    std::vector<double> v(p + 1);
    for (int i = 0; i <= p; ++i)
        v[i] = std::sqrt((2.0 * i + 1.0) / 2.0) * P[i][l];
    return v;
}

Basis::Basis(int p) : p_(p), nq_(p + 2) {
    if (p < 0) throw std::invalid_argument("basis degree must be nonnegative");
    rule_ = gauss_legendre(nq_);
    val_.resize(nq_ * (p_ + 1));
    der_.resize(nq_ * (p_ + 1));
    for (int q = 0; q < nq_; ++q) {
        auto v0 = basis_values(p_, rule_.node[q], 0);
        auto v1 = basis_values(p_, rule_.node[q], 1);
        for (int i = 0; i <= p_; ++i) {
            val_[q * (p_ + 1) + i] = v0[i];
            der_[q * (p_ + 1) + i] = v1[i];
        }
    }
    edge_left_.resize((p_ + 1) * (p_ + 1));
    edge_right_.resize((p_ + 1) * (p_ + 1));
    for (int l = 0; l <= p_; ++l) {
        auto vl = basis_values(p_, -1.0, l);
        auto vr = basis_values(p_, 1.0, l);
        for (int i = 0; i <= p_; ++i) {
            edge_left_[l * (p_ + 1) + i] = vl[i];
            edge_right_[l * (p_ + 1) + i] = vr[i];
        }
    }
}

}  // namespace rkdg
