#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "rkdg/solution.hpp"

namespace testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240615u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// Polynomial in the power basis with value/derivative evaluation.
struct Poly {
    std::vector<double> c;  // c[i] x^i

    double value(double x) const {
        double s = 0.0;
        for (size_t i = c.size(); i-- > 0;) s = s * x + c[i];
        return s;
    }
    double deriv(double x, int l) const {
        Poly d = *this;
        for (int r = 0; r < l; ++r) {
            std::vector<double> nd(d.c.size() > 1 ? d.c.size() - 1 : 1, 0.0);
            for (size_t i = 1; i < d.c.size(); ++i) nd[i - 1] = i * d.c[i];
            d.c = nd;
        }
        return d.value(x);
    }
};

inline Poly random_poly(int degree, double amp = 1.0) {
    Poly p;
    p.c.resize(degree + 1);
    for (auto& v : p.c) v = uniform(-amp, amp);
    return p;
}

// Least squares slope of log(y) against log(x).
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline double max_abs_diff(const rkdg::Field& a, const rkdg::Field& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline double max_abs(const rkdg::Field& a) {
    double worst = 0.0;
    for (double v : a) worst = std::max(worst, std::abs(v));
    return worst;
}

// L1 distance between two solutions on the same mesh/basis.
inline double l1_between(const rkdg::DGSolution& u, const rkdg::DGSolution& v) {
    rkdg::DGSolution diff = u;
    for (size_t i = 0; i < diff.c.size(); ++i) diff.c[i] -= v.c[i];
    return rkdg::l1_distance(diff, [](double) { return 0.0; });
}

}  // namespace testutil
