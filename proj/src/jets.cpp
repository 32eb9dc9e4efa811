#include "rkdg/jets.hpp"

#include <cmath>
#include <stdexcept>

namespace rkdg {

namespace {
double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}
}  // namespace

Jet Jet::from_derivs(const std::vector<double>& derivs) {
    Jet j(static_cast<int>(derivs.size()) - 1);
    for (size_t r = 0; r < derivs.size(); ++r)
        j.a[r] = derivs[r] / factorial(static_cast<int>(r));
    return j;
}

Jet Jet::constant(double v, int order) {
    Jet j(order);
    j.a[0] = v;
    return j;
}

double Jet::deriv_value(int l) const {
    if (l > order()) throw std::out_of_range("jet truncated below requested derivative");
    return a[l] * factorial(l);
}

Jet Jet::operator+(const Jet& o) const {
    Jet r(order());
    for (int i = 0; i <= order(); ++i) r.a[i] = a[i] + o.a[i];
    return r;
}

Jet Jet::operator-(const Jet& o) const {
    Jet r(order());
    for (int i = 0; i <= order(); ++i) r.a[i] = a[i] - o.a[i];
    return r;
}

Jet Jet::operator*(const Jet& o) const {
    Jet r(order());
    for (int i = 0; i <= order(); ++i)
        for (int k = 0; i + k <= order(); ++k)
            r.a[i + k] += a[i] * o.a[k];
    return r;
}

Jet Jet::scaled(double s) const {
    Jet r(order());
    for (int i = 0; i <= order(); ++i) r.a[i] = a[i] * s;
    return r;
}

Jet Jet::dt() const {
    Jet r(order());
    for (int i = 0; i < order(); ++i) r.a[i] = (i + 1) * a[i + 1];
    r.a[order()] = 0.0;
    return r;
}

Jet compose_flux(const FluxModel& flux, int q_base, const Jet& u) {
    int R = u.order();
    double u0 = u.a[0];
    // Taylor coefficients of f^{(q_base)} around u0, then Horner in (u - u0).
    Jet du = u;
    du.a[0] = 0.0;
    Jet result = Jet::constant(flux.deriv(q_base + R, u0) / factorial(R), R);
    for (int k = R - 1; k >= 0; --k) {
        result = result * du;
        result.a[0] += flux.deriv(q_base + k, u0) / factorial(k);
    }
    return result;
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> mult(n, 0);
    // Recursive descent over the largest remaining part.
    struct Rec {
        int n;
        std::vector<std::vector<int>>& out;
        std::vector<int>& mult;
        void go(int remaining, int max_part) {
            if (remaining == 0) {
                out.push_back(mult);
                return;
            }
            for (int part = std::min(remaining, max_part); part >= 1; --part) {
                mult[part - 1] += 1;
                go(remaining - part, part);
                mult[part - 1] -= 1;
            }
        }
    } rec{n, out, mult};
    if (n >= 0) rec.go(n, n);
    return out;
}

double fdb_coefficient(int n, const std::vector<int>& mult) {
    double denom = 1.0;
    for (size_t j = 0; j < mult.size(); ++j) {
        denom *= factorial(mult[j]);
        denom *= std::pow(factorial(static_cast<int>(j) + 1), mult[j]);
    }
    return factorial(n) / denom;
}

}  // namespace rkdg
