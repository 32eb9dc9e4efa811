#pragma once
#include <vector>

#include "rkdg/flux.hpp"

namespace rkdg {

// Truncated Taylor series in one variable ("jet"), stored as series
// coefficients a_r = d^r g / dt^r / r!.  All jets in one computation share
// the same truncation length; products drop terms beyond it.  Used to push
// time derivatives through f(u) pointwise and to run the boundary
// derivative recursion.
struct Jet {
    std::vector<double> a;

    explicit Jet(int order = 0) : a(order + 1, 0.0) {}
    int order() const { return static_cast<int>(a.size()) - 1; }

    static Jet from_derivs(const std::vector<double>& derivs);
    static Jet constant(double v, int order);

    double value() const { return a[0]; }
    double deriv_value(int l) const;  // l-th derivative at the base point

    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet scaled(double s) const;
    Jet dt() const;  // series of the time derivative, top coefficient zero-filled
};

// Series of f^{(q_base)}(u(t)) for a jet u; needs flux derivatives up to
// q_base + u.order().
Jet compose_flux(const FluxModel& flux, int q_base, const Jet& u);

// Integer partitions of n as multiplicity vectors: mult[j] copies of part
// j+1, with sum (j+1)*mult[j] = n.
std::vector<std::vector<int>> partitions(int n);

// Faa di Bruno weight n! / prod(mult_j! * (j!)^mult_j) for one partition.
double fdb_coefficient(int n, const std::vector<int>& mult);

}  // namespace rkdg
