#pragma once
#include <functional>
#include <memory>
#include <vector>

#include "rkdg/basis.hpp"
#include "rkdg/mesh.hpp"

namespace rkdg {

// Coefficient field with the same cell-major (m x (p+1)) layout as a
// solution; used for operator output and time-derivative fields.
using Field = std::vector<double>;

enum class Side { left, right };

// Piecewise polynomial in the scaled Legendre basis.  Stepping never
// mutates a solution in place; successors are built by value.
struct DGSolution {
    Mesh mesh;
    std::shared_ptr<const Basis> basis;
    Field c;       // cell-major, c[j*(p+1) + i]
    double t = 0.0;

    DGSolution() = default;
    DGSolution(const Mesh& mesh_, std::shared_ptr<const Basis> basis_, double t0 = 0.0)
        : mesh(mesh_), basis(std::move(basis_)),
          c(static_cast<size_t>(mesh_.m) * basis->n_modes(), 0.0), t(t0) {}

    int degree() const { return basis->degree(); }
    int n_modes() const { return basis->n_modes(); }
    size_t idx(int j, int i) const { return static_cast<size_t>(j) * n_modes() + i; }
    const double* cell(int j) const { return c.data() + idx(j, 0); }
    double* cell(int j) { return c.data() + idx(j, 0); }

    // Mean of the polynomial over cell j (the scaled constant mode).
    double cell_mean(int j) const;

    // l-th spatial derivative at x, evaluated in the owning cell.  On an
    // interior interface this takes the cell to the right; use eval_side
    // for a specific one-sided trace.  Orders above p return exactly 0.
    double eval(double x, int l = 0) const;

    // One-sided trace of the l-th derivative at interface j (j = 0..m).
    // side=right evaluates in cell j, side=left in cell j-1.
    double eval_side(int j, Side side, int l = 0) const;

    // Derivative of the cell-j polynomial at reference point xi, from an
    // arbitrary coefficient field with this solution's layout.
    double eval_field_ref(const Field& f, int j, double xi, int l = 0) const;
};

// L2 projection of g, cellwise Gauss quadrature with p+2 points.  Rejects
// non-finite samples of g.
DGSolution project_l2(const std::function<double(double)>& g, const Mesh& mesh,
                      std::shared_ptr<const Basis> basis, double t0 = 0.0);

// Composite Gauss quadrature of |u - g| with 4(p+2) points per cell.
double l1_distance(const DGSolution& u, const std::function<double(double)>& g);

// Total variation of the interface trace sequence (left and right edge
// values of every cell, walked in order).
double tv_from_traces(const DGSolution& u);

}  // namespace rkdg
