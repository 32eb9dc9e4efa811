#pragma once
#include <cmath>
#include <string>

#include "rkdg/errors.hpp"

namespace rkdg {

// Uniform 1D mesh on [a,b] with m cells.  Cell j covers
// [a + j*h, a + (j+1)*h]; interface j is the left edge of cell j.
struct Mesh {
    double a = 0.0;
    double b = 1.0;
    int m = 1;
    double h = 1.0;

    Mesh() = default;
    Mesh(double a_, double b_, int m_) : a(a_), b(b_), m(m_) {
        if (!(b > a) || m < 1)
            throw ConfigError("mesh requires b > a and at least one cell");
        h = (b - a) / m;
    }

    double length() const { return b - a; }
    double left_edge(int j) const { return a + j * h; }
    double right_edge(int j) const { return a + (j + 1) * h; }
    double center(int j) const { return a + (j + 0.5) * h; }

    // Cell index owning x; an interior interface belongs to the cell on
    // its right, x = b belongs to the last cell.
    int cell_of(double x) const {
        double tol = 1e-12 * length();
        if (x < a - tol || x > b + tol)
            throw ConfigError("point x=" + std::to_string(x) + " outside [" +
                              std::to_string(a) + "," + std::to_string(b) + "]");
        int j = static_cast<int>(std::floor((x - a) / h));
        if (j < 0) j = 0;
        if (j > m - 1) j = m - 1;
        return j;
    }

    // Map physical x in cell j to the reference coordinate in [-1,1].
    double to_ref(int j, double x) const { return 2.0 * (x - center(j)) / h; }
    double from_ref(int j, double xi) const { return center(j) + 0.5 * h * xi; }
};

}  // namespace rkdg
