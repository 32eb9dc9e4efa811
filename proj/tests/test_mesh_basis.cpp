#include <cmath>
#include <memory>

#include "doctest.h"
#include "helpers.hpp"
#include "rkdg/basis.hpp"
#include "rkdg/errors.hpp"
#include "rkdg/mesh.hpp"
#include "rkdg/solution.hpp"

using namespace rkdg;
using testutil::Poly;

TEST_CASE("mesh geometry and cell lookup") {
    Mesh mesh(0.0, 10.0, 200);
    CHECK(mesh.h == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(mesh.left_edge(0) == 0.0);
    CHECK(mesh.right_edge(199) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(mesh.center(3) == doctest::Approx(0.175).epsilon(1e-14));

    // interior interface belongs to the right cell, x=b to the last cell
    CHECK(mesh.cell_of(0.05) == 1);
    CHECK(mesh.cell_of(10.0) == 199);
    CHECK(mesh.cell_of(0.0) == 0);
    CHECK(mesh.cell_of(0.1249) == 2);
    CHECK_THROWS_AS(mesh.cell_of(-0.5), ConfigError);
    CHECK_THROWS_AS(mesh.cell_of(10.5), ConfigError);
    CHECK_THROWS_AS(Mesh(1.0, 1.0, 4), ConfigError);
    CHECK_THROWS_AS(Mesh(0.0, 1.0, 0), ConfigError);

    double x = 0.1375;
    int j = mesh.cell_of(x);
    CHECK(mesh.from_ref(j, mesh.to_ref(j, x)) == doctest::Approx(x).epsilon(1e-15));
}

TEST_CASE("gauss quadrature integrates monomials exactly") {
    for (int n = 1; n <= 8; ++n) {
        QuadRule r = gauss_legendre(n);
        double wsum = 0.0;
        for (double w : r.weight) wsum += w;
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        for (int d = 0; d <= 2 * n - 1; ++d) {
            double got = 0.0;
            for (size_t q = 0; q < r.node.size(); ++q)
                got += r.weight[q] * std::pow(r.node[q], d);
            double want = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
            CHECK(std::abs(got - want) <= 1e-13);
        }
    }
}

TEST_CASE("basis values match hand-computed Legendre formulas") {
    double xi = 0.3;
    auto v = basis_values(3, xi, 0);
    CHECK(v[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(v[1] == doctest::Approx(std::sqrt(1.5) * xi).epsilon(1e-15));
    CHECK(v[2] ==
          doctest::Approx(std::sqrt(2.5) * 0.5 * (3 * xi * xi - 1)).epsilon(1e-14));
    CHECK(v[3] ==
          doctest::Approx(std::sqrt(3.5) * 0.5 * (5 * xi * xi * xi - 3 * xi)).epsilon(1e-14));

    auto d1 = basis_values(3, xi, 1);
    CHECK(d1[0] == 0.0);
    CHECK(d1[1] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
    CHECK(d1[2] == doctest::Approx(std::sqrt(2.5) * 3 * xi).epsilon(1e-14));

    auto d2 = basis_values(3, xi, 2);
    CHECK(d2[2] == doctest::Approx(std::sqrt(2.5) * 3).epsilon(1e-14));
    CHECK(d2[3] == doctest::Approx(std::sqrt(3.5) * 15 * xi).epsilon(1e-13));
}

TEST_CASE("mass matrix is (h/2) identity") {
    for (int p : {1, 3, 5}) {
        Basis basis(p);
        double h = 0.05;
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= p; ++j) {
                double s = 0.0;
                for (int q = 0; q < basis.n_quad(); ++q)
                    s += 0.5 * h * basis.qweight(q) * basis.val(q, i) * basis.val(q, j);
                double want = i == j ? 0.5 * h : 0.0;
                CHECK(std::abs(s - want) <= 1e-13);
            }
    }
}

TEST_CASE("projection of constants and linears is exact") {
    Mesh mesh(0.0, 2.0, 7);
    auto basis = std::make_shared<Basis>(2);

    DGSolution uc = project_l2([](double) { return 3.25; }, mesh, basis);
    for (int j = 0; j < mesh.m; ++j) {
        CHECK(uc.c[uc.idx(j, 0)] == doctest::Approx(3.25 * std::sqrt(2.0)).epsilon(1e-14));
        CHECK(std::abs(uc.c[uc.idx(j, 1)]) <= 1e-14);
        CHECK(std::abs(uc.c[uc.idx(j, 2)]) <= 1e-14);
        CHECK(uc.cell_mean(j) == doctest::Approx(3.25).epsilon(1e-14));
    }

    DGSolution ux = project_l2([](double x) { return x; }, mesh, basis);
    for (int s = 0; s < 1000; ++s) {
        double x = testutil::uniform(0.0, 2.0);
        CHECK(ux.eval(x) == doctest::Approx(x).epsilon(1e-12));
    }
}

TEST_CASE("projection round-trips degree-p piecewise polynomials") {
    Mesh mesh(-1.0, 3.0, 9);
    auto basis = std::make_shared<Basis>(3);
    DGSolution u(mesh, basis);
    for (auto& c : u.c) c = testutil::uniform(-1.0, 1.0);

    DGSolution v = project_l2([&](double x) { return u.eval(x); }, mesh, basis);
    for (int s = 0; s < 1000; ++s) {
        double x = testutil::uniform(-1.0, 3.0);
        double a = u.eval(x), b = v.eval(x);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("projection rejects non-finite data") {
    Mesh mesh(0.0, 1.0, 4);
    auto basis = std::make_shared<Basis>(1);
    CHECK_THROWS_AS(
        project_l2([](double x) { return 1.0 / (x - x); }, mesh, basis), ConfigError);
}

TEST_CASE("sine projection cellwise L2 residual scales like h^4.5") {
    // Oracle: 50-point composite quadrature of the squared residual per
    // cell.  For p=3 the per-cell L2 norm carries h^(p+1) plus the sqrt(h)
    // of the cell measure; the frozen band brackets |sin''''| <= 1.
    Mesh mesh(0.0, 10.0, 200);
    auto basis = std::make_shared<Basis>(3);
    DGSolution u = project_l2([](double x) { return std::sin(x); }, mesh, basis);

    QuadRule fine = gauss_legendre(50);
    double worst = 0.0;
    for (int j = 0; j < mesh.m; ++j) {
        double s = 0.0;
        for (size_t q = 0; q < fine.node.size(); ++q) {
            double x = mesh.from_ref(j, fine.node[q]);
            double r = u.eval(x) - std::sin(x);
            s += 0.5 * mesh.h * fine.weight[q] * r * r;
        }
        worst = std::max(worst, std::sqrt(s));
    }
    double ratio = worst / std::pow(mesh.h, 4.5);
    CHECK(ratio <= 5e-4);
    CHECK(ratio >= 5e-5);
}

TEST_CASE("eval differentiates stored polynomials") {
    Mesh mesh(0.0, 4.0, 8);
    auto basis = std::make_shared<Basis>(2);
    DGSolution u = project_l2([](double x) { return x * x; }, mesh, basis);
    for (double x : {0.3, 1.7, 2.2, 3.9})
        CHECK(u.eval(x, 1) == doctest::Approx(2 * x).epsilon(1e-12));

    DGSolution c = project_l2([](double) { return 5.0; }, mesh, basis);
    CHECK(std::abs(c.eval(1.3, 1)) <= 1e-12);
    CHECK(u.eval(1.3, 3) == 0.0);  // above degree: exactly zero
    CHECK(u.eval(1.3, 7) == 0.0);
    CHECK_THROWS_AS(u.eval(-0.5), ConfigError);
}

TEST_CASE("second-derivative eval of a sine projection") {
    Mesh mesh(0.0, 10.0, 200);
    auto basis = std::make_shared<Basis>(3);
    DGSolution u = project_l2([](double x) { return std::sin(x); }, mesh, basis);
    double err = std::abs(u.eval(1.0, 2) - (-std::sin(1.0)));
    CHECK(err <= 1.0 * mesh.h * mesh.h);  // O(h^(p-1)) with frozen constant 1
}

TEST_CASE("one-sided traces") {
    Mesh mesh(0.0, 1.0, 4);
    auto basis = std::make_shared<Basis>(1);

    DGSolution lin = project_l2([](double x) { return 2 * x - 1; }, mesh, basis);
    for (int j = 1; j < mesh.m; ++j)
        CHECK(lin.eval_side(j, Side::left) ==
              doctest::Approx(lin.eval_side(j, Side::right)).epsilon(1e-13));

    DGSolution two(mesh, basis);
    two.c[two.idx(0, 0)] = 1.0 * std::sqrt(2.0);
    two.c[two.idx(1, 0)] = 2.0 * std::sqrt(2.0);
    CHECK(two.eval_side(1, Side::left) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(two.eval_side(1, Side::right) == doctest::Approx(2.0).epsilon(1e-14));

    CHECK_THROWS_WITH_AS(lin.eval_side(0, Side::left),
                         doctest::Contains("boundary model"), ConfigError);
    CHECK_THROWS_AS(lin.eval_side(mesh.m, Side::right), ConfigError);
    CHECK_THROWS_AS(lin.eval_side(-1, Side::right), ConfigError);
}

TEST_CASE("cubic projected onto quadratics: closed-form trace oracle") {
    // proj(x^3) = x^3 - (2/5)(h/2)^3 P3(xi), so the second x-derivative is
    // 6x - 3h*xi: 6x_c at the cell center, 6x -+ 3h at the right/left edge.
    Mesh mesh(0.0, 2.0, 5);
    auto basis = std::make_shared<Basis>(2);
    DGSolution u = project_l2([](double x) { return x * x * x; }, mesh, basis);
    double h = mesh.h;

    for (int j = 0; j < mesh.m; ++j)
        CHECK(u.eval(mesh.center(j), 2) == doctest::Approx(6 * mesh.center(j)).epsilon(1e-11));
    for (int j = 1; j < mesh.m; ++j) {
        double xI = mesh.left_edge(j);
        CHECK(u.eval_side(j, Side::left, 2) == doctest::Approx(6 * xI - 3 * h).epsilon(1e-10));
        CHECK(u.eval_side(j, Side::right, 2) == doctest::Approx(6 * xI + 3 * h).epsilon(1e-10));
    }
}

TEST_CASE("trace total variation of a monotone function") {
    Mesh mesh(0.0, 1.0, 16);
    auto basis = std::make_shared<Basis>(2);
    DGSolution u = project_l2([](double x) { return 3 * x + 1; }, mesh, basis);
    CHECK(tv_from_traces(u) == doctest::Approx(3.0).epsilon(1e-12));
}
