#pragma once
#include <vector>

namespace rkdg {

// Gauss-Legendre rule with n points on [-1,1], exact for degree 2n-1.
struct QuadRule {
    std::vector<double> node;
    std::vector<double> weight;
};
QuadRule gauss_legendre(int n);

// Values of the scaled Legendre basis phi_i(xi) = sqrt((2i+1)/2) P_i(xi),
// i = 0..p, differentiated l times with respect to xi.  The scaling makes
// the basis orthonormal on [-1,1], so on a physical cell of width h the
// mass matrix is (h/2) times the identity.
std::vector<double> basis_values(int p, double xi, int l);

// Per-degree tables used by the operator and indicator assembly: quadrature
// nodes paired with basis values there, and edge derivatives up to order p.
class Basis {
  public:
    explicit Basis(int p);

    int degree() const { return p_; }
    int n_modes() const { return p_ + 1; }
    int n_quad() const { return nq_; }

    double qnode(int q) const { return rule_.node[q]; }
    double qweight(int q) const { return rule_.weight[q]; }

    // phi_i and phi_i' at quadrature node q.
    double val(int q, int i) const { return val_[q * (p_ + 1) + i]; }
    double der(int q, int i) const { return der_[q * (p_ + 1) + i]; }

    // l-th reference derivative of phi_i at an edge; side -1 or +1.
    double edge(int side, int l, int i) const {
        const auto& t = side < 0 ? edge_left_ : edge_right_;
        return t[l * (p_ + 1) + i];
    }

  private:
    int p_;
    int nq_;
    QuadRule rule_;
    std::vector<double> val_;
    std::vector<double> der_;
    std::vector<double> edge_left_;   // (p+1) derivative orders x (p+1) modes
    std::vector<double> edge_right_;
};

}  // namespace rkdg
