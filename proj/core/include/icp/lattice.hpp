#pragma once

#include <array>
#include <map>
#include <vector>

namespace icp {

// Finitely supported real field on the square lattice; zero off support.
class LatticeField {
 public:
  double at(int m, int n) const {
    auto it = vals_.find({m, n});
    return it == vals_.end() ? 0.0 : it->second;
  }
  void set(int m, int n, double v) {
    if (v == 0.0)
      vals_.erase({m, n});
    else
      vals_[{m, n}] = v;
  }
  const std::map<std::pair<int, int>, double>& entries() const {
    return vals_;
  }
  bool empty() const { return vals_.empty(); }
  // {m_min, m_max, n_min, n_max}; undefined on empty fields
  std::array<int, 4> support_box() const;

 private:
  std::map<std::pair<int, int>, double> vals_;
};

enum class Diff { D1, D2, D3, D4 };  // +m, +n, -m, -n shifts

// (D1 u)(m,n) = u(m+1,n) - u(m,n), and cyclically for the other shifts.
LatticeField difference(const LatticeField& u, Diff which);

// Sum of the four difference operators (4-point graph Laplacian).
LatticeField laplacian(const LatticeField& u);

// p in {1, 2} or infinity (pass p = 0 for the sup norm).
double norm0(const LatticeField& u, double p);
// N_1: over the four first differences; N_2: over the sixteen second ones.
double norm1(const LatticeField& u, double p);
double norm2(const LatticeField& u, double p);

// Sum over lattice edges touching the support of (u_i - u_j)^2.
double lattice_dirichlet_energy(const LatticeField& u);

struct GreenResiduals {
  double n12_vs_edges;   // N_{1,2}^2 - 2 sum_E (u_i-u_j)^2
  double green;          // (f, Dg) + sum_E (f_i-f_j)(g_i-g_j)
  double self;           // (f, Df) + 1/2 N_{1,2}^2(f)
  double second;         // N_{0,2}(Df) - 1/2 N_{2,2}(f)
};
GreenResiduals green_identities_check(const LatticeField& f,
                                      const LatticeField& g);

// F(x) = 2 arctan(e^x) - x - pi/2; odd, F(0) = F'(0) = 0.
double nonlinearity_F(double x);
double nonlinearity_F_prime(double x);

// Delta u + sum over neighbors of F(u_j - u_i); equals minus the vertex
// curvature of the square-lattice pattern at right-angle weights.
LatticeField semilinear_rhs(const LatticeField& u);

}  // namespace icp
