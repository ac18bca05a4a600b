#include "icp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace icp {

namespace {

// compensated accumulation keeps the identity residuals at true roundoff
struct NeumaierSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

constexpr std::array<std::array<int, 2>, 4> kShift = {
    {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

// sites where u or any of its shifts can be nonzero
std::set<std::pair<int, int>> grown_support(const LatticeField& u) {
  std::set<std::pair<int, int>> sites;
  for (const auto& [mn, v] : u.entries()) {
    sites.insert(mn);
    for (const auto& s : kShift)
      sites.insert({mn.first - s[0], mn.second - s[1]});
  }
  return sites;
}

}  // namespace

std::array<int, 4> LatticeField::support_box() const {
  std::array<int, 4> box = {0, 0, 0, 0};
  bool first = true;
  for (const auto& [mn, v] : vals_) {
    if (first) {
      box = {mn.first, mn.first, mn.second, mn.second};
      first = false;
    } else {
      box[0] = std::min(box[0], mn.first);
      box[1] = std::max(box[1], mn.first);
      box[2] = std::min(box[2], mn.second);
      box[3] = std::max(box[3], mn.second);
    }
  }
  return box;
}

LatticeField difference(const LatticeField& u, Diff which) {
  const auto& s = kShift[static_cast<int>(which)];
  LatticeField out;
  for (const auto& mn : grown_support(u)) {
    const double d =
        u.at(mn.first + s[0], mn.second + s[1]) - u.at(mn.first, mn.second);
    if (d != 0.0) out.set(mn.first, mn.second, d);
  }
  return out;
}

LatticeField laplacian(const LatticeField& u) {
  LatticeField out;
  for (const auto& mn : grown_support(u)) {
    NeumaierSum acc;
    const double c = u.at(mn.first, mn.second);
    for (const auto& s : kShift)
      acc.add(u.at(mn.first + s[0], mn.second + s[1]) - c);
    if (acc.value() != 0.0) out.set(mn.first, mn.second, acc.value());
  }
  return out;
}

namespace {

double lp_norm(const LatticeField& u, double p) {
  if (p == 0.0 || std::isinf(p)) {
    double m = 0.0;
    for (const auto& [mn, v] : u.entries()) m = std::max(m, std::abs(v));
    return m;
  }
  NeumaierSum acc;
  for (const auto& [mn, v] : u.entries()) acc.add(std::pow(std::abs(v), p));
  return std::pow(acc.value(), 1.0 / p);
}

}  // namespace

double norm0(const LatticeField& u, double p) { return lp_norm(u, p); }

double norm1(const LatticeField& u, double p) {
  std::array<LatticeField, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = difference(u, static_cast<Diff>(i));
  if (p == 0.0 || std::isinf(p)) {
    double m = 0.0;
    for (const auto& f : d) m = std::max(m, lp_norm(f, p));
    return m;
  }
  NeumaierSum acc;
  for (const auto& f : d) acc.add(std::pow(lp_norm(f, p), p));
  return std::pow(acc.value(), 1.0 / p);
}

double norm2(const LatticeField& u, double p) {
  std::array<LatticeField, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = difference(u, static_cast<Diff>(i));
  if (p == 0.0 || std::isinf(p)) {
    double m = 0.0;
    for (const auto& f : d)
      for (int j = 0; j < 4; ++j)
        m = std::max(m, lp_norm(difference(f, static_cast<Diff>(j)), p));
    return m;
  }
  NeumaierSum acc;
  for (const auto& f : d)
    for (int j = 0; j < 4; ++j)
      acc.add(std::pow(lp_norm(difference(f, static_cast<Diff>(j)), p), p));
  return std::pow(acc.value(), 1.0 / p);
}

double lattice_dirichlet_energy(const LatticeField& u) {
  NeumaierSum acc;
  for (const auto& mn : grown_support(u)) {
    const double c = u.at(mn.first, mn.second);
    const double dx = u.at(mn.first + 1, mn.second) - c;
    const double dy = u.at(mn.first, mn.second + 1) - c;
    acc.add(dx * dx);
    acc.add(dy * dy);
  }
  return acc.value();
}

GreenResiduals green_identities_check(const LatticeField& f,
                                      const LatticeField& g) {
  GreenResiduals res;

  const double n12_sq_f = [&] {
    NeumaierSum acc;
    for (int i = 0; i < 4; ++i) {
      const LatticeField d = difference(f, static_cast<Diff>(i));
      for (const auto& [mn, v] : d.entries()) acc.add(v * v);
    }
    return acc.value();
  }();
  res.n12_vs_edges = n12_sq_f - 2.0 * lattice_dirichlet_energy(f);

  // (f, Dg) against the brute-force edge sum
  const LatticeField lg = laplacian(g);
  NeumaierSum pairing;
  for (const auto& [mn, v] : lg.entries())
    pairing.add(f.at(mn.first, mn.second) * v);
  NeumaierSum edges;
  std::set<std::pair<int, int>> sites = grown_support(f);
  for (const auto& mn : grown_support(g)) sites.insert(mn);
  for (const auto& mn : sites) {
    const double fc = f.at(mn.first, mn.second);
    const double gc = g.at(mn.first, mn.second);
    edges.add((f.at(mn.first + 1, mn.second) - fc) *
              (g.at(mn.first + 1, mn.second) - gc));
    edges.add((f.at(mn.first, mn.second + 1) - fc) *
              (g.at(mn.first, mn.second + 1) - gc));
  }
  res.green = pairing.value() + edges.value();

  const LatticeField lf = laplacian(f);
  NeumaierSum self;
  for (const auto& [mn, v] : lf.entries())
    self.add(f.at(mn.first, mn.second) * v);
  res.self = self.value() + 0.5 * n12_sq_f;

  res.second = norm0(lf, 2.0) - 0.5 * norm2(f, 2.0);
  return res;
}

double nonlinearity_F(double x) {
  return 2.0 * std::atan(std::exp(x)) - x - 0.5 * std::numbers::pi;
}

double nonlinearity_F_prime(double x) { return 1.0 / std::cosh(x) - 1.0; }

LatticeField semilinear_rhs(const LatticeField& u) {
  LatticeField out;
  for (const auto& mn : grown_support(u)) {
    NeumaierSum acc;
    const double c = u.at(mn.first, mn.second);
    for (const auto& s : kShift) {
      const double x = u.at(mn.first + s[0], mn.second + s[1]) - c;
      acc.add(x);
      acc.add(nonlinearity_F(x));
    }
    if (acc.value() != 0.0) out.set(mn.first, mn.second, acc.value());
  }
  return out;
}

}  // namespace icp
