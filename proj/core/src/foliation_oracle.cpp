#include "isospec/foliation_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "isospec/eigensolvers.hpp"

namespace isospec {

namespace {

using Sym3 = TracelessSymmetric3;

Sym3 add(const Sym3& a, const Sym3& b) {
  return {a.xx + b.xx, a.yy + b.yy, a.zz + b.zz,
          a.xy + b.xy, a.xz + b.xz, a.yz + b.yz};
}

Sym3 scale(const Sym3& a, double s) {
  return {a.xx * s, a.yy * s, a.zz * s, a.xy * s, a.xz * s, a.yz * s};
}

// Hilbert-Schmidt inner product trace(AB) on symmetric matrices.
double dot(const Sym3& a, const Sym3& b) {
  return a.xx * b.xx + a.yy * b.yy + a.zz * b.zz +
         2.0 * (a.xy * b.xy + a.xz * b.xz + a.yz * b.yz);
}

using Chart = std::function<Sym3(const std::array<double, 4>&)>;  // (b,x1,x2,x3)

Sym3 diff1_step(const Chart& f, std::array<double, 4> u, int mu, double h) {
  u[mu] += h;
  const Sym3 plus = f(u);
  u[mu] -= 2.0 * h;
  const Sym3 minus = f(u);
  return scale(add(plus, scale(minus, -1.0)), 1.0 / (2.0 * h));
}

// Central difference with one Richardson step: error O(h^4).
Sym3 diff1(const Chart& f, const std::array<double, 4>& u, int mu, double h) {
  const Sym3 dh = diff1_step(f, u, mu, h);
  const Sym3 dh2 = diff1_step(f, u, mu, 0.5 * h);
  return scale(add(scale(dh2, 4.0), scale(dh, -1.0)), 1.0 / 3.0);
}

Sym3 diff2_step(const Chart& f, std::array<double, 4> u, int mu, int nu, double h) {
  if (mu == nu) {
    const Sym3 center = f(u);
    u[mu] += h;
    const Sym3 plus = f(u);
    u[mu] -= 2.0 * h;
    const Sym3 minus = f(u);
    return scale(add(add(plus, minus), scale(center, -2.0)), 1.0 / (h * h));
  }
  std::array<double, 4> v = u;
  v[mu] += h; v[nu] += h;
  const Sym3 pp = f(v);
  v = u; v[mu] += h; v[nu] -= h;
  const Sym3 pm = f(v);
  v = u; v[mu] -= h; v[nu] += h;
  const Sym3 mp = f(v);
  v = u; v[mu] -= h; v[nu] -= h;
  const Sym3 mm = f(v);
  return scale(add(add(pp, mm), scale(add(pm, mp), -1.0)), 1.0 / (4.0 * h * h));
}

Sym3 diff2(const Chart& f, const std::array<double, 4>& u, int mu, int nu, double h) {
  const Sym3 dh = diff2_step(f, u, mu, nu, h);
  const Sym3 dh2 = diff2_step(f, u, mu, nu, 0.5 * h);
  return scale(add(scale(dh2, 4.0), scale(dh, -1.0)), 1.0 / 3.0);
}

// Solve the 3x3 SPD system G c = v in place via Cholesky.
std::array<double, 3> solve_spd3(const std::array<std::array<double, 3>, 3>& g,
                                 const std::array<double, 3>& v) {
  std::array<std::array<double, 3>, 3> l{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) throw std::domain_error("chart metric degenerate at this point");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  std::array<double, 3> y{}, c{};
  for (int i = 0; i < 3; ++i) {
    double s = v[i];
    for (int k = 0; k < i; ++k) s -= l[i][k] * y[k];
    y[i] = s / l[i][i];
  }
  for (int i = 2; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < 3; ++k) s -= l[k][i] * c[k];
    c[i] = s / l[i][i];
  }
  return c;
}

Chart standard_chart(double r0) {
  return [r0](const std::array<double, 4>& u) {
    return chart_point({u[0], u[1], u[2], u[3], r0});
  };
}

Chart perturbed_chart(double r0, double amplitude) {
  return [r0, amplitude](const std::array<double, 4>& u) {
    const double f1 = amplitude * std::sin(u[3] + 2.0 * u[0]);
    const double f2 = amplitude * std::cos(2.0 * u[3] - u[0]);
    return chart_point({u[0], u[1] + f1, u[2] + f2, u[3], r0});
  };
}

// The six second-fundamental-form Christoffel symbols of the (b, x3) slice:
// Gamma^l_ij for l in {x1, x2} and ij in {00, 33, 03}.
std::array<double, 6> slice_christoffels(const Chart& chart, double b, double x3) {
  const double h = 1e-4;
  const std::array<double, 4> u{b, 0.0, 0.0, x3};

  auto metric = [&](const std::array<double, 4>& p) {
    std::array<Sym3, 4> t;
    for (int mu = 0; mu < 4; ++mu) t[mu] = diff1(chart, p, mu, h);
    std::array<std::array<double, 4>, 4> g{};
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) g[mu][nu] = g[nu][mu] = dot(t[mu], t[nu]);
    return g;
  };

  // dg[sigma][mu][nu] by central differences of the metric itself.
  std::array<std::array<std::array<double, 4>, 4>, 4> dg{};
  for (int sigma = 0; sigma < 4; ++sigma) {
    std::array<double, 4> up = u, um = u;
    up[sigma] += h;
    um[sigma] -= h;
    const auto gp = metric(up);
    const auto gm = metric(um);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        dg[sigma][mu][nu] = (gp[mu][nu] - gm[mu][nu]) / (2.0 * h);
  }

  // Invert the 4x4 metric by Gauss-Jordan with partial pivoting.
  auto g = metric(u);
  std::array<std::array<double, 8>, 4> aug{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) aug[i][j] = g[i][j];
    aug[i][4 + i] = 1.0;
  }
  for (int col = 0; col < 4; ++col) {
    int p = col;
    for (int i = col + 1; i < 4; ++i)
      if (std::abs(aug[i][col]) > std::abs(aug[p][col])) p = i;
    if (aug[p][col] == 0.0) throw std::domain_error("chart metric singular");
    std::swap(aug[col], aug[p]);
    const double inv = 1.0 / aug[col][col];
    for (int j = 0; j < 8; ++j) aug[col][j] *= inv;
    for (int i = 0; i < 4; ++i) {
      if (i == col) continue;
      const double f = aug[i][col];
      for (int j = 0; j < 8; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::array<std::array<double, 4>, 4> ginv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ginv[i][j] = aug[i][4 + j];

  auto gamma = [&](int l, int i, int j) {
    double s = 0.0;
    for (int sigma = 0; sigma < 4; ++sigma) {
      s += ginv[l][sigma] * (dg[i][sigma][j] + dg[j][sigma][i] - dg[sigma][i][j]);
    }
    return 0.5 * s;
  };

  return {gamma(1, 0, 0), gamma(2, 0, 0),
          gamma(1, 3, 3), gamma(2, 3, 3),
          gamma(1, 0, 3), gamma(2, 0, 3)};
}

GeodesicSliceReport slice_report(const Chart& chart,
                                 const std::vector<double>& b_samples) {
  static const double x3_samples[] = {0.3, 1.1, 2.0};
  double worst = 0.0;
  for (double b : b_samples) {
    for (double x3 : x3_samples) {
      for (double gamma : slice_christoffels(chart, b, x3)) {
        worst = std::max(worst, std::abs(gamma));
      }
    }
  }
  GeodesicSliceReport report;
  report.max_abs_christoffel = worst;
  report.tolerance = 1e-6;
  report.totally_geodesic = worst < report.tolerance;
  return report;
}

}  // namespace

CurvatureReport closed_form_curvature_report(double b, double r0) {
  const PrincipalCurvatures k = principal_curvatures(b, r0);
  CurvatureReport report;
  report.k1 = k.k1;
  report.k2 = k.k2;
  report.k3 = k.k3;
  report.h = mean_curvature(b, r0);
  report.scal = scalar_curvature(b, r0);
  report.source = CurvatureSource::closed_form;
  return report;
}

CurvatureReport numeric_shape_operator(double b, const std::array<double, 3>& x,
                                       double r0, double h_step) {
  const Chart chart = standard_chart(r0);
  const std::array<double, 4> u{b, x[0], x[1], x[2]};

  std::array<Sym3, 3> tangent;
  for (int a = 0; a < 3; ++a) tangent[a] = diff1(chart, u, a + 1, h_step);
  const Sym3 db = diff1(chart, u, 0, h_step);

  std::array<std::array<double, 3>, 3> g{};
  for (int a = 0; a < 3; ++a)
    for (int c = a; c < 3; ++c) g[a][c] = g[c][a] = dot(tangent[a], tangent[c]);

  // Unit normal inside the sphere: b-derivative Gram-Schmidted against the
  // leaf tangents.
  const std::array<double, 3> coeff =
      solve_spd3(g, {dot(db, tangent[0]), dot(db, tangent[1]), dot(db, tangent[2])});
  Sym3 normal = db;
  for (int a = 0; a < 3; ++a) normal = add(normal, scale(tangent[a], -coeff[a]));
  normal = scale(normal, 1.0 / std::sqrt(dot(normal, normal)));

  std::array<std::array<double, 3>, 3> second{};
  for (int a = 0; a < 3; ++a) {
    for (int c = a; c < 3; ++c) {
      const Sym3 hess = diff2(chart, u, a + 1, c + 1, h_step);
      second[a][c] = second[c][a] = dot(hess, normal);
    }
  }

  // Shape operator eigenvalues: eig(G^-1 H) = eig(L^-1 H L^-T), G = L L^T.
  std::array<std::array<double, 3>, 3> l{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = g[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) throw std::domain_error("chart metric degenerate at this point");
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  // W = L^-1 H, then M = W L^-T by forward substitutions.
  std::array<std::array<double, 3>, 3> w{};
  for (int col = 0; col < 3; ++col) {
    for (int i = 0; i < 3; ++i) {
      double s = second[i][col];
      for (int k = 0; k < i; ++k) s -= l[i][k] * w[k][col];
      w[i][col] = s / l[i][i];
    }
  }
  std::array<std::array<double, 3>, 3> m{};
  for (int row = 0; row < 3; ++row) {
    for (int i = 0; i < 3; ++i) {
      double s = w[row][i];
      for (int k = 0; k < i; ++k) s -= l[i][k] * m[row][k];
      m[row][i] = s / l[i][i];
    }
  }

  std::vector<double> flat(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) flat[i * 3 + j] = 0.5 * (m[i][j] + m[j][i]);
  std::vector<double> ev = eigvals_dense_symmetric(DenseSymmetric(3, std::move(flat)));

  // The chart does not orient the normal; fix the sign so that the mean
  // curvature sign agrees with 2b-1.
  const double sum = ev[0] + ev[1] + ev[2];
  if (sum * (2.0 * b - 1.0) < 0.0) {
    ev = {-ev[2], -ev[1], -ev[0]};
  }

  CurvatureReport report;
  report.k1 = ev[0];
  report.k2 = ev[1];
  report.k3 = ev[2];
  report.h = (ev[0] + ev[1] + ev[2]) / 3.0;
  report.scal = (6.0 - r0 * r0 * (ev[0] * ev[0] + ev[1] * ev[1] + ev[2] * ev[2]) +
                 9.0 * r0 * r0 * report.h * report.h) /
                (r0 * r0);
  report.source = CurvatureSource::numeric;
  report.step_warning = !(h_step >= 1e-6 && h_step <= 1e-3);
  return report;
}

GeodesicSliceReport check_totally_geodesic_leaf(const std::vector<double>& b_samples,
                                                double r0) {
  return slice_report(standard_chart(r0), b_samples);
}

GeodesicSliceReport check_perturbed_slice(const std::vector<double>& b_samples,
                                          double r0, double amplitude) {
  return slice_report(perturbed_chart(r0, amplitude), b_samples);
}

}  // namespace isospec
