#include "isospec/rep_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isospec {

namespace {

void require_interior(double b) {
  if (!(b > 0.0 && b < 1.0)) {
    throw std::domain_error("Laplacian coefficients are singular outside b in (0,1)");
  }
}

void require_radius(double r) {
  if (!(r > 0.0)) throw std::domain_error("leaf radius must be positive");
}

void require_m(int m, int lowest) {
  if (m < lowest) throw std::invalid_argument("representation index m too small");
}

// i^p for integer p.
Complex i_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

double sign_pow(int p) { return p % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& other) const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Complex aik = at(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) += aik * other.at(k, j);
    }
  return r;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      m = std::max(m, std::abs(at(i, j) - other.at(i, j)));
  return m;
}

GeneratorMatrices generator_matrices(int m) {
  require_m(m, 0);
  const std::size_t n = m + 1;
  GeneratorMatrices g{m, ComplexMatrix(n), ComplexMatrix(n), ComplexMatrix(n)};
  for (int k = 0; k <= m; ++k) {
    // Ladder amplitudes in the orthonormal basis.
    const double down = std::sqrt(static_cast<double>(k) * (m - k + 1));
    const double up = std::sqrt(static_cast<double>(k + 1) * (m - k));
    if (k > 0) {
      g.rho_i.at(k - 1, k) = down;
      g.rho_k.at(k - 1, k) = Complex(0, -down);
    }
    if (k < m) {
      g.rho_i.at(k + 1, k) = -up;
      g.rho_k.at(k + 1, k) = Complex(0, -up);
    }
    g.rho_j.at(k, k) = Complex(0, m - 2 * k);
  }
  return g;
}

LaplacianCoefficients laplacian_coefficients(double b, double r) {
  require_interior(b);
  require_radius(r);
  const double w = (1.0 - b + b * b) / (3.0 * r * r);
  return {w / ((1.0 - b) * (1.0 - b)), w, w / (b * b)};
}

DenseSymmetric full_casimir(int m, double b, double r) {
  require_m(m, 0);
  const LaplacianCoefficients c = laplacian_coefficients(b, r);
  const GeneratorMatrices g = generator_matrices(m);
  const std::size_t n = m + 1;

  const ComplexMatrix i2 = g.rho_i.multiply(g.rho_i);
  const ComplexMatrix j2 = g.rho_j.multiply(g.rho_j);
  const ComplexMatrix k2 = g.rho_k.multiply(g.rho_k);

  std::vector<double> entries(n * n);
  double imag_residue = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const Complex v = -(c.c_i * i2.at(p, q) + c.c_j * j2.at(p, q) +
                          c.c_k * k2.at(p, q));
      imag_residue = std::max(imag_residue, std::abs(v.imag()));
      entries[p * n + q] = v.real();
    }
  }
  if (imag_residue > 1e-12 * (1.0 + c.c_i + c.c_j + c.c_k) * n * n) {
    throw std::logic_error("Casimir assembly left an imaginary residue");
  }
  return DenseSymmetric(n, std::move(entries));
}

ComplexMatrix q8_action_on_Qm(Q8Element g, int m) {
  require_m(m, 0);
  ComplexMatrix a(m + 1);
  for (int k = 0; k <= m; ++k) {
    switch (g) {
      case Q8Element::one:
        a.at(k, k) = 1.0;
        break;
      case Q8Element::minus_one:
        a.at(k, k) = sign_pow(m);
        break;
      case Q8Element::i:  // f(z2, -z1)
        a.at(m - k, k) = sign_pow(m - k);
        break;
      case Q8Element::minus_i:  // f(-z2, z1)
        a.at(m - k, k) = sign_pow(k);
        break;
      case Q8Element::j:  // f(-i z1, i z2)
        a.at(k, k) = sign_pow(k) * i_power(m);
        break;
      case Q8Element::minus_j:  // f(i z1, -i z2)
        a.at(k, k) = sign_pow(m - k) * i_power(m);
        break;
      case Q8Element::k:  // f(-i z2, -i z1)
        a.at(m - k, k) = i_power(-m);  // (-i)^m
        break;
      case Q8Element::minus_k:  // f(i z2, i z1)
        a.at(m - k, k) = i_power(m);
        break;
    }
  }
  return a;
}

DenseSymmetric isotypic_casimir(int m, double b, double r, Bundle bundle) {
  require_m(m, 0);
  const std::size_t n = m + 1;

  // Character projector; an orthogonal projector, so its trace is the
  // isotypic dimension.
  ComplexMatrix proj(n);
  for (Q8Element g : q8_elements()) {
    const ComplexMatrix a = q8_action_on_Qm(g, m);
    const double chi = character(bundle, g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) proj.at(i, j) += chi / 8.0 * a.at(i, j);
  }
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += proj.at(i, i).real();
  const int dim = static_cast<int>(std::lround(trace));
  if (dim == 0) return DenseSymmetric();

  // Orthonormal basis of the image: pivoted Gram-Schmidt on the columns.
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = proj.at(i, j);

  auto cdot = [n](const std::vector<Complex>& x, const std::vector<Complex>& y) {
    Complex s{};
    for (std::size_t i = 0; i < n; ++i) s += std::conj(x[i]) * y[i];
    return s;
  };

  std::vector<std::vector<Complex>> basis;
  for (int step = 0; step < dim; ++step) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double norm = cdot(cols[j], cols[j]).real();
      if (norm > best_norm) {
        best_norm = norm;
        best = j;
      }
    }
    if (best_norm < 1e-18) {
      throw std::logic_error("isotypic projector rank disagrees with its trace");
    }
    std::vector<Complex> v = cols[best];
    const double inv = 1.0 / std::sqrt(best_norm);
    for (auto& x : v) x *= inv;
    for (auto& col : cols) {
      const Complex overlap = cdot(v, col);
      for (std::size_t i = 0; i < n; ++i) col[i] -= overlap * v[i];
    }
    basis.push_back(std::move(v));
  }

  // Restriction of the Casimir to the isotypic subspace.
  const DenseSymmetric casimir = full_casimir(m, b, r);
  std::vector<double> entries(static_cast<std::size_t>(dim) * dim);
  double imag_residue = 0.0;
  for (int a = 0; a < dim; ++a) {
    std::vector<Complex> cb(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) cb[i] += casimir(i, j) * basis[a][j];
    }
    for (int p = 0; p < dim; ++p) {
      const Complex v = cdot(basis[p], cb);
      imag_residue = std::max(imag_residue, std::abs(v.imag()));
      entries[static_cast<std::size_t>(p) * dim + a] = v.real();
    }
  }
  if (imag_residue > 1e-9 * (1.0 + casimir.max_abs_entry())) {
    throw std::logic_error("isotypic Casimir block is not real");
  }
  return DenseSymmetric(dim, std::move(entries));
}

namespace {

// Tridiagonal entry tables from the two Casimir block theorems. The
// assembly below mirrors the rational-mode construction exactly; the two
// must stay in lockstep.

std::size_t omega_size(int m) {
  return m % 2 == 1 ? static_cast<std::size_t>((m + 1) / 2)
                    : static_cast<std::size_t>(m / 2);
}

SymTridiagonal omega1_entries(int m, double b, OmegaVariant variant, double r) {
  const double w = 1.0 - b + b * b;
  const double b2 = b * b;
  const double ob2 = (1.0 - b) * (1.0 - b);
  const double u = (1.0 - 2.0 * b + 2.0 * b2) / (2.0 * b2 * ob2);
  const double v = w * (1.0 - 2.0 * b) / (6.0 * b2 * ob2);
  const double inv_r2 = 1.0 / (r * r);

  const std::size_t size = omega_size(m);
  std::vector<double> diag(size), off(size > 0 ? size - 1 : 0);
  if (m % 2 == 1) {
    const int last = (m - 1) / 2;
    for (int i = 0; i <= last; ++i) {
      if (i == last) {
        diag[i] = w / 3.0 *
                  (static_cast<double>(m - 1) * (m + 2) / (4.0 * b2) +
                   static_cast<double>(3 * m * m + 3 * m - 2) / (4.0 * ob2) + 1.0);
      } else {
        diag[i] = w / 3.0 *
                  (u * (4.0 * i * (m - i) + m) +
                   static_cast<double>(2 * i - m) * (2 * i - m));
      }
      if (i < last) {
        off[i] = v * std::sqrt(static_cast<double>(i + 1) * (m - i) * (2 * i + 1) *
                               (2 * m - 2 * i - 1));
      }
    }
  } else {
    const int last = (m - 2) / 2;
    for (int i = 0; i <= last; ++i) {
      if (i == last) {
        diag[i] = w / 3.0 *
                  (static_cast<double>(3 * m * m + 3 * m - 2) / (4.0 * b2) +
                   static_cast<double>(m - 1) * (m + 2) / (4.0 * ob2) + 1.0);
      } else {
        const double coupling = variant == OmegaVariant::published
                                    ? (2.0 * i + 1) * (2 * m - 2 * i + 1)
                                    : (2.0 * i + 1) * (2 * m - 2 * i - 1);
        diag[i] = w / 3.0 *
                  (u * (coupling + m) +
                   static_cast<double>(2 * i + 1 - m) * (2 * i + 1 - m));
      }
      if (i < last) {
        off[i] = v * std::sqrt(static_cast<double>(i + 1) * (m - i - 1) *
                               (2 * i + 3) * (2 * m - 2 * i - 1));
      }
    }
  }
  for (auto& d : diag) d *= inv_r2;
  for (auto& e : off) e *= inv_r2;
  return SymTridiagonal(std::move(diag), std::move(off));
}

SymTridiagonal omega2_entries(int m, double b, OmegaVariant variant, double r) {
  const double w = 1.0 - b + b * b;
  const double b2 = b * b;
  const double ob2 = (1.0 - b) * (1.0 - b);
  const double u = (1.0 - 2.0 * b + 2.0 * b2) / (2.0 * b2 * ob2);
  const double u_published = (1.0 - 2.0 * b + b2) / (2.0 * b2 * ob2);
  const double v = w * (1.0 - 2.0 * b) / (6.0 * b2 * ob2);
  const double inv_r2 = 1.0 / (r * r);

  const std::size_t size = omega_size(m);
  std::vector<double> diag(size), off(size > 0 ? size - 1 : 0);
  if (m % 2 == 1) {
    const int last = (m - 1) / 2;
    for (int i = 0; i <= last; ++i) {
      diag[i] = w / 3.0 *
                (u * (4.0 * i * (m - i - 1) + 3 * m - 1) +
                 static_cast<double>(m - 2 * i - 1) * (m - 2 * i - 1));
      if (i < last) {
        if (i + 1 == last) {
          // Corner entries next to the last index carry the 1/sqrt(2) weight.
          off[i] = v / std::sqrt(2.0) *
                   std::sqrt(static_cast<double>(m - 1) * m * (m + 1) * (m + 2));
        } else {
          off[i] = v * std::sqrt(static_cast<double>(i + 1) * (2 * i + 3) *
                                 (m - i - 1) * (2 * m - 2 * i - 1));
        }
      }
    }
  } else {
    const int last = (m - 2) / 2;
    const double ud = variant == OmegaVariant::published ? u_published : u;
    for (int i = 0; i <= last; ++i) {
      diag[i] = w / 3.0 *
                (ud * (4.0 * i * (m - i) + m) +
                 static_cast<double>(m - 2 * i) * (m - 2 * i));
      if (i < last) {
        off[i] = v * std::sqrt(static_cast<double>(i + 1) * (2 * i + 1) * (m - i) *
                               (2 * m - 2 * i - 1));
      }
    }
  }
  for (auto& d : diag) d *= inv_r2;
  for (auto& e : off) e *= inv_r2;
  return SymTridiagonal(std::move(diag), std::move(off));
}

}  // namespace

CasimirMatrix omega1(int m, double b, double r, OmegaVariant variant) {
  require_m(m, 1);
  require_interior(b);
  require_radius(r);
  return {Bundle::eta1, m, b, r, omega1_entries(m, b, variant, r)};
}

CasimirMatrix omega2(int m, double b, double r, OmegaVariant variant) {
  require_m(m, 1);
  require_interior(b);
  require_radius(r);
  return {Bundle::eta2, m, b, r, omega2_entries(m, b, variant, r)};
}

CasimirMatrix omega3(int m, double b, double r, OmegaVariant variant) {
  require_m(m, 1);
  require_interior(b);
  require_radius(r);
  return {Bundle::eta3, m, b, r, omega1_entries(m, 1.0 - b, variant, r)};
}

CasimirMatrix omega(Bundle bundle, int m, double b, double r,
                    const OmegaOptions& options) {
  switch (bundle) {
    case Bundle::eta1: return omega1(m, b, r, options.omega1);
    case Bundle::eta2: return omega2(m, b, r, options.omega2);
    case Bundle::eta3: return omega3(m, b, r, options.omega1);
  }
  throw std::invalid_argument("invalid bundle");
}

namespace {

void require_interior_rational(const Rational& b) {
  if (!(b > 0 && b < 1)) {
    throw std::domain_error("rational-mode b must lie in (0,1)");
  }
}

RationalTridiagonal omega1_entries_rational(int m, const Rational& b,
                                            OmegaVariant variant) {
  const Rational w = 1 - b + b * b;
  const Rational b2 = b * b;
  const Rational ob2 = (1 - b) * (1 - b);
  const Rational u = (1 - 2 * b + 2 * b2) / (2 * b2 * ob2);
  const Rational v = w * (1 - 2 * b) / (6 * b2 * ob2);

  const std::size_t size = omega_size(m);
  RationalTridiagonal t;
  t.diag.resize(size);
  t.off_coeff.resize(size > 0 ? size - 1 : 0);
  t.off_radicand.resize(t.off_coeff.size());
  const long lm = m;
  if (m % 2 == 1) {
    const int last = (m - 1) / 2;
    for (int i = 0; i <= last; ++i) {
      if (i == last) {
        t.diag[i] = w / 3 *
                    (Rational((lm - 1) * (lm + 2)) / (4 * b2) +
                     Rational(3 * lm * lm + 3 * lm - 2) / (4 * ob2) + 1);
      } else {
        t.diag[i] = w / 3 *
                    (u * (4L * i * (lm - i) + lm) +
                     Rational((2L * i - lm) * (2L * i - lm)));
      }
      if (i < last) {
        t.off_coeff[i] = v;
        t.off_radicand[i] = (i + 1L) * (lm - i) * (2L * i + 1) * (2 * lm - 2 * i - 1);
      }
    }
  } else {
    const int last = (m - 2) / 2;
    for (int i = 0; i <= last; ++i) {
      if (i == last) {
        t.diag[i] = w / 3 *
                    (Rational(3 * lm * lm + 3 * lm - 2) / (4 * b2) +
                     Rational((lm - 1) * (lm + 2)) / (4 * ob2) + 1);
      } else {
        const long coupling = variant == OmegaVariant::published
                                  ? (2L * i + 1) * (2 * lm - 2 * i + 1)
                                  : (2L * i + 1) * (2 * lm - 2 * i - 1);
        t.diag[i] = w / 3 *
                    (u * (coupling + lm) +
                     Rational((2L * i + 1 - lm) * (2L * i + 1 - lm)));
      }
      if (i < last) {
        t.off_coeff[i] = v;
        t.off_radicand[i] =
            (i + 1L) * (lm - i - 1) * (2L * i + 3) * (2 * lm - 2 * i - 1);
      }
    }
  }
  return t;
}

RationalTridiagonal omega2_entries_rational(int m, const Rational& b,
                                            OmegaVariant variant) {
  const Rational w = 1 - b + b * b;
  const Rational b2 = b * b;
  const Rational ob2 = (1 - b) * (1 - b);
  const Rational u = (1 - 2 * b + 2 * b2) / (2 * b2 * ob2);
  const Rational u_published = (1 - 2 * b + b2) / (2 * b2 * ob2);
  const Rational v = w * (1 - 2 * b) / (6 * b2 * ob2);

  const std::size_t size = omega_size(m);
  RationalTridiagonal t;
  t.diag.resize(size);
  t.off_coeff.resize(size > 0 ? size - 1 : 0);
  t.off_radicand.resize(t.off_coeff.size());
  const long lm = m;
  if (m % 2 == 1) {
    const int last = (m - 1) / 2;
    for (int i = 0; i <= last; ++i) {
      t.diag[i] = w / 3 *
                  (u * (4L * i * (lm - i - 1) + 3 * lm - 1) +
                   Rational((lm - 2 * i - 1) * (lm - 2 * i - 1)));
      if (i < last) {
        if (i + 1 == last) {
          // sqrt(N)/sqrt(2) folded into the radicand; N is divisible by 8
          // for odd m (two consecutive even factors).
          t.off_coeff[i] = v;
          t.off_radicand[i] = (lm - 1) * lm * (lm + 1) * (lm + 2) / 2;
        } else {
          t.off_coeff[i] = v;
          t.off_radicand[i] =
              (i + 1L) * (2L * i + 3) * (lm - i - 1) * (2 * lm - 2 * i - 1);
        }
      }
    }
  } else {
    const int last = (m - 2) / 2;
    const Rational ud = variant == OmegaVariant::published ? u_published : u;
    for (int i = 0; i <= last; ++i) {
      t.diag[i] = w / 3 *
                  (ud * (4L * i * (lm - i) + lm) +
                   Rational((lm - 2 * i) * (lm - 2 * i)));
      if (i < last) {
        t.off_coeff[i] = v;
        t.off_radicand[i] =
            (i + 1L) * (2L * i + 1) * (lm - i) * (2 * lm - 2 * i - 1);
      }
    }
  }
  return t;
}

}  // namespace

RationalTridiagonal omega1_rational(int m, const Rational& b, OmegaVariant variant) {
  require_m(m, 1);
  require_interior_rational(b);
  return omega1_entries_rational(m, b, variant);
}

RationalTridiagonal omega2_rational(int m, const Rational& b, OmegaVariant variant) {
  require_m(m, 1);
  require_interior_rational(b);
  return omega2_entries_rational(m, b, variant);
}

RationalTridiagonal omega3_rational(int m, const Rational& b, OmegaVariant variant) {
  require_m(m, 1);
  require_interior_rational(b);
  return omega1_entries_rational(m, Rational(1) - b, variant);
}

std::vector<Rational> closed_form_half_rational(Bundle bundle, int m) {
  require_m(m, 1);
  const long lm = m;
  // "type A": m^2/4 + 3lm - 3l^2 + m; "type B": adds 3m/2 - 3l - 3/4.
  // Bundles 1 and 3 use A for odd m and B for even m; bundle 2 swaps.
  const bool odd = m % 2 == 1;
  const bool type_a = (bundle == Bundle::eta2) ? !odd : odd;
  const int count = odd ? (m + 1) / 2 : m / 2;
  std::vector<Rational> out;
  out.reserve(count);
  for (long l = 0; l < count; ++l) {
    Rational val = frac(lm * lm, 4) + 3 * l * lm - 3 * l * l + lm;
    if (!type_a) {
      val += frac(3 * lm, 2) - 3 * l - frac(3, 4);
    }
    out.push_back(val);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> closed_form_half(Bundle bundle, int m) {
  std::vector<double> out;
  for (const Rational& q : closed_form_half_rational(bundle, m)) {
    out.push_back(q.get_d());
  }
  return out;
}

std::vector<SpectralLine> spectrum(Bundle bundle, int m_max, double b, double r,
                                   const OmegaOptions& options) {
  require_m(m_max, 1);
  std::vector<SpectralLine> lines;
  for (int m = 1; m <= m_max; ++m) {
    const CasimirMatrix block = omega(bundle, m, b, r, options);
    const std::vector<double> vals = eigvals_tridiagonal(block.matrix);
    for (std::size_t l = 0; l < vals.size(); ++l) {
      lines.push_back({bundle, m, static_cast<int>(l), b, vals[l], m + 1});
    }
  }
  std::sort(lines.begin(), lines.end(), [](const SpectralLine& a, const SpectralLine& b2) {
    if (a.eigenvalue != b2.eigenvalue) return a.eigenvalue < b2.eigenvalue;
    if (a.m != b2.m) return a.m < b2.m;
    return a.l < b2.l;
  });
  return lines;
}

std::vector<SpectrumEntry> projective_spectrum(int n_max, double r0) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  require_radius(r0);
  std::vector<SpectrumEntry> out;
  for (int n = 1; n <= n_max; n += 2) {
    out.push_back({static_cast<double>(n) * (n + 1) / (3.0 * r0 * r0), 2 * n + 1});
  }
  return out;
}

std::vector<SpectrumEntry> constant_curvature_spectrum(int n_max, double r) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  require_radius(r);
  std::vector<SpectrumEntry> out;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back({static_cast<double>(n + 1) * (n + 2) / (r * r),
                   (n / 2 + 1) * (2 * n + 3)});
  }
  return out;
}

const char* to_string(ReconcileVerdict v) {
  switch (v) {
    case ReconcileVerdict::match: return "match";
    case ReconcileVerdict::dimension_mismatch: return "dimension-mismatch";
    case ReconcileVerdict::value_mismatch: return "value-mismatch";
  }
  return "?";
}

ReconciliationReport reconcile(int m, double b, double r, Bundle bundle,
                               const OmegaOptions& options) {
  require_m(m, 0);
  ReconciliationReport report;
  report.m = m;
  report.b = b;
  report.bundle = bundle;
  if (m >= 1) {
    report.formula_eigenvalues =
        eigvals_tridiagonal(omega(bundle, m, b, r, options).matrix);
  }
  const DenseSymmetric oracle = isotypic_casimir(m, b, r, bundle);
  report.isotypic_dimension = static_cast<int>(oracle.size());
  report.oracle_eigenvalues = eigvals_dense_symmetric(oracle);

  if (report.formula_eigenvalues.size() != report.oracle_eigenvalues.size()) {
    report.max_abs_difference = std::numeric_limits<double>::quiet_NaN();
    report.verdict = ReconcileVerdict::dimension_mismatch;
    return report;
  }
  double max_diff = 0.0;
  for (std::size_t i = 0; i < report.formula_eigenvalues.size(); ++i) {
    max_diff = std::max(max_diff, std::abs(report.formula_eigenvalues[i] -
                                           report.oracle_eigenvalues[i]));
  }
  report.max_abs_difference = max_diff;
  report.verdict =
      max_diff < 1e-9 ? ReconcileVerdict::match : ReconcileVerdict::value_mismatch;
  return report;
}

}  // namespace isospec
