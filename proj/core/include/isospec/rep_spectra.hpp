#pragma once

#include <complex>
#include <vector>

#include "isospec/eigensolvers.hpp"
#include "isospec/q8.hpp"
#include "isospec/rational_linalg.hpp"

namespace isospec {

using Complex = std::complex<double>;

/// Minimal dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  Complex& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  ComplexMatrix multiply(const ComplexMatrix& other) const;
  ComplexMatrix adjoint() const;
  double max_abs_diff(const ComplexMatrix& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

/// Infinitesimal generators of the spin-m/2 irreducible representation on
/// the degree-m polynomials in (z1, z2), expressed in the orthonormal basis
/// u^m_k = z1^k z2^(m-k) / sqrt(k!(m-k)!). Anti-self-adjoint, with
/// [rho_i, rho_j] = 2 rho_k and cyclic permutations.
struct GeneratorMatrices {
  int m;
  ComplexMatrix rho_i, rho_j, rho_k;
};

GeneratorMatrices generator_matrices(int m);

/// Anisotropic Laplacian weights on the leaf with parameter b and radius r:
/// (1-b+b^2)/(3r^2) * ((1-b)^-2, 1, b^-2). Swapping b for 1-b swaps c_i and
/// c_k. Throws std::domain_error at the singular ends b in {0,1}.
struct LaplacianCoefficients {
  double c_i, c_j, c_k;
};

LaplacianCoefficients laplacian_coefficients(double b, double r);

/// -(c_i rho_i^2 + c_j rho_j^2 + c_k rho_k^2) on the full (m+1)-dimensional
/// representation space; real symmetric after assembly.
DenseSymmetric full_casimir(int m, double b, double r);

/// Q8 substitution action on the degree-m space of (z1, z2) polynomials in
/// the orthonormal basis; a unitary representation.
ComplexMatrix q8_action_on_Qm(Q8Element g, int m);

/// Brute-force oracle: the restriction of full_casimir to the isotypic
/// subspace of the bundle's character under q8_action_on_Qm (projector
/// 1/8 sum chi(g) Lambda_g). Returns a 0x0 matrix when that subspace is
/// trivial -- which it is for every odd m.
DenseSymmetric isotypic_casimir(int m, double b, double r, Bundle bundle);

/// The tabulated tridiagonal entries contain two coefficient slips: the
/// even-m bundle-1 generic diagonal prints (2i+1)(2m-2i+1)+m where the
/// closed-form b=1/2 eigenvalues require (2i+1)(2m-2i-1)+m, and the even-m
/// bundle-2 diagonal prints a factor 1-2b+b^2 where the b <-> 1-b symmetry
/// requires 1-2b+2b^2. `published` keeps the entries as tabulated;
/// `corrected` applies the consistent coefficients.
enum class OmegaVariant { published, corrected };

/// Variant selection per bundle. Bundle 1 (and 3, its mirror) defaults to
/// corrected so the b=1/2 spectra match the closed forms; bundle 2 defaults
/// to the tabulated entries with the corrected variant available.
struct OmegaOptions {
  OmegaVariant omega1 = OmegaVariant::corrected;
  OmegaVariant omega2 = OmegaVariant::published;
};

/// Tridiagonal Casimir block of one bundle at leaf (b, r); entries scale as
/// 1/r^2, off-diagonals carry the factor 1-2b and vanish at b = 1/2.
struct CasimirMatrix {
  Bundle bundle;
  int m;
  double b, r;
  SymTridiagonal matrix;
};

CasimirMatrix omega1(int m, double b, double r,
                     OmegaVariant variant = OmegaVariant::corrected);
CasimirMatrix omega2(int m, double b, double r,
                     OmegaVariant variant = OmegaVariant::published);
/// omega1 with b replaced by 1-b.
CasimirMatrix omega3(int m, double b, double r,
                     OmegaVariant variant = OmegaVariant::corrected);
CasimirMatrix omega(Bundle bundle, int m, double b, double r,
                    const OmegaOptions& options = {});

/// Exact-arithmetic form at unit radius: diagonal entries are rational in
/// b; each off-diagonal entry is off_coeff[i] * sqrt(off_radicand[i]) with
/// rational coefficient and integer radicand.
struct RationalTridiagonal {
  std::vector<Rational> diag;
  std::vector<Rational> off_coeff;
  std::vector<long> off_radicand;
};

RationalTridiagonal omega1_rational(int m, const Rational& b,
                                    OmegaVariant variant = OmegaVariant::corrected);
RationalTridiagonal omega2_rational(int m, const Rational& b,
                                    OmegaVariant variant = OmegaVariant::published);
RationalTridiagonal omega3_rational(int m, const Rational& b,
                                    OmegaVariant variant = OmegaVariant::corrected);

/// Eigenvalues of the bundle Casimir at b = 1/2, r = 1, in closed form,
/// ascending. Bundles 1 and 3 share one formula pair; bundle 2 swaps the
/// odd/even roles.
std::vector<double> closed_form_half(Bundle bundle, int m);
std::vector<Rational> closed_form_half_rational(Bundle bundle, int m);

/// One eigenvalue line of a bundle Laplacian: the l-th eigenvalue of the
/// m-th Casimir block, carrying multiplicity m+1.
struct SpectralLine {
  Bundle bundle;
  int m;
  int l;
  double b;
  double eigenvalue;
  int multiplicity;
};

/// Union of the Casimir eigenvalues for m = 1..m_max, sorted by eigenvalue.
std::vector<SpectralLine> spectrum(Bundle bundle, int m_max, double b, double r,
                                   const OmegaOptions& options = {});

struct SpectrumEntry {
  double eigenvalue;
  int multiplicity;
};

/// Laplacian spectrum on the twisted bundle over the focal projective
/// plane: n(n+1)/(3 r0^2) for odd n up to n_max, multiplicity 2n+1.
std::vector<SpectrumEntry> projective_spectrum(int n_max, double r0);

/// Spectrum of the three bundle Laplacians over the leaf wearing its
/// constant-curvature metric: (n+1)(n+2)/r^2 with multiplicity
/// (n\2 + 1)(2n+3), n = 0..n_max.
std::vector<SpectrumEntry> constant_curvature_spectrum(int n_max, double r);

enum class ReconcileVerdict { match, dimension_mismatch, value_mismatch };
const char* to_string(ReconcileVerdict v);

/// Formula-vs-oracle cross-validation. Disagreements are findings, never
/// errors: the tabulated blocks and the isotypic oracle are known to part
/// ways (for every odd m the oracle space is empty while the tables are
/// not; at m = 2, b = 1/2 the values differ, 21/4 vs 5).
struct ReconciliationReport {
  int m;
  double b;
  Bundle bundle;
  std::vector<double> formula_eigenvalues;
  std::vector<double> oracle_eigenvalues;
  int isotypic_dimension;
  double max_abs_difference;  // NaN when the dimensions differ
  ReconcileVerdict verdict;
};

ReconciliationReport reconcile(int m, double b, double r, Bundle bundle,
                               const OmegaOptions& options = {});

}  // namespace isospec
