#pragma once

#include <array>
#include <map>
#include <vector>

#include "isospec/q8.hpp"
#include "isospec/rational_linalg.hpp"

namespace isospec {

/// Monomial exponents; polynomials in 3 variables keep the last slot zero.
using Exponents = std::array<int, 4>;

/// Homogeneous polynomial in 3 or 4 real variables with exact rational
/// coefficients. Terms are kept in a fixed graded-lexicographic order
/// (all terms share one degree, so plain lexicographic within the map).
class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial(int variable_count, int degree);
  static HomogeneousPolynomial monomial(int variable_count, const Exponents& e,
                                        const Rational& coeff = Rational(1));

  int variable_count() const { return nvars_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& coeff);
  Rational coefficient(const Exponents& e) const;

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& other);
  HomogeneousPolynomial& operator*=(const Rational& s);
  friend HomogeneousPolynomial operator+(HomogeneousPolynomial a,
                                         const HomogeneousPolynomial& b) {
    a += b;
    return a;
  }
  friend HomogeneousPolynomial operator*(const Rational& s, HomogeneousPolynomial a) {
    a *= s;
    return a;
  }
  bool operator==(const HomogeneousPolynomial& other) const;

 private:
  int nvars_;
  int degree_;
  std::map<Exponents, Rational> terms_;
};

/// All monomials of the given degree, in the fixed order.
std::vector<Exponents> monomial_basis(int variable_count, int degree);

/// Q8 substitution action on polynomials over R^4: each group element acts
/// by a signed permutation of the variables. Satisfies
/// act_on_r4(g, act_on_r4(h, f)) == act_on_r4(q8_multiply(g, h), f) exactly.
HomogeneousPolynomial act_on_r4(Q8Element g, const HomogeneousPolynomial& f);

/// f(-x): the antipodal substitution, (-1)^degree times f.
HomogeneousPolynomial antipodal_act(const HomogeneousPolynomial& f);

/// Exact Laplacian; degree drops by two (the zero polynomial below that).
HomogeneousPolynomial polynomial_laplacian(const HomogeneousPolynomial& f);

/// A subspace given by an exactly linearly independent basis; construction
/// verifies independence with exact rank computation.
class PolySubspace {
 public:
  explicit PolySubspace(std::vector<HomogeneousPolynomial> basis);
  static PolySubspace full_space(int variable_count, int degree);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<HomogeneousPolynomial>& basis() const { return basis_; }
  int variable_count() const { return nvars_; }
  int degree() const { return degree_; }

 private:
  int nvars_;
  int degree_;
  std::vector<HomogeneousPolynomial> basis_;
};

/// Character projector 1/8 sum_g chi(g) act(g, .): exact basis of the
/// subspace transforming by the bundle's sign character; idempotent.
PolySubspace isotypic_projection(const PolySubspace& space, Bundle bundle);

/// Same projector with the trivial character (invariants).
PolySubspace trivial_isotypic_projection(const PolySubspace& space);

/// Exact kernel dimension of the Laplacian on all degree-n homogeneous
/// polynomials: (n+1)^2 in 4 variables, 2n+1 in 3.
int harmonic_dim(int degree, int variable_count);

/// Exact dimension of harmonic polynomials in 4 variables that transform by
/// the bundle character; zero for odd degree (the -1 element forces even).
int equivariant_harmonic_dim(int degree, Bundle bundle);

/// Closed form for the above (even degree 2m): m(2m+1)/2 for even m,
/// (m+1)(2m+1)/2 for odd m, 0 for m = 0.
long equivariant_harmonic_dim_formula(int degree);

/// Harmonic polynomials in 3 variables odd under the antipodal map:
/// dimension 2n+1 for odd n (computed by exact kernel), 0 for even n.
int antipodal_odd_harmonic_dim(int degree);

/// The "paired" monomials (x_a x_b)^n1 (x_c x_d)^n2 over the three
/// complementary variable pairs, excluding the fully balanced monomial
/// (x0 x1 x2 x3)^(l/4): the isotypic dimension of their span.
int pair_split_isotypic_dim(int degree, Bundle bundle);
/// ... and of the complementary span of all remaining monomials.
int residual_isotypic_dim(int degree, Bundle bundle);

/// Closed forms for the two counts above. The pair-split case distinction
/// is by degree mod 4 (the degree is forced even, so odd-degree labels are
/// vacuous; the brute-force routes above are the reference).
long pair_split_isotypic_dim_formula(int degree);
long residual_isotypic_dim_formula(int degree);

/// Laplacian spectrum of the twisted line bundle over the circle:
/// {(n + 1/2)^2, n = 0,1,2,...}, the first n_max values.
std::vector<double> mobius_spectrum(int n_max);
/// Untwisted comparison: {n^2, n = 0,1,2,...}.
std::vector<double> circle_spectrum(int n_max);

}  // namespace isospec
