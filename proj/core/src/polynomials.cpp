#include "isospec/polynomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace isospec {

namespace {

void check_vars(int nvars) {
  if (nvars != 3 && nvars != 4) {
    throw std::invalid_argument("polynomials support 3 or 4 variables");
  }
}

int exponent_sum(const Exponents& e) { return e[0] + e[1] + e[2] + e[3]; }

// Signed variable permutation: slot v of the substituted vector is
// sign[v] * x_perm[v].
struct Substitution {
  std::array<int, 4> perm;
  std::array<int, 4> sign;
};

Substitution substitution_for(Q8Element g) {
  switch (g) {
    case Q8Element::one:       return {{0, 1, 2, 3}, {+1, +1, +1, +1}};
    case Q8Element::minus_one: return {{0, 1, 2, 3}, {-1, -1, -1, -1}};
    case Q8Element::i:         return {{1, 0, 3, 2}, {+1, -1, +1, -1}};
    case Q8Element::minus_i:   return {{1, 0, 3, 2}, {-1, +1, -1, +1}};
    case Q8Element::j:         return {{2, 3, 0, 1}, {+1, -1, -1, +1}};
    case Q8Element::minus_j:   return {{2, 3, 0, 1}, {-1, +1, +1, -1}};
    case Q8Element::k:         return {{3, 2, 1, 0}, {+1, +1, -1, -1}};
    case Q8Element::minus_k:   return {{3, 2, 1, 0}, {-1, -1, +1, +1}};
  }
  throw std::invalid_argument("invalid Q8 element");
}

// Row-echelon store keyed by leading (largest) monomial; all arithmetic
// exact. Supports rank counting and independent-basis extraction.
class PolyReducer {
 public:
  // Reduces f against the pivots; inserts the normalized remainder when
  // nonzero. Returns true when the dimension grew.
  bool insert(HomogeneousPolynomial f) {
    reduce(f);
    if (f.is_zero()) return false;
    const Exponents lead = leading(f);
    f *= Rational(1) / f.coefficient(lead);
    pivots_.emplace(lead, std::move(f));
    return true;
  }

  void reduce(HomogeneousPolynomial& f) const {
    while (!f.is_zero()) {
      const Exponents lead = leading(f);
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) return;
      f += Rational(-f.coefficient(lead)) * it->second;
    }
  }

  std::size_t dimension() const { return pivots_.size(); }

  std::vector<HomogeneousPolynomial> basis() const {
    std::vector<HomogeneousPolynomial> out;
    out.reserve(pivots_.size());
    for (const auto& [lead, poly] : pivots_) out.push_back(poly);
    return out;
  }

 private:
  static Exponents leading(const HomogeneousPolynomial& f) {
    return f.terms().rbegin()->first;
  }

  std::map<Exponents, HomogeneousPolynomial> pivots_;
};

HomogeneousPolynomial project(const HomogeneousPolynomial& f,
                              const std::vector<std::pair<Q8Element, int>>& weights) {
  HomogeneousPolynomial sum(f.variable_count(), f.degree());
  for (const auto& [g, chi] : weights) {
    HomogeneousPolynomial term = act_on_r4(g, f);
    term *= frac(chi, 8);
    sum += term;
  }
  return sum;
}

std::vector<std::pair<Q8Element, int>> character_weights(Bundle bundle) {
  std::vector<std::pair<Q8Element, int>> w;
  for (Q8Element g : q8_elements()) w.emplace_back(g, character(bundle, g));
  return w;
}

std::vector<std::pair<Q8Element, int>> trivial_weights() {
  std::vector<std::pair<Q8Element, int>> w;
  for (Q8Element g : q8_elements()) w.emplace_back(g, 1);
  return w;
}

PolySubspace project_space(const PolySubspace& space,
                           const std::vector<std::pair<Q8Element, int>>& weights) {
  PolyReducer reducer;
  for (const auto& f : space.basis()) {
    reducer.insert(project(f, weights));
  }
  return PolySubspace(reducer.basis());
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

// The three complementary variable pairings of {x0,x1,x2,x3}.
constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

std::vector<Exponents> pair_split_monomials(int degree) {
  if (degree % 2 != 0) return {};
  const int half = degree / 2;
  std::vector<Exponents> out;
  for (const auto& pairing : kPairings) {
    for (int n1 = 0; n1 <= half; ++n1) {
      const int n2 = half - n1;
      if (n1 == n2) continue;  // the balanced monomial is its own subspace
      Exponents e{};
      e[pairing[0]] = e[pairing[1]] = n1;
      e[pairing[2]] = e[pairing[3]] = n2;
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int variable_count, int degree)
    : nvars_(variable_count), degree_(degree) {
  check_vars(nvars_);
  if (degree_ < 0) throw std::invalid_argument("degree must be non-negative");
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(int variable_count,
                                                      const Exponents& e,
                                                      const Rational& coeff) {
  HomogeneousPolynomial f(variable_count, exponent_sum(e));
  f.add_term(e, coeff);
  return f;
}

void HomogeneousPolynomial::add_term(const Exponents& e, const Rational& coeff) {
  if (exponent_sum(e) != degree_) {
    throw std::invalid_argument("term degree mismatch in homogeneous polynomial");
  }
  for (int v = 0; v < 4; ++v) {
    if (e[v] < 0 || (v >= nvars_ && e[v] != 0)) {
      throw std::invalid_argument("exponent outside the variable range");
    }
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational HomogeneousPolynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& other) {
  if (other.nvars_ != nvars_ || other.degree_ != degree_) {
    throw std::invalid_argument("polynomial shape mismatch in addition");
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
  } else {
    for (auto& [e, c] : terms_) c *= s;
  }
  return *this;
}

bool HomogeneousPolynomial::operator==(const HomogeneousPolynomial& other) const {
  return nvars_ == other.nvars_ && degree_ == other.degree_ && terms_ == other.terms_;
}

std::vector<Exponents> monomial_basis(int variable_count, int degree) {
  check_vars(variable_count);
  std::vector<Exponents> out;
  Exponents e{};
  // Enumerate in ascending lexicographic order by recursion on slots.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == variable_count - 1) {
      e[var] = remaining;
      out.push_back(e);
      e[var] = 0;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[var] = v;
      self(self, var + 1, remaining - v);
    }
    e[var] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

HomogeneousPolynomial act_on_r4(Q8Element g, const HomogeneousPolynomial& f) {
  if (f.variable_count() != 4) {
    throw std::invalid_argument("the Q8 action needs 4 variables");
  }
  const Substitution sub = substitution_for(g);
  HomogeneousPolynomial out(4, f.degree());
  for (const auto& [e, c] : f.terms()) {
    int sign = 1;
    Exponents img{};
    for (int v = 0; v < 4; ++v) {
      if (e[v] % 2 != 0 && sub.sign[v] < 0) sign = -sign;
      img[sub.perm[v]] = e[v];
    }
    out.add_term(img, sign > 0 ? c : Rational(-c));
  }
  return out;
}

HomogeneousPolynomial antipodal_act(const HomogeneousPolynomial& f) {
  HomogeneousPolynomial out = f;
  if (f.degree() % 2 != 0) out *= Rational(-1);
  return out;
}

HomogeneousPolynomial polynomial_laplacian(const HomogeneousPolynomial& f) {
  const int out_degree = std::max(0, f.degree() - 2);
  HomogeneousPolynomial out(f.variable_count(), out_degree);
  if (f.degree() < 2) return out;
  for (const auto& [e, c] : f.terms()) {
    for (int v = 0; v < f.variable_count(); ++v) {
      if (e[v] < 2) continue;
      Exponents d = e;
      d[v] -= 2;
      out.add_term(d, c * e[v] * (e[v] - 1));
    }
  }
  return out;
}

PolySubspace::PolySubspace(std::vector<HomogeneousPolynomial> basis)
    : nvars_(4), degree_(0), basis_(std::move(basis)) {
  if (!basis_.empty()) {
    nvars_ = basis_.front().variable_count();
    degree_ = basis_.front().degree();
    PolyReducer reducer;
    for (const auto& f : basis_) {
      if (f.variable_count() != nvars_ || f.degree() != degree_) {
        throw std::invalid_argument("subspace basis polynomials must share shape");
      }
      if (!reducer.insert(f)) {
        throw std::invalid_argument("subspace basis is not linearly independent");
      }
    }
  }
}

PolySubspace PolySubspace::full_space(int variable_count, int degree) {
  std::vector<HomogeneousPolynomial> basis;
  for (const Exponents& e : monomial_basis(variable_count, degree)) {
    basis.push_back(HomogeneousPolynomial::monomial(variable_count, e));
  }
  return PolySubspace(std::move(basis));
}

PolySubspace isotypic_projection(const PolySubspace& space, Bundle bundle) {
  return project_space(space, character_weights(bundle));
}

PolySubspace trivial_isotypic_projection(const PolySubspace& space) {
  return project_space(space, trivial_weights());
}

int harmonic_dim(int degree, int variable_count) {
  check_vars(variable_count);
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  const std::vector<Exponents> source = monomial_basis(variable_count, degree);
  if (degree < 2) return static_cast<int>(source.size());
  const std::vector<Exponents> target = monomial_basis(variable_count, degree - 2);
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r;

  RationalMatrix m(target.size(), source.size());
  for (std::size_t c = 0; c < source.size(); ++c) {
    const HomogeneousPolynomial lap = polynomial_laplacian(
        HomogeneousPolynomial::monomial(variable_count, source[c]));
    for (const auto& [e, coeff] : lap.terms()) {
      m.at(row_of.at(e), c) = coeff;
    }
  }
  return static_cast<int>(rational_kernel_dim(m));
}

int equivariant_harmonic_dim(int degree, Bundle bundle) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  if (degree % 2 != 0) return 0;  // -1 acts by (-1)^degree
  const PolySubspace iso =
      isotypic_projection(PolySubspace::full_space(4, degree), bundle);
  if (iso.dimension() == 0) return 0;
  PolyReducer image;
  std::size_t rank = 0;
  for (const auto& f : iso.basis()) {
    if (image.insert(polynomial_laplacian(f))) ++rank;
  }
  return static_cast<int>(iso.dimension() - rank);
}

long equivariant_harmonic_dim_formula(int degree) {
  const long m = degree / 2;
  if (m == 0) return 0;
  if (m % 2 == 0) return m * (2 * m + 1) / 2;
  return (m + 1) * (2 * m + 1) / 2;
}

int antipodal_odd_harmonic_dim(int degree) {
  if (degree % 2 == 0) return 0;
  return harmonic_dim(degree, 3);
}

int pair_split_isotypic_dim(int degree, Bundle bundle) {
  std::vector<HomogeneousPolynomial> basis;
  for (const Exponents& e : pair_split_monomials(degree)) {
    basis.push_back(HomogeneousPolynomial::monomial(4, e));
  }
  if (basis.empty()) return 0;
  return static_cast<int>(isotypic_projection(PolySubspace(std::move(basis)), bundle)
                              .dimension());
}

int residual_isotypic_dim(int degree, Bundle bundle) {
  const std::vector<Exponents> split = pair_split_monomials(degree);
  std::vector<HomogeneousPolynomial> basis;
  for (const Exponents& e : monomial_basis(4, degree)) {
    const bool balanced = e[0] == e[1] && e[1] == e[2] && e[2] == e[3];
    if (balanced || std::binary_search(split.begin(), split.end(), e)) continue;
    basis.push_back(HomogeneousPolynomial::monomial(4, e));
  }
  if (basis.empty()) return 0;
  return static_cast<int>(isotypic_projection(PolySubspace(std::move(basis)), bundle)
                              .dimension());
}

long pair_split_isotypic_dim_formula(int degree) {
  if (degree % 2 != 0) return 0;
  if (degree % 4 == 0) return degree / 4;
  return (degree + 2) / 2;
}

long residual_isotypic_dim_formula(int degree) {
  if (degree % 2 != 0) return 0;
  const long m = degree / 2;
  if (m == 0) return 0;
  if (m % 2 == 1) return 2 * binomial(m + 2, 3) - (m + 1) / 2;
  return 2 * binomial(m + 2, 3) - m / 2;
}

std::vector<double> mobius_spectrum(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  std::vector<double> out;
  out.reserve(n_max);
  for (int n = 0; n < n_max; ++n) {
    const double half_integer = n + 0.5;
    out.push_back(half_integer * half_integer);
  }
  return out;
}

std::vector<double> circle_spectrum(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  std::vector<double> out;
  out.reserve(n_max);
  for (int n = 0; n < n_max; ++n) out.push_back(static_cast<double>(n) * n);
  return out;
}

}  // namespace isospec
