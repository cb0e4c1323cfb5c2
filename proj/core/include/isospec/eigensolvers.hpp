#pragma once

#include <cstddef>
#include <vector>

namespace isospec {

/// Real symmetric tridiagonal matrix, stored as its diagonal and
/// off-diagonal. Off-diagonal entries may be negative; eigenvalues are
/// invariant under flipping the sign of any of them (similarity by a
/// diagonal matrix of signs).
struct SymTridiagonal {
  std::vector<double> diag;     // length n, n >= 1
  std::vector<double> offdiag;  // length n - 1

  SymTridiagonal(std::vector<double> d, std::vector<double> e);

  std::size_t size() const { return diag.size(); }
  double max_abs_entry() const;
};

/// Number of eigenvalues of t strictly below x, from the sign count of
/// the Sturm sequence (LDL^T pivots).
int sturm_count_below(const SymTridiagonal& t, double x);

/// All eigenvalues in ascending order, by bisection on Sturm counts.
/// Accurate to ~1e-12 * (1 + max|entry|) per eigenvalue.
std::vector<double> eigvals_tridiagonal(const SymTridiagonal& t);

/// Dense real symmetric matrix. Construction rejects input that is
/// asymmetric beyond a 1e-12 relative tolerance; the stored matrix is the
/// symmetrized average. A 0x0 matrix is valid (empty isotypic blocks).
class DenseSymmetric {
 public:
  DenseSymmetric() = default;
  DenseSymmetric(std::size_t n, std::vector<double> row_major);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double max_abs_entry() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

/// All eigenvalues in ascending order, by cyclic Jacobi rotations.
std::vector<double> eigvals_dense_symmetric(const DenseSymmetric& m);

}  // namespace isospec
