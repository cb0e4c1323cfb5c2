#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace isospec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// num/den in canonical form. mpq_class(num, den) alone does not canonicalize.
Rational frac(long num, long den = 1);

/// Dense matrix over the rationals. Exact arithmetic throughout; entries are
/// arbitrary-precision, so overflow cannot occur.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

/// Exact rank via Bareiss fraction-free elimination (rows are cleared to
/// integers first; row scaling does not change the rank).
std::size_t rational_rank(const RationalMatrix& m);

/// Exact null space dimension: cols - rank.
std::size_t rational_kernel_dim(const RationalMatrix& m);

}  // namespace isospec
