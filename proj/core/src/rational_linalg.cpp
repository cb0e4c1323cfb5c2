#include "isospec/rational_linalg.hpp"

#include <utility>

namespace isospec {

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::size_t rational_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  // Clear denominators row by row: an integer matrix with the same rank.
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      a[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  // Bareiss: all divisions below are exact.
  BigInt prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot_row = rank;
    while (pivot_row < rows && a[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows) continue;
    std::swap(a[rank], a[pivot_row]);

    const BigInt pivot = a[rank][col];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = (a[i][j] * pivot - a[i][col] * a[rank][j]) / prev_pivot;
      }
      a[i][col] = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rational_kernel_dim(const RationalMatrix& m) {
  return m.cols() - rational_rank(m);
}

}  // namespace isospec
