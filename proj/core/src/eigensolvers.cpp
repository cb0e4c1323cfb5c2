#include "isospec/eigensolvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isospec {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string("non-finite entry in ") + what);
    }
  }
}

}  // namespace

SymTridiagonal::SymTridiagonal(std::vector<double> d, std::vector<double> e)
    : diag(std::move(d)), offdiag(std::move(e)) {
  if (diag.empty()) {
    throw std::invalid_argument("SymTridiagonal requires n >= 1");
  }
  if (offdiag.size() + 1 != diag.size()) {
    throw std::invalid_argument("SymTridiagonal off-diagonal must have length n-1");
  }
  require_finite(diag, "SymTridiagonal diagonal");
  require_finite(offdiag, "SymTridiagonal off-diagonal");
}

double SymTridiagonal::max_abs_entry() const {
  double m = 0.0;
  for (double x : diag) m = std::max(m, std::abs(x));
  for (double x : offdiag) m = std::max(m, std::abs(x));
  return m;
}

int sturm_count_below(const SymTridiagonal& t, double x) {
  // Pivots of LDL^T for t - x I; each negative pivot is one eigenvalue
  // below x. pivmin guards against exact zeros in the recurrence.
  const std::size_t n = t.size();
  double e2max = 0.0;
  for (double e : t.offdiag) e2max = std::max(e2max, e * e);
  const double pivmin =
      std::numeric_limits<double>::min() * std::max(1.0, e2max);

  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      q = t.diag[0] - x;
    } else {
      const double e = t.offdiag[i - 1];
      q = (t.diag[i] - x) - (e * e) / q;
    }
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> eigvals_tridiagonal(const SymTridiagonal& t) {
  const std::size_t n = t.size();

  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(t.offdiag[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(t.offdiag[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= 1e-12 * scale;
  hi += 1e-12 * scale;

  std::vector<double> vals(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k-th smallest eigenvalue = inf{x : count(x) >= k+1}.
    double a = lo, b = hi;
    for (int iter = 0; iter < 140; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;  // interval at machine resolution
      if (sturm_count_below(t, mid) >= static_cast<int>(k) + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    vals[k] = 0.5 * (a + b);
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

DenseSymmetric::DenseSymmetric(std::size_t n, std::vector<double> row_major)
    : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n_ * n_) {
    throw std::invalid_argument("DenseSymmetric: entry count mismatch");
  }
  require_finite(a_, "DenseSymmetric");
  double scale = 0.0;
  for (double x : a_) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = std::abs(a_[i * n_ + j] - a_[j * n_ + i]);
      if (d > 1e-12 * std::max(1.0, scale)) {
        throw std::invalid_argument("DenseSymmetric: input asymmetric beyond tolerance");
      }
      const double s = 0.5 * (a_[i * n_ + j] + a_[j * n_ + i]);
      a_[i * n_ + j] = a_[j * n_ + i] = s;
    }
  }
}

double DenseSymmetric::max_abs_entry() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> eigvals_dense_symmetric(const DenseSymmetric& m) {
  const std::size_t n = m.size();
  if (n == 0) return {};
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return std::sqrt(2.0 * s);
  };

  const double stop = 1e-15 * std::max(1.0, m.max_abs_entry()) * static_cast<double>(n);
  for (int sweep = 0; sweep < 64 && off_norm() > stop; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double sign = theta >= 0.0 ? 1.0 : -1.0;
        const double tau =
            sign / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + tau * tau);
        const double s = tau * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> vals(n);
  for (std::size_t i = 0; i < n; ++i) vals[i] = a[i * n + i];
  std::sort(vals.begin(), vals.end());
  return vals;
}

}  // namespace isospec
