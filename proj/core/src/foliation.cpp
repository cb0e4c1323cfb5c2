#include "isospec/foliation.hpp"

#include <cmath>
#include <stdexcept>

#include "mat3.hpp"

namespace isospec {

namespace {
const double kSqrt3 = std::sqrt(3.0);

void require_interior(double b) {
  if (!(b > 0.0 && b < 1.0)) {
    throw std::domain_error("leaf parameter b must lie in (0,1)");
  }
}

void require_unit_interval(double b) {
  if (!(b >= 0.0 && b <= 1.0)) {
    throw std::domain_error("leaf parameter b must lie in [0,1]");
  }
}

void require_positive_radius(double r0) {
  if (!(r0 > 0.0)) {
    throw std::domain_error("radius must be positive");
  }
}
}  // namespace

TracelessSymmetric3 chart_point(const ChartPoint& p) {
  require_interior(p.b);
  require_positive_radius(p.r0);
  using detail::Mat3;
  const Mat3 g = detail::mul(detail::mul(detail::rotation(3, p.x3),
                                         detail::rotation(1, p.x1)),
                             detail::rotation(2, p.x2));
  const TracelessSymmetric3 d = diagonal_representative(p.b, p.r0);
  return detail::conjugate(detail::transpose(g), d);
}

TracelessSymmetric3 rotate_adjoint(const TracelessSymmetric3& a, int axis,
                                   double angle) {
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("rotation axis must be 1, 2 or 3");
  }
  return detail::conjugate(detail::rotation(axis, angle), a);
}

PrincipalCurvatures principal_curvatures(double b, double r0) {
  require_interior(b);
  require_positive_radius(r0);
  PrincipalCurvatures k;
  k.k1 = (b - 2.0) / (kSqrt3 * r0 * b);
  k.k2 = (2.0 * b - 1.0) / (kSqrt3 * r0);
  k.k3 = (1.0 + b) / (kSqrt3 * r0 * (1.0 - b));
  return k;
}

double mean_curvature(double b, double r0) {
  require_interior(b);
  require_positive_radius(r0);
  return (2.0 - b) * (2.0 * b - 1.0) * (b + 1.0) /
         (3.0 * kSqrt3 * r0 * (1.0 - b) * b);
}

double scalar_curvature(double b, double r0) {
  require_interior(b);
  require_positive_radius(r0);
  // Gauss-Codazzi cross-check at unit ambient radius.
  const PrincipalCurvatures k = principal_curvatures(b, 1.0);
  const double h = mean_curvature(b, 1.0);
  const double residual =
      6.0 - (k.k1 * k.k1 + k.k2 * k.k2 + k.k3 * k.k3) + 9.0 * h * h;
  if (std::abs(residual) > 1e-10) {
    throw std::logic_error("Gauss-Codazzi identity violated at r0 = 1");
  }
  return 0.0;
}

SectionalCurvatures sectional_curvatures(double b, double r0) {
  require_interior(b);
  require_positive_radius(r0);
  const double w = 2.0 * (1.0 - b + b * b) / (3.0 * r0 * r0);
  SectionalCurvatures k;
  k.k1 = w / (1.0 - b);
  k.k2 = w / (b * (1.0 - b));
  k.k3 = w / b;
  return k;
}

double leaf_volume(double b, double r0) {
  require_unit_interval(b);
  require_positive_radius(r0);
  const double w = 1.0 - b + b * b;
  return 6.0 * kSqrt3 * b * (1.0 - b) * M_PI * M_PI * r0 * r0 * r0 /
         (w * std::sqrt(w));
}

double focal_gaussian_curvature(double r0) {
  require_positive_radius(r0);
  return 1.0 / (3.0 * r0 * r0);
}

double leaf_circle_latitude(double b) {
  require_unit_interval(b);
  const double c = kSqrt3 * b / (2.0 * std::sqrt(1.0 - b + b * b));
  return std::acos(std::min(1.0, c));
}

}  // namespace isospec
