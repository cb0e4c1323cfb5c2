#include "isospec/jt_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isospec {

namespace {
const double kSqrt6 = std::sqrt(6.0);
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt23 = std::sqrt(2.0 / 3.0);

void require_finite5(const NormalModeVector& q) {
  if (!(std::isfinite(q.q1) && std::isfinite(q.q2) && std::isfinite(q.q3) &&
        std::isfinite(q.q4) && std::isfinite(q.q5))) {
    throw std::invalid_argument("normal mode vector has non-finite entries");
  }
}
}  // namespace

double NormalModeVector::norm_squared() const {
  return q1 * q1 + q2 * q2 + q3 * q3 + q4 * q4 + q5 * q5;
}

double TracelessSymmetric3::frobenius_norm() const {
  return std::sqrt(xx * xx + yy * yy + zz * zz +
                   2.0 * (xy * xy + xz * xz + yz * yz));
}

CouplingConstants::CouplingConstants(double kappa_, double kappa1_,
                                     double kappa2_, double beta1_, double beta2_)
    : kappa(kappa_), kappa1(kappa1_), kappa2(kappa2_), beta1(beta1_), beta2(beta2_) {
  if (!(kappa > 0 && kappa1 > 0 && kappa2 > 0 && beta1 > 0 && beta2 > 0)) {
    throw std::invalid_argument("coupling constants must all be positive");
  }
}

TracelessSymmetric3 build_jt_matrix_unequal(const NormalModeVector& q,
                                            double kappa1, double kappa2) {
  require_finite5(q);
  TracelessSymmetric3 a;
  a.xx = kappa1 * (q.q1 / kSqrt6 - q.q2 / kSqrt2);
  a.yy = kappa1 * (q.q1 / kSqrt6 + q.q2 / kSqrt2);
  a.zz = -kappa1 * kSqrt23 * q.q1;
  a.xy = -kappa2 * q.q5 / kSqrt2;
  a.xz = -kappa2 * q.q4 / kSqrt2;
  a.yz = -kappa2 * q.q3 / kSqrt2;
  return a;
}

TracelessSymmetric3 build_jt_matrix(const NormalModeVector& q, double kappa) {
  return build_jt_matrix_unequal(q, kappa, kappa);
}

double quadratic_restoring(const NormalModeVector& q, double beta1, double beta2) {
  return 0.5 * beta1 * (q.q1 * q.q1 + q.q2 * q.q2) +
         0.5 * beta2 * (q.q3 * q.q3 + q.q4 * q.q4 + q.q5 * q.q5);
}

EigenTriplet eigen_triplet(const TracelessSymmetric3& a) {
  const double p1 = a.xy * a.xy + a.xz * a.xz + a.yz * a.yz;
  double mu[3];
  if (p1 == 0.0) {
    mu[0] = a.xx;
    mu[1] = a.yy;
    mu[2] = a.zz;
  } else {
    const double q = a.trace() / 3.0;
    const double p2 = (a.xx - q) * (a.xx - q) + (a.yy - q) * (a.yy - q) +
                      (a.zz - q) * (a.zz - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // B = (A - q I)/p; r = det(B)/2 lies in [-1, 1] up to rounding.
    const double bxx = (a.xx - q) / p, byy = (a.yy - q) / p, bzz = (a.zz - q) / p;
    const double bxy = a.xy / p, bxz = a.xz / p, byz = a.yz / p;
    const double det = bxx * (byy * bzz - byz * byz) -
                       bxy * (bxy * bzz - byz * bxz) +
                       bxz * (bxy * byz - byy * bxz);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    mu[0] = q + 2.0 * p * std::cos(phi);                      // largest
    mu[2] = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);   // smallest
    mu[1] = 3.0 * q - mu[0] - mu[2];
  }
  std::sort(mu, mu + 3);
  return {mu[0], mu[1], mu[2]};
}

ShapeCoordinates shape_coordinates(const EigenTriplet& t) {
  const double spread = t.mu3 - t.mu1;
  if (!(spread > 0.0)) {
    throw std::domain_error("shape coordinates undefined: mu3 == mu1 (scalar matrix)");
  }
  ShapeCoordinates s;
  s.b = (t.mu2 - t.mu1) / spread;
  s.r = std::sqrt(t.mu1 * t.mu1 + t.mu2 * t.mu2 + t.mu3 * t.mu3);
  return s;
}

TracelessSymmetric3 diagonal_representative(double b, double r) {
  const double c = r / std::sqrt(6.0 * (1.0 - b + b * b));
  TracelessSymmetric3 d;
  d.xx = -c * (1.0 + b);
  d.yy = c * (2.0 * b - 1.0);
  d.zz = c * (2.0 - b);
  return d;
}

double hs_inner(const TracelessSymmetric3& a, const TracelessSymmetric3& b,
                double kappa) {
  const double tr = a.xx * b.xx + a.yy * b.yy + a.zz * b.zz +
                    2.0 * (a.xy * b.xy + a.xz * b.xz + a.yz * b.yz);
  return tr / (kappa * kappa);
}

}  // namespace isospec
