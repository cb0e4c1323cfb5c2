#pragma once

#include "isospec/jt_model.hpp"

namespace isospec {

/// A point of the homogeneous-space chart on the sphere of radius r0 in
/// Herm0(3,R): leaf parameter b and three rotation angles.
struct ChartPoint {
  double b;
  double x1, x2, x3;
  double r0;
};

/// A(b,x1,x2,x3) = G^T D(b,r0) G with G = exp(x3 E3) exp(x1 E1) exp(x2 E2).
/// Trace and Frobenius norm (= r0) are preserved exactly up to rounding.
TracelessSymmetric3 chart_point(const ChartPoint& p);

/// R A R^T with R = exp(angle * E_axis), axis in {1,2,3}.
TracelessSymmetric3 rotate_adjoint(const TracelessSymmetric3& a, int axis,
                                   double angle);

struct PrincipalCurvatures {
  double k1, k2, k3;  // strictly increasing on (0,1)
};

/// k1 = (b-2)/(sqrt(3) r0 b), k2 = (2b-1)/(sqrt(3) r0),
/// k3 = (1+b)/(sqrt(3) r0 (1-b)). Constant on each leaf.
PrincipalCurvatures principal_curvatures(double b, double r0);

/// h(b) = (2-b)(2b-1)(b+1) / (3 sqrt(3) r0 (1-b) b); the average of the
/// principal curvatures. Vanishes only at b = 1/2 (the minimal leaf).
double mean_curvature(double b, double r0);

/// Scalar curvature of the generic leaf: identically zero. The
/// implementation also verifies the Gauss-Codazzi combination
/// 6 - sum k_i^2 + 9 h^2 at r0 = 1.
double scalar_curvature(double b, double r0);

struct SectionalCurvatures {
  double k1, k2, k3;  // planes orthogonal to the three principal circle flows
};

/// K1 = 2(1-b+b^2)/(3(1-b) r0^2), K2 = K1/b, K3 = 2(1-b+b^2)/(3b r0^2).
/// Never all equal: the leaf carries no constant-curvature metric from the
/// ambient sphere.
SectionalCurvatures sectional_curvatures(double b, double r0);

/// vol(F(b)) = 6 sqrt(3) b(1-b) pi^2 r0^3 / (1-b+b^2)^(3/2); symmetric under
/// b -> 1-b with its maximum at b = 1/2, zero at the focal ends.
double leaf_volume(double b, double r0);

/// Gaussian curvature of either focal surface: 1/(3 r0^2); the curvature of
/// the covering sphere of radius sqrt(3) r0.
double focal_gaussian_curvature(double r0);

/// Latitude angle phi in [pi/6, pi/2] with
/// cos(phi) = sqrt(3) b / (2 sqrt(1-b+b^2)).
double leaf_circle_latitude(double b);

}  // namespace isospec
