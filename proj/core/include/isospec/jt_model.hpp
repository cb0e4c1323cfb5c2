#pragma once

namespace isospec {

/// Normal-mode amplitudes (dimensionless internal units). (q1, q2) is the
/// two-dimensional mode pair, (q3, q4, q5) the three-dimensional one.
struct NormalModeVector {
  double q1 = 0, q2 = 0, q3 = 0, q4 = 0, q5 = 0;
  double norm_squared() const;
};

/// Symmetric 3x3 real matrix, stored by its six independent entries.
/// The normal-mode construction paths produce exactly traceless matrices.
struct TracelessSymmetric3 {
  double xx = 0, yy = 0, zz = 0;  // diagonal
  double xy = 0, xz = 0, yz = 0;  // upper triangle

  double trace() const { return xx + yy + zz; }
  double frobenius_norm() const;
};

/// Matrix eigenvalues with the fixed labelling mu1 <= mu2 <= mu3.
struct EigenTriplet {
  double mu1, mu2, mu3;
};

/// Leaf coordinates: b = (mu2-mu1)/(mu3-mu1) in [0,1] and the radius
/// r = sqrt(mu1^2 + mu2^2 + mu3^2).
struct ShapeCoordinates {
  double b;
  double r;
};

/// Physical coupling constants; all strictly positive.
struct CouplingConstants {
  double kappa;             // linear coupling, equal-coupling model
  double kappa1, kappa2;    // linear couplings, unequal model
  double beta1, beta2;      // quadratic restoring
  CouplingConstants(double kappa, double kappa1, double kappa2, double beta1,
                    double beta2);
};

/// Equal-coupling linear model: q in R^5 mapped to a traceless symmetric
/// matrix, kappa times the universal entry pattern. An isometry onto
/// Herm0(3,R) for the inner product hs_inner(.,.,kappa).
TracelessSymmetric3 build_jt_matrix(const NormalModeVector& q, double kappa);

/// Unequal-coupling model: kappa1 weights the (q1,q2) entries, kappa2 the
/// (q3,q4,q5) entries. Reduces to build_jt_matrix when kappa1 == kappa2.
TracelessSymmetric3 build_jt_matrix_unequal(const NormalModeVector& q,
                                            double kappa1, double kappa2);

/// Quadratic restoring scalar: beta1/2 (q1^2+q2^2) + beta2/2 (q3^2+q4^2+q5^2).
double quadratic_restoring(const NormalModeVector& q, double beta1, double beta2);

/// Eigenvalues by the closed-form trigonometric method for symmetric 3x3
/// matrices, sorted ascending.
EigenTriplet eigen_triplet(const TracelessSymmetric3& a);

/// Throws std::domain_error when mu3 == mu1 (the zero matrix for traceless
/// input); the coordinates require a nondegenerate spread.
ShapeCoordinates shape_coordinates(const EigenTriplet& t);

/// D(b,r) = r/sqrt(6(1-b+b^2)) diag(-(1+b), 2b-1, 2-b): the diagonal matrix
/// with shape coordinates (b, r) and ascending eigenvalues.
TracelessSymmetric3 diagonal_representative(double b, double r);

/// <A,B> = kappa^-2 trace(AB).
double hs_inner(const TracelessSymmetric3& a, const TracelessSymmetric3& b,
                double kappa);

}  // namespace isospec
