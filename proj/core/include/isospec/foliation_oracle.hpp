#pragma once

#include <array>
#include <vector>

#include "isospec/foliation.hpp"

namespace isospec {

enum class CurvatureSource { closed_form, numeric };

struct CurvatureReport {
  double k1, k2, k3;  // shape-operator eigenvalues, ascending
  double h;           // mean curvature
  double scal;        // Gauss-Codazzi combination; 0 for the closed forms
  CurvatureSource source;
  bool step_warning = false;  // finite-difference step outside [1e-6, 1e-3]
};

CurvatureReport closed_form_curvature_report(double b, double r0);

/// Finite-difference oracle: builds the induced metric and second
/// fundamental form of the leaf through chart_point(b, x, r0) by central
/// differences (Richardson-extrapolated second derivatives), takes the
/// outward normal from Gram-Schmidt of the b-derivative against the three
/// tangents, and returns the shape-operator eigenvalues sorted ascending.
/// The normal sign is fixed so that the mean matches the sign of 2b-1.
CurvatureReport numeric_shape_operator(double b, const std::array<double, 3>& x,
                                       double r0, double h_step = 1e-4);

struct GeodesicSliceReport {
  double max_abs_christoffel;  // worst of the six symbols over all samples
  double tolerance;
  bool totally_geodesic;       // max below tolerance
};

/// Evaluates the Christoffel symbols G^1_00, G^2_00, G^1_33, G^2_33,
/// G^1_03, G^2_03 of the chart metric on the slice x1 = x2 = 0 at the given
/// b values; all six vanish when the slice leaves are totally geodesic.
GeodesicSliceReport check_totally_geodesic_leaf(const std::vector<double>& b_samples,
                                                double r0);

/// Negative control: the same residuals on a deliberately bent slice
/// (the chart angles are perturbed by smooth functions of (b, x3) with the
/// given amplitude); the residuals must not vanish.
GeodesicSliceReport check_perturbed_slice(const std::vector<double>& b_samples,
                                          double r0, double amplitude);

}  // namespace isospec
