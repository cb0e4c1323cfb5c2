#pragma once

// Small private 3x3 matrix helpers for the chart and its oracle.

#include <array>
#include <cmath>

#include "isospec/jt_model.hpp"

namespace isospec::detail {

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }
};

inline Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[j][i];
  return r;
}

/// exp(angle * E_axis) as an exact planar rotation. Axis 1 rotates the
/// (y,z) plane, axis 2 the (x,z) plane, axis 3 the (x,y) plane, matching
/// the antisymmetric generators E1, E2, E3.
inline Mat3 rotation(int axis, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Mat3 r = Mat3::identity();
  switch (axis) {
    case 1:
      r.m[1][1] = c; r.m[1][2] = -s;
      r.m[2][1] = s; r.m[2][2] = c;
      break;
    case 2:
      r.m[0][0] = c; r.m[0][2] = -s;
      r.m[2][0] = s; r.m[2][2] = c;
      break;
    case 3:
      r.m[0][0] = c; r.m[0][1] = -s;
      r.m[1][0] = s; r.m[1][1] = c;
      break;
  }
  return r;
}

inline Mat3 to_mat3(const TracelessSymmetric3& a) {
  Mat3 r;
  r.m[0][0] = a.xx; r.m[0][1] = a.xy; r.m[0][2] = a.xz;
  r.m[1][0] = a.xy; r.m[1][1] = a.yy; r.m[1][2] = a.yz;
  r.m[2][0] = a.xz; r.m[2][1] = a.yz; r.m[2][2] = a.zz;
  return r;
}

inline TracelessSymmetric3 to_sym3(const Mat3& a) {
  TracelessSymmetric3 r;
  r.xx = a.m[0][0]; r.yy = a.m[1][1]; r.zz = a.m[2][2];
  r.xy = 0.5 * (a.m[0][1] + a.m[1][0]);
  r.xz = 0.5 * (a.m[0][2] + a.m[2][0]);
  r.yz = 0.5 * (a.m[1][2] + a.m[2][1]);
  return r;
}

/// R A R^T for a rotation R.
inline TracelessSymmetric3 conjugate(const Mat3& r, const TracelessSymmetric3& a) {
  return to_sym3(mul(mul(r, to_mat3(a)), transpose(r)));
}

}  // namespace isospec::detail
