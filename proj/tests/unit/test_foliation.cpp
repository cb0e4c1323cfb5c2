#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "isospec/foliation.hpp"
#include "isospec/foliation_oracle.hpp"
#include "isospec/jt_model.hpp"

using namespace isospec;

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

TEST_SUITE("foliation") {

TEST_CASE("chart at zero angles is the diagonal representative") {
  for (double b : {0.2, 0.5, 0.8}) {
    const TracelessSymmetric3 a = chart_point({b, 0, 0, 0, 2.0});
    const TracelessSymmetric3 d = diagonal_representative(b, 2.0);
    CHECK(std::abs(a.xx - d.xx) < 1e-15);
    CHECK(std::abs(a.yy - d.yy) < 1e-15);
    CHECK(std::abs(a.zz - d.zz) < 1e-15);
    CHECK(std::abs(a.xy) < 1e-15);
    CHECK(std::abs(a.xz) < 1e-15);
    CHECK(std::abs(a.yz) < 1e-15);
  }
}

TEST_CASE("chart preserves trace, norm and spectrum") {
  std::mt19937 rng(15);
  std::uniform_real_distribution<double> bdist(0.05, 0.95);
  std::uniform_real_distribution<double> xdist(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double b = bdist(rng), r0 = 1.7;
    const TracelessSymmetric3 a =
        chart_point({b, xdist(rng), xdist(rng), xdist(rng), r0});
    CHECK(std::abs(a.trace()) < 1e-12 * r0);
    CHECK(std::abs(a.frobenius_norm() - r0) < 1e-12 * r0);
    const EigenTriplet mu = eigen_triplet(a);
    const EigenTriplet ref = eigen_triplet(diagonal_representative(b, r0));
    CHECK(std::abs(mu.mu1 - ref.mu1) < 1e-10);
    CHECK(std::abs(mu.mu2 - ref.mu2) < 1e-10);
    CHECK(std::abs(mu.mu3 - ref.mu3) < 1e-10);
  }
}

TEST_CASE("chart requires interior b") {
  CHECK_THROWS_AS(chart_point({0.0, 0, 0, 0, 1.0}), std::domain_error);
  CHECK_THROWS_AS(chart_point({1.0, 0, 0, 0, 1.0}), std::domain_error);
}

TEST_CASE("principal curvature anchors") {
  const PrincipalCurvatures mid = principal_curvatures(0.5, 1.0);
  CHECK(mid.k1 == doctest::Approx(-kSqrt3).epsilon(1e-14));
  CHECK(mid.k2 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(mid.k3 == doctest::Approx(kSqrt3).epsilon(1e-14));

  const PrincipalCurvatures quarter = principal_curvatures(0.25, 1.0);
  CHECK(quarter.k1 == doctest::Approx(-7.0 / kSqrt3).epsilon(1e-14));

  CHECK_THROWS_AS(principal_curvatures(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(principal_curvatures(1.0, 1.0), std::domain_error);
}

TEST_CASE("principal curvatures are ordered and mirror-antisymmetric") {
  for (int i = 1; i < 40; ++i) {
    const double b = i / 40.0;
    const PrincipalCurvatures k = principal_curvatures(b, 1.3);
    CHECK(k.k1 < k.k2);
    CHECK(k.k2 < k.k3);
    const PrincipalCurvatures km = principal_curvatures(1.0 - b, 1.3);
    CHECK(std::abs(k.k1 + km.k3) < 1e-12);
    CHECK(std::abs(k.k2 + km.k2) < 1e-12);
  }
}

TEST_CASE("mean curvature anchors and average identity") {
  CHECK(std::abs(mean_curvature(0.5, 1.0)) < 1e-15);
  CHECK(mean_curvature(0.25, 1.0) ==
        doctest::Approx(-35.0 / (18.0 * kSqrt3)).epsilon(1e-13));
  for (int i = 1; i < 20; ++i) {
    const double b = i / 20.0;
    const PrincipalCurvatures k = principal_curvatures(b, 0.8);
    CHECK(mean_curvature(b, 0.8) ==
          doctest::Approx((k.k1 + k.k2 + k.k3) / 3.0).epsilon(1e-12));
    if (b != 0.5) {
      CHECK(mean_curvature(b, 0.8) * (2.0 * b - 1.0) > 0.0);
    }
  }
}

TEST_CASE("scalar curvature vanishes via Gauss-Codazzi") {
  for (double b : {0.25, 0.5, 0.77}) {
    CHECK(scalar_curvature(b, 1.0) == 0.0);
    CHECK(scalar_curvature(b, 2.5) == 0.0);  // identity still checked at r0=1
    const PrincipalCurvatures k = principal_curvatures(b, 1.0);
    const double h = mean_curvature(b, 1.0);
    CHECK(std::abs(6.0 - (k.k1 * k.k1 + k.k2 * k.k2 + k.k3 * k.k3) + 9.0 * h * h) <
          1e-12);
  }
}

TEST_CASE("sectional curvature anchors") {
  const SectionalCurvatures mid = sectional_curvatures(0.5, 1.0);
  CHECK(mid.k1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mid.k2 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mid.k3 == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 1; i < 20; ++i) {
    const double b = i / 20.0;
    const SectionalCurvatures k = sectional_curvatures(b, 1.0);
    CHECK(k.k2 == doctest::Approx(k.k1 / b).epsilon(1e-13));
    // Never a round sphere: the three plane curvatures never coincide.
    CHECK((k.k2 - k.k1) * (k.k2 - k.k3) != 0.0);
  }
}

TEST_CASE("leaf volume anchors and symmetry") {
  CHECK(leaf_volume(0.5, 1.0) == doctest::Approx(4.0 * M_PI * M_PI).epsilon(1e-14));
  CHECK(leaf_volume(0.0, 1.0) == 0.0);
  CHECK(leaf_volume(1.0, 1.0) == 0.0);
  double best = 0.0;
  double best_b = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double b = i / 1000.0;
    CHECK(leaf_volume(b, 2.0) ==
          doctest::Approx(leaf_volume(1.0 - b, 2.0)).epsilon(1e-12));
    const double v = leaf_volume(b, 2.0);
    if (v > best) {
      best = v;
      best_b = b;
    }
  }
  CHECK(best_b == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("latitude of the leaf circles") {
  CHECK(leaf_circle_latitude(0.0) == doctest::Approx(M_PI / 2).epsilon(1e-14));
  CHECK(leaf_circle_latitude(1.0) == doctest::Approx(M_PI / 6).epsilon(1e-13));
  CHECK(leaf_circle_latitude(0.5) == doctest::Approx(M_PI / 3).epsilon(1e-14));
}

TEST_CASE("focal Gaussian curvature") {
  CHECK(focal_gaussian_curvature(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(focal_gaussian_curvature(kSqrt3) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  // Curvature of the covering sphere of radius sqrt(3) r0.
  const double r0 = 1.4;
  CHECK(focal_gaussian_curvature(r0) ==
        doctest::Approx(1.0 / (kSqrt3 * r0 * kSqrt3 * r0)).epsilon(1e-14));
}

TEST_CASE("numeric shape operator matches the closed forms") {
  const CurvatureReport mid = numeric_shape_operator(0.5, {0, 0, 0}, 1.0);
  CHECK(std::abs(mid.k1 + kSqrt3) < 1e-6);
  CHECK(std::abs(mid.k2) < 1e-6);
  CHECK(std::abs(mid.k3 - kSqrt3) < 1e-6);
  CHECK(mid.source == CurvatureSource::numeric);
  CHECK(!mid.step_warning);

  const CurvatureReport generic = numeric_shape_operator(0.3, {0.2, 0.1, 0.4}, 1.0);
  const PrincipalCurvatures k = principal_curvatures(0.3, 1.0);
  CHECK(std::abs(generic.k1 - k.k1) < 1e-5);
  CHECK(std::abs(generic.k2 - k.k2) < 1e-5);
  CHECK(std::abs(generic.k3 - k.k3) < 1e-5);
  CHECK(std::abs(generic.scal) < 1e-4);
}

TEST_CASE("numeric shape operator is independent of the orbit point") {
  const CurvatureReport a = numeric_shape_operator(0.4, {0.1, -0.3, 0.7}, 1.0);
  const CurvatureReport b = numeric_shape_operator(0.4, {0.9, 0.4, -1.1}, 1.0);
  CHECK(std::abs(a.k1 - b.k1) < 1e-5);
  CHECK(std::abs(a.k2 - b.k2) < 1e-5);
  CHECK(std::abs(a.k3 - b.k3) < 1e-5);
}

TEST_CASE("numeric shape operator flags an out-of-range step") {
  const CurvatureReport r = numeric_shape_operator(0.5, {0, 0, 0}, 1.0, 1e-2);
  CHECK(r.step_warning);
}

TEST_CASE("closed-form report is internally consistent") {
  const CurvatureReport r = closed_form_curvature_report(0.35, 1.2);
  CHECK(r.source == CurvatureSource::closed_form);
  CHECK(r.h == doctest::Approx((r.k1 + r.k2 + r.k3) / 3.0).epsilon(1e-12));
  CHECK(r.scal == 0.0);
}

TEST_CASE("the x1=x2=0 slice is totally geodesic; a bent slice is not") {
  const GeodesicSliceReport good = check_totally_geodesic_leaf({0.2, 0.5, 0.8}, 1.0);
  CHECK(good.max_abs_christoffel < 1e-6);
  CHECK(good.totally_geodesic);
  CHECK(good.max_abs_christoffel >= 0.0);

  const GeodesicSliceReport bad = check_perturbed_slice({0.2, 0.5, 0.8}, 1.0, 0.2);
  CHECK(bad.max_abs_christoffel > 1e-3);
  CHECK(!bad.totally_geodesic);
}

}  // TEST_SUITE
