#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "isospec/foliation.hpp"
#include "isospec/jt_model.hpp"

using namespace isospec;

namespace {

const double kSqrt6 = std::sqrt(6.0);
const double kSqrt23 = std::sqrt(2.0 / 3.0);

NormalModeVector random_q(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  return {dist(rng), dist(rng), dist(rng), dist(rng), dist(rng)};
}

TracelessSymmetric3 random_rotation_of(const TracelessSymmetric3& a,
                                       std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  TracelessSymmetric3 out = a;
  for (int axis = 1; axis <= 3; ++axis) {
    out = rotate_adjoint(out, axis, angle(rng));
  }
  return out;
}

}  // namespace

TEST_SUITE("jt-model") {

TEST_CASE("equal-coupling matrix entries") {
  const TracelessSymmetric3 a = build_jt_matrix({1, 0, 0, 0, 0}, 1.0);
  CHECK(a.xx == doctest::Approx(1.0 / kSqrt6).epsilon(1e-15));
  CHECK(a.yy == doctest::Approx(1.0 / kSqrt6).epsilon(1e-15));
  CHECK(a.zz == doctest::Approx(-kSqrt23).epsilon(1e-15));
  CHECK(a.xy == 0.0);
  CHECK(a.xz == 0.0);
  CHECK(a.yz == 0.0);

  const TracelessSymmetric3 zero = build_jt_matrix({0, 0, 0, 0, 0}, 3.7);
  CHECK(zero.frobenius_norm() == 0.0);
}

TEST_CASE("the normal-mode map is an isometry") {
  std::mt19937 rng(2024);
  for (double kappa : {0.5, 1.0, 2.0}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const NormalModeVector q = random_q(rng);
      const TracelessSymmetric3 a = build_jt_matrix(q, kappa);
      CHECK(std::abs(hs_inner(a, a, kappa) - q.norm_squared()) < 1e-12);
      CHECK(std::abs(a.trace()) < 1e-14);
    }
  }
}

TEST_CASE("unequal coupling reduces to the equal case") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const NormalModeVector q = random_q(rng);
    const TracelessSymmetric3 a = build_jt_matrix_unequal(q, 1.3, 1.3);
    const TracelessSymmetric3 b = build_jt_matrix(q, 1.3);
    CHECK(a.xx == b.xx);
    CHECK(a.yy == b.yy);
    CHECK(a.zz == b.zz);
    CHECK(a.xy == b.xy);
    CHECK(a.xz == b.xz);
    CHECK(a.yz == b.yz);
  }
}

TEST_CASE("q3 sits in the yz slot") {
  const TracelessSymmetric3 a = build_jt_matrix_unequal({0, 0, 1, 0, 0}, 2.0, 1.0);
  CHECK(a.yz == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(a.xx == 0.0);
  CHECK(a.yy == 0.0);
  CHECK(a.zz == 0.0);
  CHECK(a.xy == 0.0);
  CHECK(a.xz == 0.0);

  const TracelessSymmetric3 zero = build_jt_matrix_unequal({0, 0, 0, 0, 0}, 2.0, 1.0);
  CHECK(zero.frobenius_norm() == 0.0);
}

TEST_CASE("quadratic restoring term") {
  CHECK(quadratic_restoring({1, 0, 0, 0, 0}, 2.0, 5.0) == doctest::Approx(1.0));
  CHECK(quadratic_restoring({0, 0, 1, 1, 1}, 5.0, 2.0) == doctest::Approx(3.0));
  std::mt19937 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const NormalModeVector q = random_q(rng);
    CHECK(quadratic_restoring(q, 0.8, 0.8) ==
          doctest::Approx(0.4 * q.norm_squared()).epsilon(1e-13));
  }
}

TEST_CASE("eigen triplet orders and sums to zero") {
  TracelessSymmetric3 d;
  d.xx = -2.0 / kSqrt6;
  d.yy = 1.0 / kSqrt6;
  d.zz = 1.0 / kSqrt6;
  const EigenTriplet mu = eigen_triplet(d);
  CHECK(mu.mu1 == doctest::Approx(-2.0 / kSqrt6).epsilon(1e-14));
  CHECK(mu.mu2 == doctest::Approx(1.0 / kSqrt6).epsilon(1e-14));
  CHECK(mu.mu3 == doctest::Approx(1.0 / kSqrt6).epsilon(1e-14));

  const EigenTriplet from_map = eigen_triplet(build_jt_matrix({1, 0, 0, 0, 0}, 1.0));
  CHECK(from_map.mu1 == doctest::Approx(-kSqrt23).epsilon(1e-14));
  CHECK(from_map.mu2 == doctest::Approx(1.0 / kSqrt6).epsilon(1e-14));
  CHECK(from_map.mu3 == doctest::Approx(1.0 / kSqrt6).epsilon(1e-14));
  CHECK(std::abs(from_map.mu1 + from_map.mu2 + from_map.mu3) < 1e-12);
}

TEST_CASE("diagonal representative spectrum pattern") {
  for (double b : {0.15, 0.5, 0.85}) {
    const double c = 2.5 / std::sqrt(6.0 * (1.0 - b + b * b));
    const EigenTriplet mu = eigen_triplet(diagonal_representative(b, 2.5));
    CHECK(mu.mu1 == doctest::Approx(-c * (1.0 + b)).epsilon(1e-13));
    CHECK(mu.mu2 == doctest::Approx(c * (2.0 * b - 1.0)).epsilon(1e-12));
    CHECK(mu.mu3 == doctest::Approx(c * (2.0 - b)).epsilon(1e-13));
  }
}

TEST_CASE("shape coordinates at the corners and the middle") {
  const ShapeCoordinates mid = shape_coordinates(eigen_triplet(diagonal_representative(0.5, 1.0)));
  CHECK(mid.b == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(mid.r == doctest::Approx(1.0).epsilon(1e-13));

  const ShapeCoordinates top = shape_coordinates({-2.0 / kSqrt6, 1.0 / kSqrt6, 1.0 / kSqrt6});
  CHECK(top.b == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(top.r == doctest::Approx(1.0).epsilon(1e-14));

  const ShapeCoordinates bottom = shape_coordinates({-1.0 / kSqrt6, -1.0 / kSqrt6, 2.0 / kSqrt6});
  CHECK(bottom.b == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(bottom.r == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(shape_coordinates(eigen_triplet(TracelessSymmetric3{})),
                  std::domain_error);
}

TEST_CASE("diagonal representative anchors") {
  const TracelessSymmetric3 d0 = diagonal_representative(0.0, 1.0);
  CHECK(d0.xx == doctest::Approx(-1.0 / kSqrt6).epsilon(1e-15));
  CHECK(d0.yy == doctest::Approx(-1.0 / kSqrt6).epsilon(1e-15));
  CHECK(d0.zz == doctest::Approx(2.0 / kSqrt6).epsilon(1e-15));

  const TracelessSymmetric3 d1 = diagonal_representative(1.0, 1.0);
  CHECK(d1.xx == doctest::Approx(-2.0 / kSqrt6).epsilon(1e-15));
  CHECK(d1.yy == doctest::Approx(1.0 / kSqrt6).epsilon(1e-15));
  CHECK(d1.zz == doctest::Approx(1.0 / kSqrt6).epsilon(1e-15));

  CHECK(diagonal_representative(0.3, 0.0).frobenius_norm() == 0.0);
}

TEST_CASE("hs inner product anchors") {
  const TracelessSymmetric3 d = diagonal_representative(0.5, 1.0);
  CHECK(hs_inner(d, d, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(hs_inner(d, TracelessSymmetric3{}, 1.0) == 0.0);
}

TEST_CASE("spectra are rotation invariant") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const TracelessSymmetric3 a = build_jt_matrix(random_q(rng), 1.0);
    const TracelessSymmetric3 rotated = random_rotation_of(a, rng);
    const EigenTriplet mu = eigen_triplet(a);
    const EigenTriplet nu = eigen_triplet(rotated);
    CHECK(std::abs(mu.mu1 - nu.mu1) < 1e-10);
    CHECK(std::abs(mu.mu2 - nu.mu2) < 1e-10);
    CHECK(std::abs(mu.mu3 - nu.mu3) < 1e-10);
    if (mu.mu3 - mu.mu1 > 1e-6) {
      const ShapeCoordinates sa = shape_coordinates(mu);
      const ShapeCoordinates sb = shape_coordinates(nu);
      CHECK(std::abs(sa.b - sb.b) < 1e-9);
      CHECK(std::abs(sa.r - sb.r) < 1e-10);
    }
  }
}

TEST_CASE("shape roundtrip across the parameter range") {
  for (int bi = 0; bi <= 20; ++bi) {
    const double b = bi / 20.0;
    for (double r : {0.05, 1.0, 4.0, 10.0}) {
      const ShapeCoordinates s =
          shape_coordinates(eigen_triplet(diagonal_representative(b, r)));
      CHECK(std::abs(s.b - b) < 1e-12);
      CHECK(std::abs(s.r - r) < 1e-12 * r);
    }
  }
}

TEST_CASE("coupling constants must be positive") {
  CHECK_NOTHROW(CouplingConstants(1.0, 1.0, 2.0, 0.5, 0.7));
  CHECK_THROWS_AS(CouplingConstants(0.0, 1.0, 1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(CouplingConstants(1.0, 1.0, 1.0, -2.0, 1.0), std::invalid_argument);
}

TEST_CASE("non-finite input is rejected") {
  CHECK_THROWS_AS(build_jt_matrix({std::nan(""), 0, 0, 0, 0}, 1.0),
                  std::invalid_argument);
}

}  // TEST_SUITE
