#include <doctest.h>

#include <cmath>
#include <numbers>

#include "slocc/chsh.hpp"
#include "slocc/classify.hpp"
#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"
#include "test_support.hpp"

using namespace slocc;
using slocc::testing::max_abs;

namespace {

const double kSqrt2 = std::numbers::sqrt2;

ChshDirections tsirelson() {
  return {Vec3::UnitX(), Vec3::UnitY(), Vec3(1, 1, 0) / kSqrt2, Vec3(1, -1, 0) / kSqrt2};
}

ChshDirections random_directions(Rng& rng) {
  return {random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng), random_unit_vector(rng)};
}

/// Directions in the x-y plane with a.a' = cos(alpha), b.b' = cos(beta).
ChshDirections from_angle_pair(double alpha, double beta, double phase_a, double phase_b) {
  auto dir = [](double t) { return Vec3(std::cos(t), std::sin(t), 0.0); };
  return {dir(phase_a), dir(phase_a + alpha), dir(phase_b), dir(phase_b + beta)};
}

HermitianOp normalized(const HermitianOp& rho) { return (1.0 / rho.trace()) * rho; }

}  // namespace

TEST_CASE("chsh_operator") {
  const Vec4 ev = chsh_operator(tsirelson()).eigenvalues();
  CHECK(ev(0) == doctest::Approx(-2.0 * kSqrt2));
  CHECK(std::abs(ev(1)) < 1e-12);
  CHECK(std::abs(ev(2)) < 1e-12);
  CHECK(ev(3) == doctest::Approx(2.0 * kSqrt2));

  ChshDirections same = tsirelson();
  same.b_prime = same.b;
  const Vec4 ev2 = chsh_operator(same).eigenvalues();
  CHECK(ev2(0) == doctest::Approx(-2.0));
  CHECK(ev2(1) == doctest::Approx(-2.0));
  CHECK(ev2(2) == doctest::Approx(2.0));
  CHECK(ev2(3) == doctest::Approx(2.0));

  Rng rng = stream(51, 0);
  for (int k = 0; k < 200; ++k) {
    const ChshDirections d = random_directions(rng);
    const HermitianOp op = chsh_operator(d);
    CHECK(std::abs(op.trace()) < 1e-12);
    CHECK(op.eigenvalues().cwiseAbs().maxCoeff() <= 2.0 * kSqrt2 + 1e-12);
    ChshDirections swapped_b = d;
    std::swap(swapped_b.b, swapped_b.b_prime);
    ChshDirections swapped_a = d;
    std::swap(swapped_a.a, swapped_a.a_prime);
    // Swapping b and b' is the same as negating a'; both swaps give the same spectrum.
    ChshDirections negated = d;
    negated.a_prime = -d.a_prime;
    CHECK(max_abs(chsh_operator(swapped_b).matrix() - chsh_operator(negated).matrix()) < 1e-12);
    CHECK((chsh_operator(swapped_b).eigenvalues() - chsh_operator(swapped_a).eigenvalues()).cwiseAbs().maxCoeff() <
          1e-12);
  }

  ChshDirections bad = tsirelson();
  bad.a = Vec3(1, 1, 0);
  CHECK_THROWS_AS(chsh_operator(bad), Error);
}

TEST_CASE("chsh_witness") {
  const HermitianOp w = chsh_witness(tsirelson());
  const PauliTensor omega = from_hermitian(w);
  CHECK(omega(0, 0) == doctest::Approx(1.0));
  CHECK(max_abs(omega.omega - 0.5 * from_hermitian(chsh_operator(tsirelson())).omega - Mat4(Vec4(1, 0, 0, 0).asDiagonal())) <
        1e-14);
  CHECK(w.eigenvalues()(0) == doctest::Approx(1.0 - kSqrt2));
  CHECK(is_potential_witness(w));

  Rng rng = stream(52, 0);
  const HermitianOp mixed = 0.25 * HermitianOp::identity();
  double worst = 1.0;
  for (int k = 0; k < 1000; ++k) {
    const ChshDirections d = random_directions(rng);
    const HermitianOp wk = chsh_witness(d, k % 2 == 0 ? 1 : -1);
    const HermitianOp prod = product_state(random_pure_qubit(rng), random_pure_qubit(rng));
    worst = std::min(worst, normalized_pairing(prod, wk));
    CHECK(normalized_pairing(mixed, wk) == doctest::Approx(1.0).epsilon(1e-14));
  }
  CHECK(worst >= -1e-9);

  SUBCASE("the minus sign equals flipping b and b'") {
    const ChshDirections d = random_directions(rng);
    ChshDirections flipped = d;
    flipped.b = -d.b;
    flipped.b_prime = -d.b_prime;
    CHECK(max_abs(chsh_witness(d, -1).matrix() - chsh_witness(flipped, 1).matrix()) < 1e-14);
  }
}

TEST_CASE("chsh_circle_values") {
  const auto [a1, a2] = chsh_circle_values({std::numbers::pi / 2, std::numbers::pi / 2});
  CHECK(a1 == doctest::Approx(1.0 / kSqrt2));
  CHECK(a2 == doctest::Approx(1.0 / kSqrt2));
  const auto [b1, b2] = chsh_circle_values({0.0, 1.1});
  CHECK(b1 == 1.0);
  CHECK(b2 == 0.0);

  Rng rng = stream(53, 0);
  std::uniform_real_distribution<double> ang(0.0, std::numbers::pi);
  for (int k = 0; k < 500; ++k) {
    const double alpha = ang(rng);
    const double beta = ang(rng);
    const auto [w1, w2] = chsh_circle_values({alpha, beta});
    CHECK(w1 >= w2);
    CHECK(w2 >= 0.0);
    CHECK(std::abs(w1 * w1 + w2 * w2 - 1.0) < 1e-12);

    const ChshDirections d = from_angle_pair(alpha, beta, 2.0 * ang(rng), 2.0 * ang(rng));
    const ChshAngles back = ChshAngles::from_directions(d);
    CHECK(back.alpha == doctest::Approx(alpha).epsilon(1e-9));
    const Vec3 s = singular_values(spatial_block(from_hermitian(chsh_witness(d, k % 2 == 0 ? 1 : -1))));
    CHECK(std::abs(s(0) - w1) < 1e-10);
    CHECK(std::abs(s(1) - w2) < 1e-10);
    CHECK(std::abs(s(2)) < 1e-10);
  }
}

TEST_CASE("horodecki_optimum") {
  const HorodeckiResult singlet = horodecki_optimum(singlet_projector());
  CHECK(std::abs(singlet.value - (1.0 - kSqrt2)) < 1e-12);
  CHECK(normalized_pairing(singlet_projector(), chsh_witness(singlet.directions)) ==
        doctest::Approx(1.0 - kSqrt2).epsilon(1e-12));

  CHECK(horodecki_optimum(0.25 * HermitianOp::identity()).value == doctest::Approx(1.0));

  for (double p : {0.6, 0.75}) {
    const HermitianOp rho = werner_state(p);
    const HorodeckiResult h = horodecki_optimum(rho);
    CHECK(h.value == doctest::Approx(1.0 - p * kSqrt2).epsilon(1e-12));
    const DirectMinimum dm = minimize_chsh_directly(rho);
    CHECK(std::abs(dm.value - h.value) < 1e-6);
  }
  CHECK(horodecki_optimum(werner_state(0.70)).value > 0.0);
  CHECK(horodecki_optimum(werner_state(0.72)).value < 0.0);

  CHECK_THROWS_AS(horodecki_optimum(2.0 * singlet_projector()), Error);
  CHECK_THROWS_AS(horodecki_optimum(partial_transpose(singlet_projector())), Error);
}

TEST_CASE("horodecki_optimum agrees with the plane projections and direct minimization") {
  Rng rng = stream(54, 0);
  for (int k = 0; k < 500; ++k) {
    const HermitianOp rho = random_mixed_state(rng, 1 + k % 4);
    const HorodeckiResult h = horodecki_optimum(rho);
    const auto [proj, plane] = plane_projection_minimum(h.correlations);
    CHECK(proj == doctest::Approx(h.value).epsilon(1e-12));
    CHECK(plane == h.best_plane);
    CHECK(normalized_pairing(rho, chsh_witness(h.directions)) == doctest::Approx(h.value).epsilon(1e-10));
    const DirectMinimum dm = minimize_chsh_directly(rho);
    CHECK(dm.value >= h.value - 1e-6);
    CHECK(dm.value - h.value <= 1e-4);
  }
}

TEST_CASE("horodecki_optimum is monotone under mixing with the identity") {
  Rng rng = stream(55, 0);
  for (int k = 0; k < 20; ++k) {
    const HermitianOp rho = random_mixed_state(rng, 2);
    double previous = -std::numeric_limits<double>::infinity();
    for (int step = 20; step >= 0; --step) {
      const double p = 0.05 * step;
      const double v = horodecki_optimum(p * rho + (1.0 - p) * 0.25 * HermitianOp::identity()).value;
      CHECK(v >= previous - 1e-12);
      previous = v;
    }
  }
}

TEST_CASE("cylinder_membership") {
  const CylinderReport origin = cylinder_membership({0, 0, 0});
  CHECK(origin.member);
  CHECK(origin.margin == 1.0);
  const CylinderReport vertex = cylinder_membership({1, 0, 0});
  CHECK(vertex.member);
  CHECK(vertex.margin == 0.0);
  const CylinderReport singlet = cylinder_membership({1, 1, -1});
  CHECK_FALSE(singlet.member);
  CHECK(singlet.margin == doctest::Approx(1.0 - kSqrt2));
  CHECK(singlet.violating_axis.has_value());
  const CylinderReport xy = cylinder_membership({0.9, 0.9, 0.1});
  REQUIRE(xy.violating_axis);
  CHECK(*xy.violating_axis == 2);
}

TEST_CASE("slocc_chsh_satisfies") {
  CHECK(slocc_chsh_satisfies(0.25 * HermitianOp::identity()).member);
  CHECK_FALSE(slocc_chsh_satisfies(werner_state(0.8)).member);

  const CylinderReport w6 = slocc_chsh_satisfies(werner_state(0.6));
  CHECK(w6.member);
  CHECK(w6.margin == doctest::Approx(1.0 - std::sqrt(0.72)));

  Rng rng = stream(56, 0);
  double worst = 1.0;
  for (int k = 0; k < 1000; ++k) {
    const HermitianOp filtered = normalized(apply_filter_state(werner_state(0.6), random_filter(rng, 0.8)));
    worst = std::min(worst, horodecki_optimum(filtered).value);
  }
  CHECK(worst >= -1e-6);
}

TEST_CASE("filter_to_violation") {
  const ViolatingFilter w8 = filter_to_violation(werner_state(0.8));
  CHECK(w8.value == doctest::Approx(1.0 - std::sqrt(1.28)).epsilon(1e-6));
  CHECK(w8.value < 0.0);

  Rng rng = stream(57, 0);
  for (int k = 0; k < 20; ++k) {
    const HermitianOp rho = normalized(apply_filter_state(singlet_projector(), random_filter(rng, 0.5)));
    const ViolatingFilter v = filter_to_violation(rho);
    CHECK(std::abs(v.value - (1.0 - kSqrt2)) < 1e-6);
    // Re-apply the returned filter from scratch and evaluate the witness.
    const HermitianOp refiltered = apply_filter_state(rho, v.filter);
    CHECK(normalized_pairing(refiltered, chsh_witness(v.directions)) < -1e-8);
  }

  SUBCASE("a canonical state needs only a local unitary") {
    const HermitianOp rho = canonical_form({0.25, 0.2, 0.2, -0.175});
    const ViolatingFilter v = filter_to_violation(rho);
    CHECK(std::abs(v.value - horodecki_optimum(rho).value) < 1e-9);
    for (const Mat2c& m : {v.filter.a, v.filter.b})
      CHECK((m * m.adjoint() - Mat2c::Identity()).cwiseAbs().maxCoeff() < 1e-9);
  }

  CHECK_THROWS_AS(filter_to_violation(werner_state(0.6)), Error);
  try {
    filter_to_violation(werner_state(0.6));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOutsideCylinders);
  }
}
