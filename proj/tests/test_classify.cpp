#include <doctest.h>

#include <cmath>

#include "slocc/classify.hpp"
#include "slocc/errors.hpp"
#include "test_support.hpp"

using namespace slocc;

namespace {

HermitianOp canonical(double w0, double w1, double w2, double w3) { return canonical_form({w0, w1, w2, w3}); }

bool in_orbit(const SloccCoord& c, const SloccCoord& target, double tol) {
  for (const SloccCoord& o : tetrahedral_orbit(target))
    if ((o.as_vector() - c.as_vector()).cwiseAbs().maxCoeff() <= tol) return true;
  return false;
}

}  // namespace

TEST_CASE("is_state") {
  CHECK(is_state(0.25 * HermitianOp::identity()));
  CHECK(is_state(singlet_projector()));
  CHECK_FALSE(is_state(partial_transpose(singlet_projector())));
}

TEST_CASE("is_potential_witness") {
  Rng rng = stream(41, 0);
  for (int k = 0; k < 20; ++k) CHECK(is_potential_witness(random_mixed_state(rng)));
  CHECK(is_potential_witness(canonical(1, 1, 1, 1)));
  CHECK_FALSE(is_potential_witness(canonical(1, 1.2, 0, 0)));
  // The product probe that exposes the last example.
  const FourVector q{Vec4(0.5, 0.5, 0, 0)};
  const FourVector qm{Vec4(0.5, -0.5, 0, 0)};
  CHECK(4.0 * q.q.dot(from_hermitian(canonical(1, 1.2, 0, 0)).omega * qm.q) < 0.0);

  SUBCASE("product pairing of CHSH-like witnesses stays nonnegative") {
    for (int k = 0; k < 20; ++k) CHECK(is_potential_witness(apply_filter_witness(canonical(1, 0.9, -0.7, 0.5),
                                                                                   random_filter(rng))));
  }
}

TEST_CASE("is_ppt") {
  CHECK(is_ppt(0.25 * HermitianOp::identity()));
  CHECK_FALSE(is_ppt(singlet_projector()));
  CHECK_THROWS_AS(is_ppt(partial_transpose(singlet_projector())), Error);
}

TEST_CASE("polytope memberships") {
  const Membership o0 = octahedron_membership({0, 0, 0});
  CHECK(o0.member);
  CHECK(o0.margin == 1.0);
  const Membership o1 = octahedron_membership({1, 0, 0});
  CHECK(o1.member);
  CHECK(o1.margin == 0.0);
  const Membership ow = octahedron_membership({0.5, 0.5, -0.5});
  CHECK_FALSE(ow.member);
  CHECK(ow.margin == doctest::Approx(-0.5));
  CHECK_FALSE(is_ppt(werner_state(0.5)));

  const Membership t0 = tetrahedron_membership({1, 1, -1});
  CHECK(t0.member);
  CHECK(t0.margin == 0.0);
  const Membership t1 = tetrahedron_membership({1, 1, 1});
  CHECK_FALSE(t1.member);
  CHECK(t1.margin == -2.0);
  CHECK(tetrahedron_membership({0, 0, 0}).margin == 1.0);

  const Membership c1 = cube_membership({1, 1, 1});
  CHECK(c1.member);
  CHECK(c1.margin == 0.0);
  CHECK(cube_membership({0, 0, 0}).margin == 1.0);
  CHECK_FALSE(cube_membership({1.2, 0, 0}).member);
}

TEST_CASE("tetrahedron margin matches the eigenvalues of canonical states") {
  Rng rng = stream(42, 0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const Vec3 c(u(rng), u(rng), u(rng));
    const HermitianOp rho = canonical(0.25, 0.25 * c(0), 0.25 * c(1), 0.25 * c(2));
    const double min_eig = rho.eigenvalues()(0);
    CHECK(tetrahedron_membership(SloccCoord::from_vector(c)).margin == doctest::Approx(4.0 * min_eig));
  }
}

TEST_CASE("duality_pairing") {
  CHECK(duality_pairing({1, 0, 0, 0}, {1, 0, 0, 0}) == 4.0);
  CHECK(duality_pairing({1, 1, 1, 1}, {1, 1, 1, -1}) == -8.0);
  CHECK(duality_pairing({1, 1, 1, -1}, {1, 1, 1, -1}) == 0.0);

  Rng rng = stream(43, 0);
  for (int k = 0; k < 200; ++k) {
    const LorentzSV s = random_strict_sv(rng);
    const LorentzSV t = random_strict_sv(rng);
    CHECK(duality_pairing(s, t) == doctest::Approx(duality_pairing_orbit_min(s, t)).epsilon(1e-12));
  }

  SUBCASE("sampled filters approach the -8 bound from above") {
    const HermitianOp w = canonical(1, 1, 1, 1);
    const HermitianOp rho = canonical(1, 1, 1, -1);
    const testing::DualityTrial trial = testing::duality_trial(w, rho, rng, 200, 6);
    CHECK(trial.sampled_min >= -8.0 - 1e-7);
    CHECK(trial.refined_min == doctest::Approx(-8.0).epsilon(1e-3));
  }
}

TEST_CASE("duality bound on a few canonical pairs") {
  Rng rng = stream(44, 0);
  for (int k = 0; k < 10; ++k) {
    const LorentzSV s = random_strict_sv(rng);
    const LorentzSV t = random_strict_sv(rng);
    const double bound = duality_pairing(s, t);
    const testing::DualityTrial trial = testing::duality_trial(canonical_form(s), canonical_form(t), rng);
    CHECK(trial.sampled_min >= bound - 1e-7);
    CHECK(trial.refined_min >= bound - 1e-7);
    CHECK(std::abs(trial.refined_min - bound) <= 1e-2 * 4.0 * s.w0 * t.w0);
  }
}

TEST_CASE("dual_plane_detection") {
  CHECK(dual_plane_detection({-1, -1, 1}, {1, 1, -1}));
  CHECK_FALSE(dual_plane_detection({-1, -1, 1}, {0, 0, 0}));
  CHECK_FALSE(dual_plane_detection({0.3, -0.9, 0.5}, {0, 0, 0}));

  // Octahedron against cube on a 0.25 grid: never incriminated.
  std::vector<SloccCoord> cube_pts;
  std::vector<SloccCoord> octa_pts;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      for (int l = -4; l <= 4; ++l) {
        const SloccCoord c{0.25 * i, 0.25 * j, 0.25 * l};
        cube_pts.push_back(c);
        if (std::abs(i) + std::abs(j) + std::abs(l) <= 4) octa_pts.push_back(c);
      }
  int detections = 0;
  for (const auto& w : cube_pts)
    for (const auto& r : octa_pts) detections += dual_plane_detection(w, r) ? 1 : 0;
  CHECK(detections == 0);

  // Support of the cube on octahedron vertices is 1.
  const Vec3 corner(1, 1, 1);
  for (int a = 0; a < 3; ++a)
    for (double sgn : {1.0, -1.0}) {
      Vec3 v = Vec3::Zero();
      v(a) = sgn;
      CHECK(std::abs(v.dot(corner)) == 1.0);
    }
}

TEST_CASE("classify") {
  const Classification mixed = classify(0.25 * HermitianOp::identity());
  CHECK(mixed.is_state);
  CHECK(mixed.is_separable);
  CHECK(mixed.is_potential_witness);
  REQUIRE(mixed.coords);
  CHECK(*mixed.coords == SloccCoord{0, 0, 0});

  const Classification singlet = classify(singlet_projector());
  CHECK(singlet.is_state);
  CHECK_FALSE(singlet.is_separable);
  CHECK(singlet.is_potential_witness);

  const Classification corner = classify(canonical(1, 1, 1, 1));
  CHECK_FALSE(corner.is_state);
  CHECK_FALSE(corner.is_separable);
  CHECK(corner.is_potential_witness);
  CHECK(corner.eigenvalues(0) == doctest::Approx(-2.0));
  CHECK(corner.eigenvalues(1) == doctest::Approx(2.0));
  CHECK(corner.eigenvalues(3) == doctest::Approx(2.0));

  Mat4c bad = Mat4c::Identity();
  bad(0, 3) = 1.0;
  CHECK_THROWS_AS(classify(bad), Error);

  SUBCASE("nesting on arbitrary Hermitian inputs") {
    Rng rng = stream(45, 0);
    for (int k = 0; k < 100; ++k) {
      const Classification c = classify(testing::random_hermitian(rng));
      if (c.is_separable) CHECK(c.is_state);
      if (c.is_state) CHECK(c.is_potential_witness);
    }
    for (int k = 0; k < 100; ++k) {
      const Classification c = classify(random_mixed_state(rng, 2));
      CHECK(c.is_state);
      CHECK(c.is_potential_witness);
    }
  }
}

TEST_CASE("partial transpose reflects the class") {
  Rng rng = stream(46, 0);
  for (int k = 0; k < 200; ++k) {
    const HermitianOp rho = random_mixed_state(rng);
    const SloccCoord c = slocc_coord(lorentz_singular_values(from_hermitian(rho)));
    const SloccCoord r = slocc_coord(lorentz_singular_values(from_hermitian(partial_transpose(rho))));
    CHECK(in_orbit(r, {c.x, -c.y, c.z}, 1e-8));
  }
}

TEST_CASE("PPT agrees with the octahedron on random states") {
  Rng rng = stream(47, 0);
  int compared = 0;
  for (int k = 0; k < 500; ++k) {
    const HermitianOp rho = random_mixed_state(rng);
    const SloccCoord c = slocc_coord(lorentz_singular_values(from_hermitian(rho)));
    const Membership m = octahedron_membership(c);
    const double pt_min = partial_transpose(rho).eigenvalues()(0);
    if (std::abs(m.margin) <= 1e-6 || std::abs(pt_min) <= 1e-6) continue;
    ++compared;
    CHECK(is_ppt(rho) == m.member);
  }
  CHECK(compared > 400);
}
