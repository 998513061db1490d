#include "slocc/chsh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "slocc/classify.hpp"
#include "slocc/errors.hpp"
#include "slocc/optimize.hpp"

namespace slocc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_state(const HermitianOp& rho, bool normalized) {
  if (!is_state(rho)) throw Error(ErrorKind::NotAState, "operator has a negative eigenvalue");
  if (normalized && std::abs(rho.trace() - 1.0) > 1e-10)
    throw Error(ErrorKind::NotAState, "state must have unit trace");
  if (!(rho.trace() > 0.0)) throw Error(ErrorKind::NotAState, "state has zero trace");
}

Mat3 outer_sum(const ChshDirections& d) {
  return d.a * (d.b + d.b_prime).transpose() + d.a_prime * (d.b - d.b_prime).transpose();
}

// Tr(rho s^i (x) s^j) / Tr(rho), i, j = 1..3.
Mat3 correlations(const HermitianOp& rho) {
  return 4.0 * spatial_block(from_hermitian(rho)) / rho.trace();
}

Vec3 direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// 1 + <B>/2 for the + witness, given the correlation matrix.
double chsh_value(const Mat3& c, const ChshDirections& d) {
  return 1.0 + 0.5 * (d.a.dot(c * (d.b + d.b_prime)) + d.a_prime.dot(c * (d.b - d.b_prime)));
}

Vec3 anti_aligned(const Vec3& v) {
  const double n = v.norm();
  return n > 0.0 ? Vec3(-v / n) : Vec3(Vec3::UnitZ());
}

ChshDirections from_angles(const std::array<double, 8>& t) {
  return {direction(t[0], t[1]), direction(t[2], t[3]), direction(t[4], t[5]), direction(t[6], t[7])};
}

std::array<double, 2> angles_of(const Vec3& v) {
  return {std::acos(std::clamp(v(2), -1.0, 1.0)), std::atan2(v(1), v(0))};
}

}  // namespace

void ChshDirections::validate() const {
  for (const Vec3* v : {&a, &a_prime, &b, &b_prime})
    if (std::abs(v->norm() - 1.0) > 1e-12) throw Error(ErrorKind::NotUnitVector, "CHSH direction is not a unit vector");
}

ChshAngles ChshAngles::from_directions(const ChshDirections& d) {
  return {std::acos(std::clamp(d.a.dot(d.a_prime), -1.0, 1.0)), std::acos(std::clamp(d.b.dot(d.b_prime), -1.0, 1.0))};
}

HermitianOp chsh_operator(const ChshDirections& d) {
  d.validate();
  PauliTensor omega;
  omega.omega.block<3, 3>(1, 1) = outer_sum(d);
  return to_hermitian(omega);
}

HermitianOp chsh_witness(const ChshDirections& d, int sign) {
  d.validate();
  PauliTensor omega;
  omega(0, 0) = 1.0;
  omega.omega.block<3, 3>(1, 1) = (sign >= 0 ? 0.5 : -0.5) * outer_sum(d);
  return to_hermitian(omega);
}

double normalized_pairing(const HermitianOp& rho, const HermitianOp& w) {
  return (rho.matrix() * w.matrix()).trace().real() / rho.trace();
}

std::pair<double, double> chsh_circle_values(const ChshAngles& angles) {
  const double s = std::sin(angles.alpha) * std::sin(angles.beta);
  const double root = std::sqrt(std::max(0.0, 1.0 - s * s));
  return {std::sqrt(0.5 * (1.0 + root)), std::sqrt(0.5 * (1.0 - root))};
}

std::pair<double, Plane> plane_projection_minimum(const Vec3& r) {
  const std::array<double, 3> values = {1.0 - std::hypot(r(1), r(2)), 1.0 - std::hypot(r(0), r(2)),
                                        1.0 - std::hypot(r(0), r(1))};
  const auto it = std::min_element(values.begin(), values.end());
  return {*it, static_cast<Plane>(it - values.begin())};
}

HorodeckiResult horodecki_optimum(const HermitianOp& rho) {
  require_state(rho, true);
  const Mat3 t = correlations(rho);
  Eigen::JacobiSVD<Mat3> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 s = svd.singularValues();

  HorodeckiResult out;
  out.correlations = s;
  out.value = 1.0 - std::hypot(s(0), s(1));
  out.best_plane = plane_projection_minimum(s).second;

  const double theta = std::atan2(s(1), s(0));
  const Vec3 v1 = svd.matrixV().col(0);
  const Vec3 v2 = svd.matrixV().col(1);
  out.directions.a = -svd.matrixU().col(0);
  out.directions.a_prime = -svd.matrixU().col(1);
  out.directions.b = (std::cos(theta) * v1 + std::sin(theta) * v2).normalized();
  out.directions.b_prime = (std::cos(theta) * v1 - std::sin(theta) * v2).normalized();
  return out;
}

CylinderReport cylinder_membership(const SloccCoord& c, double tol) {
  // Pair sums indexed by the axis of the cylinder that bounds them.
  const std::array<double, 3> pairs = {c.y * c.y + c.z * c.z, c.x * c.x + c.z * c.z, c.x * c.x + c.y * c.y};
  const auto it = std::max_element(pairs.begin(), pairs.end());
  CylinderReport out;
  out.coords = c;
  out.margin = 1.0 - std::sqrt(*it);
  out.member = out.margin >= -tol;
  if (!out.member) out.violating_axis = static_cast<int>(it - pairs.begin());
  return out;
}

CylinderReport slocc_chsh_satisfies(const HermitianOp& rho) {
  require_state(rho, false);
  return cylinder_membership(slocc_coord(lorentz_singular_values(from_hermitian(rho))));
}

ViolatingFilter filter_to_violation(const HermitianOp& rho) {
  require_state(rho, true);
  const LorentzSVD svd = lorentz_svd(from_hermitian(rho));
  const CylinderReport cyl = cylinder_membership(slocc_coord(svd.sv));
  if (!(cyl.margin < -1e-6))
    throw Error(ErrorKind::NotOutsideCylinders, "class lies inside the three cylinders; no filter violates CHSH");

  ViolatingFilter out;
  out.filter = LocalFilter::checked(sl2c_from_lorentz(svd.left), sl2c_from_lorentz(svd.right));
  const HermitianOp filtered = apply_filter_state(rho, out.filter);
  out.filtered_state = (1.0 / filtered.trace()) * filtered;
  out.directions = horodecki_optimum(out.filtered_state).directions;
  out.value = normalized_pairing(out.filtered_state, chsh_witness(out.directions));
  return out;
}

DirectMinimum minimize_chsh_directly(const HermitianOp& rho, int grid_points, int sweeps) {
  require_state(rho, false);
  const Mat3 c = correlations(rho);

  // Grid over Bob's two directions; Alice answers optimally.
  double best = std::numeric_limits<double>::infinity();
  ChshDirections best_dirs;
  std::vector<Vec3> grid;
  for (int i = 0; i < grid_points; ++i)
    for (int j = 0; j < grid_points; ++j)
      grid.push_back(direction(kPi * (i + 0.5) / grid_points, 2.0 * kPi * j / grid_points));
  for (const Vec3& b : grid) {
    for (const Vec3& bp : grid) {
      ChshDirections d;
      d.b = b;
      d.b_prime = bp;
      d.a = anti_aligned(c * (b + bp));
      d.a_prime = anti_aligned(c * (b - bp));
      const double v = chsh_value(c, d);
      if (v < best) {
        best = v;
        best_dirs = d;
      }
    }
  }

  std::array<double, 8> t{};
  for (int k = 0; k < 4; ++k) {
    const Vec3& v = k == 0 ? best_dirs.a : k == 1 ? best_dirs.a_prime : k == 2 ? best_dirs.b : best_dirs.b_prime;
    const auto ang = angles_of(v);
    t[static_cast<std::size_t>(2 * k)] = ang[0];
    t[static_cast<std::size_t>(2 * k + 1)] = ang[1];
  }
  best = chsh_value(c, from_angles(t));
  double step = kPi / grid_points;
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    const double before = best;
    for (std::size_t k = 0; k < 8; ++k) {
      auto along = [&](double x) {
        std::array<double, 8> trial = t;
        trial[k] = x;
        return chsh_value(c, from_angles(trial));
      };
      const LineMinimum lm = golden_section(along, t[k] - step, t[k] + step, 40);
      if (lm.value < best) {
        best = lm.value;
        t[k] = lm.x;
      }
    }
    if (before - best < 1e-15) {
      step *= 0.5;
      if (step < 1e-9) break;
    }
  }
  return {best, from_angles(t)};
}

}  // namespace slocc
