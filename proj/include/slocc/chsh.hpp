#pragma once

// CHSH operators and witnesses, their circle geometry in class coordinates,
// the optimal CHSH witness for a given state, and SLOCC filtering to a
// violation.
//
// Pairings are normalized by the state's trace: for W_B = (2 + B)/2 the value
// Tr(rho W_B) / Tr(rho) = 1 + <B>/2 is negative exactly when rho violates
// the CHSH inequality defined by B.

#include <optional>

#include "slocc/lorentz.hpp"
#include "slocc/pauli.hpp"

namespace slocc {

struct ChshDirections {
  Vec3 a = Vec3::UnitX();
  Vec3 a_prime = Vec3::UnitY();
  Vec3 b = Vec3::UnitX();
  Vec3 b_prime = Vec3::UnitY();

  /// Throws NotUnitVector unless every direction has norm 1 within 1e-12.
  void validate() const;
};

struct ChshAngles {
  double alpha = 0.0;
  double beta = 0.0;

  static ChshAngles from_directions(const ChshDirections& d);
};

enum class Plane { YZ = 0, XZ = 1, XY = 2 };

struct CylinderReport {
  bool member = false;
  double margin = 0.0;
  std::optional<int> violating_axis;  // axis of the most violated cylinder
  SloccCoord coords;
};

/// a.s (x) (b + b').s + a'.s (x) (b - b').s
HermitianOp chsh_operator(const ChshDirections& d);

/// (2 + sign * B) / 2, sign = +1 or -1.
HermitianOp chsh_witness(const ChshDirections& d, int sign = +1);

/// Tr(rho W) / Tr(rho).
double normalized_pairing(const HermitianOp& rho, const HermitianOp& w);

/// Singular values of the spatial block of a CHSH witness with angles
/// (alpha, beta): 2 w^2 = 1 +- sqrt(1 - sin^2 alpha sin^2 beta).
std::pair<double, double> chsh_circle_values(const ChshAngles& angles);

struct HorodeckiResult {
  double value = 0.0;       // 1 - sqrt(t1^2 + t2^2)
  Plane best_plane = Plane::XY;
  Vec3 correlations;        // singular values of the normalized correlation matrix
  ChshDirections directions;  // a + witness attaining `value`
};

/// Optimal CHSH pairing; uses only the spatial block of rho. Throws NotAState.
HorodeckiResult horodecki_optimum(const HermitianOp& rho);

/// Minimum over the three principal planes of 1 - |rho x axis|, with the
/// plane that attains it.
std::pair<double, Plane> plane_projection_minimum(const Vec3& rho);

CylinderReport cylinder_membership(const SloccCoord& c, double tol = 1e-9);

/// Cylinder test on the class coordinates of a state. Throws NotAState and
/// DegenerateClass.
CylinderReport slocc_chsh_satisfies(const HermitianOp& rho);

struct ViolatingFilter {
  LocalFilter filter;
  ChshDirections directions;
  double value = 0.0;
  HermitianOp filtered_state;  // normalized
};

/// Filters a state outside the cylinders to its canonical form and picks the
/// optimal CHSH witness there. Throws NotAState, NotOutsideCylinders and
/// BoundaryClass.
ViolatingFilter filter_to_violation(const HermitianOp& rho);

/// Direct minimization of the normalized CHSH pairing over measurement
/// directions: grid over Bob's angles with Alice's directions set by best
/// response, then cyclic coordinate descent over all eight angles.
struct DirectMinimum {
  double value = 0.0;
  ChshDirections directions;
};
DirectMinimum minimize_chsh_directly(const HermitianOp& rho, int grid_points = 16, int sweeps = 200);

}  // namespace slocc
