#pragma once

// Nested cones of two-qubit operators: separable states inside states inside
// potential entanglement witnesses, both as 16-dimensional predicates and as
// polytopes in class coordinates (octahedron, tetrahedron, cube).

#include <cstdint>
#include <optional>

#include "slocc/lorentz.hpp"
#include "slocc/pauli.hpp"

namespace slocc {

inline constexpr double kPsdTol = 1e-10;         // relative to the trace scale
inline constexpr double kMembershipTol = 1e-9;   // polytope margins
inline constexpr double kWitnessTol = 1e-9;      // product-state pairing

/// Margin is positive inside, zero on the boundary, negative outside.
struct Membership {
  bool member = false;
  double margin = 0.0;
};

bool is_state(const HermitianOp& w, double tol = kPsdTol);

/// Smallest value of q_a^T omega q_b over q0 = 1, |q| <= 1, from alternating
/// best responses started at deterministic and seeded random points.
struct ProductMinimum {
  double value = 0.0;
  Vec4 q_a = Vec4::Zero();
  Vec4 q_b = Vec4::Zero();
};
ProductMinimum minimize_product_pairing(const PauliTensor& omega, int random_probes = 1000,
                                        std::uint64_t seed = 0x5EED);

bool is_potential_witness(const HermitianOp& w, double tol = kWitnessTol);

/// Positivity of the partial transpose; throws NotAState.
bool is_ppt(const HermitianOp& rho, double tol = kPsdTol);

Membership octahedron_membership(const SloccCoord& c, double tol = kMembershipTol);
Membership tetrahedron_membership(const SloccCoord& c, double tol = kMembershipTol);
Membership cube_membership(const SloccCoord& c, double tol = kMembershipTol);

/// 4 (w0 w0' - w1 w1' - w2 w2' + w3 w3'): the infimum of Tr(W^N W'^M) over
/// local filters, for ordered singular values.
double duality_pairing(const LorentzSV& sv, const LorentzSV& sv_other);
/// 4 min over the tetrahedral representatives of sv_other of sum w_a w'_a.
double duality_pairing_orbit_min(const LorentzSV& sv, const LorentzSV& sv_other);

/// True when min over the 24 representatives of 1 + w . rho is below -tol.
bool dual_plane_detection(const SloccCoord& witness, const SloccCoord& rho, double tol = kMembershipTol);

struct Classification {
  bool is_state = false;
  bool is_separable = false;
  bool is_potential_witness = false;
  std::optional<LorentzSV> sv;          // absent when omega* omega has complex spectrum
  std::optional<SloccCoord> coords;     // absent for degenerate classes
  Vec4 eigenvalues = Vec4::Zero();      // of the operator, ascending
};

/// Throws NotHermitian.
Classification classify(const Mat4c& w);
Classification classify(const HermitianOp& w);

}  // namespace slocc
