#pragma once

// The I(3322) witness family with three dichotomic spin measurements per
// party, its Lorentz singular values through the direction Gram matrices,
// and the randomized scan comparing its classes with the CHSH circles.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "slocc/lorentz.hpp"
#include "slocc/pauli.hpp"

namespace slocc {

struct TripleDirections {
  std::array<Vec3, 3> a{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  std::array<Vec3, 3> b{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};

  /// Throws NotUnitVector.
  void validate() const;
};

enum class Side { Alice, Bob };

/// 4 I(x)I + I(x)(b1+b2).s - (a1+a2).s(x)I - (a1+a2).s(x)(b1+b2).s
///   - (a1-a2).s(x)b3.s - a3.s(x)(b1-b2).s
HermitianOp w3322_witness(const TripleDirections& t);

/// The constant coefficient matrix W0 in direction coordinates.
const Mat4& w0_matrix();

/// [[1,0],[0,(v1 v2 v3)]]: the 4x4 direction matrix of one party.
Mat4 direction_matrix(const TripleDirections& t, Side side);

/// A^T eta A from the pairwise cosines.
Mat4 gram_eta(const TripleDirections& t, Side side);

/// Pauli tensor of the witness as a direction-matrix product.
PauliTensor w3322_tensor(const TripleDirections& t);

/// Square roots of the eigenvalues of (B^T eta B) W0^T (A^T eta A) W0,
/// ordered and signed by det(omega). Throws ComplexSpectrum.
LorentzSV i3322_singular_values(const TripleDirections& t);

/// Support function of the convex hull of the three unit circles in the
/// coordinate planes: sqrt(1 - min u_i^2) for unit u.
double circle_hull_support(const Vec3& u);

/// min over unit u of support(u) - c.u, from a 2562-vertex geodesic grid
/// refined by Nelder-Mead. Member iff margin >= -1e-6.
double hull_membership(const SloccCoord& c);

/// Vertices of the icosahedron subdivided `levels` times, on the unit sphere.
std::vector<Vec3> geodesic_grid(int levels = 4);

struct ScanRecord {
  std::uint64_t id = 0;
  std::array<double, 6> cosines{};  // a12, a13, a23, b12, b13, b23
  LorentzSV sv;
  SloccCoord coords;
  double hull_margin = 0.0;
};

struct ScanSummary {
  std::uint64_t n = 0;
  double min_margin = 0.0;
  std::uint64_t skipped_complex = 0;
  std::uint64_t skipped_degenerate = 0;
  double inplane_max_radius = 0.0;
  std::uint64_t inplane_count = 0;
};

struct ScanResult {
  std::vector<ScanRecord> records;  // accepted configurations, in id order
  ScanSummary summary;
};

inline constexpr double kHullTol = 1e-6;
inline constexpr double kInPlaneBand = 1e-3;

/// Configuration `index` of a scan with `seed`: six independent uniform
/// directions.
TripleDirections scan_configuration(std::uint64_t seed, std::uint64_t index);

/// n configurations processed by `threads` workers (0: hardware
/// concurrency). Results do not depend on the worker count.
ScanResult scan(std::uint64_t n, std::uint64_t seed, unsigned threads = 0);

}  // namespace slocc
