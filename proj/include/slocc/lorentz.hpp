#pragma once

// Lorentz geometry of two-qubit operators.
//
// A local filter M = A (x) B with A, B in SL(2,C) acts on the Pauli tensor of
// a state as omega -> L_A omega L_B^T, where L_A, L_B are the proper
// orthochronous Lorentz transformations induced by A and B. The Minkowski
// adjoint omega* = eta omega^T eta transforms contragradiently, so the
// spectrum of omega* omega is a SLOCC invariant; its square roots, ordered
// and signed by det(omega), are the Lorentz singular values.

#include <optional>
#include <tuple>
#include <vector>

#include "slocc/pauli.hpp"

namespace slocc {

/// Lorentz singular values, w0 >= w1 >= w2 >= |w3|, sign(w3) = sign(det omega).
struct LorentzSV {
  double w0 = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;

  Vec4 as_vector() const { return {w0, w1, w2, w3}; }
  static LorentzSV from_vector(const Vec4& v) { return {v(0), v(1), v(2), v(3)}; }
};

/// Class coordinates (w1, w2, w3) / w0.
struct SloccCoord {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 as_vector() const { return {x, y, z}; }
  static SloccCoord from_vector(const Vec3& v) { return {v(0), v(1), v(2)}; }
  bool operator==(const SloccCoord&) const = default;
};

/// A pair of SL(2,C) matrices acting as A (x) B.
struct LocalFilter {
  Mat2c a = Mat2c::Identity();
  Mat2c b = Mat2c::Identity();

  /// Throws NotUnitDeterminant unless |det - 1| <= 1e-10 for both factors.
  static LocalFilter checked(const Mat2c& a, const Mat2c& b);
  Mat4c matrix() const { return kron(a, b); }
};

/// An element of SO+(1,3).
struct LorentzTransform {
  Mat4 l = Mat4::Identity();
};

inline constexpr double kImagTol = 1e-8;       // relative to ||omega||^2
inline constexpr double kNegativeClamp = 1e-9;  // relative to ||omega||^2
inline constexpr double kDegenerateW0 = 1e-12;

PauliTensor minkowski_adjoint(const PauliTensor& omega);

/// Eigen-decomposition of omega* omega: eigenvalues (descending, clamped) and
/// the matching real eigenvectors. Throws ComplexSpectrum.
struct LorentzSpectrum {
  Vec4 eigenvalues;
  Mat4 eigenvectors;
  double max_imag = 0.0;
};
LorentzSpectrum lorentz_spectrum(const PauliTensor& omega);

/// Signed, ordered square roots of a spectrum of omega* omega. `det_sign` is
/// the sign of det(omega); `scale` is ||omega||^2 for the negativity check.
LorentzSV signed_singular_values(const Vec4& eigenvalues_desc, double det_sign, double scale);

LorentzSV lorentz_singular_values(const PauliTensor& omega);

/// Throws DegenerateClass when w0 <= 1e-12.
SloccCoord slocc_coord(const LorentzSV& sv);

/// Images under permutations composed with sign flips of pairs (tetrahedral
/// group), deduplicated, in a deterministic order.
std::vector<SloccCoord> tetrahedral_orbit(const SloccCoord& c);

HermitianOp apply_filter_state(const HermitianOp& rho, const LocalFilter& f);
HermitianOp apply_filter_witness(const HermitianOp& w, const LocalFilter& f);

/// Tr(rho M^dag M) / ||M||^2 with the spectral norm; throws NotAState.
double filter_success_probability(const HermitianOp& rho, const LocalFilter& f);

/// L_{nu mu} = (1/2) Re Tr(s^nu A s^mu A^dag); throws NotUnitDeterminant.
LorentzTransform lorentz_from_sl2c(const Mat2c& a);

/// Inverse of lorentz_from_sl2c; the overall sign is fixed so that the entry
/// of largest modulus has nonnegative real part (then imaginary part).
Mat2c sl2c_from_lorentz(const LorentzTransform& l);

/// Lorentz transformations bringing a potential witness to canonical form:
/// L_A omega L_B^T = diag(sv). Throws BoundaryClass when omega* omega has no
/// time-like leading eigenvector or the canonical form is not reached.
struct LorentzSVD {
  LorentzTransform left;
  LorentzSV sv;
  LorentzTransform right;
};
LorentzSVD lorentz_svd(const PauliTensor& omega);

/// sum_alpha w_alpha s^alpha (x) s^alpha.
HermitianOp canonical_form(const LorentzSV& sv);

/// Checks of the LorentzTransform invariants, as max deviations.
double lorentz_defect(const Mat4& l);

}  // namespace slocc
