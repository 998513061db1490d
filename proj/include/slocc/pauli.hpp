#pragma once

// Two-qubit operators and their real Pauli tensors.
//
// A Hermitian operator W on C^2 (x) C^2 is written W = omega_{mu nu} s^mu (x) s^nu
// with s^0 = I and s^1..s^3 the Pauli matrices; the first factor is Alice's,
// the second Bob's. Row/column index of the 4x4 matrix is 2*alice + bob.

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace slocc {

using cplx = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

inline constexpr double kHermitianTol = 1e-12;

/// The Minkowski metric diag(1,-1,-1,-1).
const Mat4& minkowski_metric();

/// Pauli matrix s^mu, mu = 0..3 (s^2 = [[0,-i],[i,0]]).
const Mat2c& pauli(int mu);

/// s^mu (x) s^nu.
Mat4c pauli_product(int mu, int nu);

Mat4c kron(const Mat2c& a, const Mat2c& b);

/// A 4x4 Hermitian matrix. Construction through `checked` validates the
/// Hermiticity invariant; `hermitian_part` is for results of arithmetic that
/// are Hermitian up to rounding.
class HermitianOp {
 public:
  HermitianOp() : m_(Mat4c::Zero()) {}

  static HermitianOp checked(const Mat4c& m, double tol = kHermitianTol);
  static HermitianOp hermitian_part(const Mat4c& m);
  static HermitianOp identity() { return HermitianOp(Mat4c::Identity()); }

  const Mat4c& matrix() const { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }
  /// Ascending eigenvalues.
  Vec4 eigenvalues() const;

  HermitianOp operator+(const HermitianOp& o) const { return HermitianOp(m_ + o.m_); }
  HermitianOp operator-(const HermitianOp& o) const { return HermitianOp(m_ - o.m_); }
  HermitianOp operator*(double s) const { return HermitianOp(m_ * s); }

 private:
  explicit HermitianOp(const Mat4c& m) : m_(m) {}
  Mat4c m_;
};

inline HermitianOp operator*(double s, const HermitianOp& w) { return w * s; }

/// Real coefficients omega_{mu nu}.
struct PauliTensor {
  Mat4 omega = Mat4::Zero();

  double operator()(int mu, int nu) const { return omega(mu, nu); }
  double& operator()(int mu, int nu) { return omega(mu, nu); }
};

/// A single-qubit observable q_mu s^mu; states lie in the forward light cone.
struct FourVector {
  Vec4 q = Vec4::Zero();

  /// Minkowski square q0^2 - |q|^2.
  double minkowski_square() const { return q(0) * q(0) - q.tail<3>().squaredNorm(); }
};

/// Pauli tensor of a Hermitian operator; throws NotHermitian.
PauliTensor from_hermitian(const HermitianOp& w);
PauliTensor from_hermitian(const Mat4c& w, double tol = kHermitianTol);

HermitianOp to_hermitian(const PauliTensor& omega);

/// Transpose on Bob's factor.
HermitianOp partial_transpose(const HermitianOp& w);
/// The same map in Pauli coordinates: column 2 changes sign.
PauliTensor partial_transpose(const PauliTensor& omega);

/// (q_a . s) (x) (q_b . s); throws NotInLightCone.
HermitianOp product_state(const FourVector& q_a, const FourVector& q_b);

/// omega_{ij}, i, j in {1,2,3}.
Mat3 spatial_block(const PauliTensor& omega);

/// The Bell projectors.
HermitianOp singlet_projector();
HermitianOp phi_plus_projector();

/// p |psi-><psi-| + (1-p) I/4.
HermitianOp werner_state(double p);

}  // namespace slocc
