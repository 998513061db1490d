#pragma once

// Small dense eigenproblems used by the Lorentz machinery.

#include <Eigen/Dense>

#include "slocc/pauli.hpp"

namespace slocc {

/// Diagonal similarity D^{-1} M D with power-of-two entries chosen so that
/// row and column norms are comparable (Parlett-Reinsch balancing).
struct Balanced {
  Mat4 matrix;
  Vec4 scaling;  // diagonal of D
};
Balanced balance(const Mat4& m);

/// Eigenpairs of a general real 4x4 matrix: balancing, Hessenberg reduction
/// and shifted QR. Eigenvectors are returned for the original matrix.
struct EigenPairs {
  Eigen::Vector4cd values;
  Eigen::Matrix4cd vectors;
};
EigenPairs general_eigen(const Mat4& m);

/// Real eigenvalues sorted descending. Imaginary parts above `imag_tol` raise
/// ComplexSpectrum; smaller ones are truncated.
struct RealEigen {
  Vec4 values;
  Mat4 vectors;  // column k belongs to values(k)
  double max_imag = 0.0;
};
RealEigen real_eigen(const Mat4& m, double imag_tol);

/// Singular values of a 3x3 real matrix, descending.
Vec3 singular_values(const Mat3& m);

}  // namespace slocc
