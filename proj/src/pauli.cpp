#include "slocc/pauli.hpp"

#include <cmath>
#include <sstream>

#include "slocc/errors.hpp"

namespace slocc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotInLightCone: return "NotInLightCone";
    case ErrorKind::ComplexSpectrum: return "ComplexSpectrum";
    case ErrorKind::DegenerateClass: return "DegenerateClass";
    case ErrorKind::NotUnitDeterminant: return "NotUnitDeterminant";
    case ErrorKind::NotOrthochronous: return "NotOrthochronous";
    case ErrorKind::NotProperLorentz: return "NotProperLorentz";
    case ErrorKind::BoundaryClass: return "BoundaryClass";
    case ErrorKind::NotAState: return "NotAState";
    case ErrorKind::NotUnitVector: return "NotUnitVector";
    case ErrorKind::NotOutsideCylinders: return "NotOutsideCylinders";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

const Mat4& minkowski_metric() {
  static const Mat4 eta = Vec4(1.0, -1.0, -1.0, -1.0).asDiagonal();
  return eta;
}

const Mat2c& pauli(int mu) {
  static const std::array<Mat2c, 4> sigma = [] {
    std::array<Mat2c, 4> s;
    const cplx i(0.0, 1.0);
    s[0] << 1.0, 0.0, 0.0, 1.0;
    s[1] << 0.0, 1.0, 1.0, 0.0;
    s[2] << 0.0, -i, i, 0.0;
    s[3] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma.at(static_cast<std::size_t>(mu));
}

Mat4c kron(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat4c pauli_product(int mu, int nu) { return kron(pauli(mu), pauli(nu)); }

HermitianOp HermitianOp::checked(const Mat4c& m, double tol) {
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(asym <= tol)) {
    std::ostringstream os;
    os << "entries[i][j] != conj(entries[j][i]); max deviation " << asym << " > " << tol;
    throw Error(ErrorKind::NotHermitian, os.str());
  }
  return HermitianOp(0.5 * (m + m.adjoint()));
}

HermitianOp HermitianOp::hermitian_part(const Mat4c& m) { return HermitianOp(0.5 * (m + m.adjoint())); }

Vec4 HermitianOp::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Mat4c> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

PauliTensor from_hermitian(const Mat4c& w, double tol) {
  return from_hermitian(HermitianOp::checked(w, tol));
}

PauliTensor from_hermitian(const HermitianOp& w) {
  PauliTensor out;
  const Mat4c& m = w.matrix();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const cplx t = (m * pauli_product(mu, nu)).trace() * 0.25;
      if (std::abs(t.imag()) > 1e-10)
        throw Error(ErrorKind::NotHermitian, "imaginary Pauli coefficient");
      out.omega(mu, nu) = t.real();
    }
  }
  return out;
}

HermitianOp to_hermitian(const PauliTensor& omega) {
  Mat4c m = Mat4c::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      if (omega(mu, nu) != 0.0) m += omega(mu, nu) * pauli_product(mu, nu);
  return HermitianOp::hermitian_part(m);
}

HermitianOp partial_transpose(const HermitianOp& w) {
  const Mat4c& m = w.matrix();
  Mat4c out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int ap = 0; ap < 2; ++ap)
        for (int bp = 0; bp < 2; ++bp) out(2 * a + b, 2 * ap + bp) = m(2 * a + bp, 2 * ap + b);
  return HermitianOp::hermitian_part(out);
}

PauliTensor partial_transpose(const PauliTensor& omega) {
  PauliTensor out = omega;
  out.omega.col(2) *= -1.0;
  return out;
}

namespace {

bool in_forward_cone(const FourVector& v) {
  const double scale = std::max(1.0, std::abs(v.q(0)));
  return v.q(0) >= 0.0 && v.minkowski_square() >= -1e-12 * scale * scale;
}

Mat2c single_qubit(const FourVector& v) {
  Mat2c m = Mat2c::Zero();
  for (int mu = 0; mu < 4; ++mu) m += v.q(mu) * pauli(mu);
  return m;
}

}  // namespace

HermitianOp product_state(const FourVector& q_a, const FourVector& q_b) {
  if (!in_forward_cone(q_a) || !in_forward_cone(q_b))
    throw Error(ErrorKind::NotInLightCone, "product_state needs q0 >= 0 and q.q >= 0");
  return HermitianOp::hermitian_part(kron(single_qubit(q_a), single_qubit(q_b)));
}

Mat3 spatial_block(const PauliTensor& omega) { return omega.omega.block<3, 3>(1, 1); }

HermitianOp singlet_projector() {
  Eigen::Vector4cd psi(0.0, 1.0, -1.0, 0.0);
  psi /= std::sqrt(2.0);
  return HermitianOp::hermitian_part(psi * psi.adjoint());
}

HermitianOp phi_plus_projector() {
  Eigen::Vector4cd phi(1.0, 0.0, 0.0, 1.0);
  phi /= std::sqrt(2.0);
  return HermitianOp::hermitian_part(phi * phi.adjoint());
}

HermitianOp werner_state(double p) {
  return p * singlet_projector() + (1.0 - p) * 0.25 * HermitianOp::identity();
}

}  // namespace slocc
