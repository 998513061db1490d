#include "slocc/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"

namespace slocc {

namespace {

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double omega_scale(const PauliTensor& omega) { return omega.omega.squaredNorm(); }

bool unit_det(const Mat2c& m) { return std::abs(m.determinant() - 1.0) <= 1e-10; }

// Minkowski inner product.
double mdot(const Vec4& a, const Vec4& b) { return a(0) * b(0) - a.tail<3>().dot(b.tail<3>()); }

// Completes the Minkowski-orthonormal rows [0, known) of `frame` using
// coordinate axes as seeds. Row 0 must be time-like.
void complete_frame(Mat4& frame, int known) {
  const Mat4& eta = minkowski_metric();
  int row = known;
  for (int seed = 0; seed < 4 && row < 4; ++seed) {
    Vec4 v = Vec4::Unit(seed);
    for (int k = 0; k < row; ++k) {
      const Vec4 e = frame.row(k).transpose();
      v -= (mdot(e, v) / eta(k, k)) * e;
    }
    const double n2 = -mdot(v, v);
    if (n2 < 1e-6) continue;
    frame.row(row++) = v.transpose() / std::sqrt(n2);
  }
}

}  // namespace

LocalFilter LocalFilter::checked(const Mat2c& a, const Mat2c& b) {
  if (!unit_det(a) || !unit_det(b))
    throw Error(ErrorKind::NotUnitDeterminant, "filter factors must have det = 1 within 1e-10");
  return LocalFilter{a, b};
}

PauliTensor minkowski_adjoint(const PauliTensor& omega) {
  const Mat4& eta = minkowski_metric();
  return PauliTensor{eta * omega.omega.transpose() * eta};
}

LorentzSpectrum lorentz_spectrum(const PauliTensor& omega) {
  const double scale = omega_scale(omega);
  const Mat4 product = minkowski_adjoint(omega).omega * omega.omega;
  const RealEigen re = real_eigen(product, kImagTol * scale);
  LorentzSpectrum out{re.values, re.vectors, re.max_imag};
  return out;
}

LorentzSV signed_singular_values(const Vec4& eigenvalues_desc, double det_sign, double scale) {
  Vec4 roots;
  for (int k = 0; k < 4; ++k) {
    double lambda = eigenvalues_desc(k);
    if (lambda < 0.0) {
      if (lambda < -kNegativeClamp * scale) {
        std::ostringstream os;
        os << "negative eigenvalue " << lambda << " of omega* omega";
        throw Error(ErrorKind::ComplexSpectrum, os.str());
      }
      lambda = 0.0;
    }
    roots(k) = std::sqrt(lambda);
  }
  std::sort(roots.data(), roots.data() + 4, std::greater<>());
  if (det_sign < 0.0) roots(3) = -roots(3);
  return LorentzSV::from_vector(roots);
}

LorentzSV lorentz_singular_values(const PauliTensor& omega) {
  const LorentzSpectrum spec = lorentz_spectrum(omega);
  return signed_singular_values(spec.eigenvalues, sign_of(omega.omega.determinant()),
                                omega_scale(omega));
}

SloccCoord slocc_coord(const LorentzSV& sv) {
  if (!(sv.w0 > kDegenerateW0))
    throw Error(ErrorKind::DegenerateClass, "w0 vanishes; class coordinates undefined");
  return {sv.w1 / sv.w0, sv.w2 / sv.w0, sv.w3 / sv.w0};
}

std::vector<SloccCoord> tetrahedral_orbit(const SloccCoord& c) {
  static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  static constexpr double flips[4][3] = {{1, 1, 1}, {-1, -1, 1}, {-1, 1, -1}, {1, -1, -1}};
  const Vec3 v = c.as_vector();
  std::vector<SloccCoord> out;
  out.reserve(24);
  for (const auto& p : perms) {
    for (const auto& s : flips) {
      const SloccCoord img{s[0] * v(p[0]), s[1] * v(p[1]), s[2] * v(p[2])};
      // -0.0 and 0.0 are the same point
      const SloccCoord clean{img.x + 0.0, img.y + 0.0, img.z + 0.0};
      if (std::find(out.begin(), out.end(), clean) == out.end()) out.push_back(clean);
    }
  }
  return out;
}

HermitianOp apply_filter_state(const HermitianOp& rho, const LocalFilter& f) {
  const Mat4c m = f.matrix();
  return HermitianOp::hermitian_part(m * rho.matrix() * m.adjoint());
}

HermitianOp apply_filter_witness(const HermitianOp& w, const LocalFilter& f) {
  const Mat4c minv = kron(f.a.inverse(), f.b.inverse());
  return HermitianOp::hermitian_part(minv.adjoint() * w.matrix() * minv);
}

double filter_success_probability(const HermitianOp& rho, const LocalFilter& f) {
  const Vec4 ev = rho.eigenvalues();
  if (std::abs(rho.trace() - 1.0) > 1e-10 || ev(0) < -1e-10)
    throw Error(ErrorKind::NotAState, "filter_success_probability needs a normalized positive state");
  const Mat4c m = f.matrix();
  Eigen::JacobiSVD<Mat4c> svd(m);
  const double norm = svd.singularValues()(0);
  return (rho.matrix() * m.adjoint() * m).trace().real() / (norm * norm);
}

LorentzTransform lorentz_from_sl2c(const Mat2c& a) {
  if (!unit_det(a)) throw Error(ErrorKind::NotUnitDeterminant, "|det A - 1| > 1e-10");
  LorentzTransform out;
  for (int mu = 0; mu < 4; ++mu) {
    const Mat2c image = a * pauli(mu) * a.adjoint();
    for (int nu = 0; nu < 4; ++nu) out.l(nu, mu) = 0.5 * (pauli(nu) * image).trace().real();
  }
  return out;
}

double lorentz_defect(const Mat4& l) {
  const Mat4& eta = minkowski_metric();
  return (l * eta * l.transpose() - eta).cwiseAbs().maxCoeff();
}

Mat2c sl2c_from_lorentz(const LorentzTransform& lt) {
  const Mat4& l = lt.l;
  const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
  if (lorentz_defect(l) > 1e-10 * scale * scale)
    throw Error(ErrorKind::NotProperLorentz, "L eta L^T != eta");
  if (std::abs(l.determinant() - 1.0) > 1e-10 * std::pow(scale, 4))
    throw Error(ErrorKind::NotProperLorentz, "det L != 1");
  if (!(l(0, 0) > 0.0)) throw Error(ErrorKind::NotOrthochronous, "L00 <= 0");

  // S_mu = A s^mu A^dag is known from L. Since sum_mu s^mu X s^mu = 2 Tr(X) I
  // for 2x2 X, sum_mu S_mu C s^mu = 2 Tr(A^dag C) A for any C; take the seed
  // C with the largest result and normalize the determinant.
  std::array<Mat2c, 4> images;
  for (int mu = 0; mu < 4; ++mu) {
    images[static_cast<std::size_t>(mu)] = Mat2c::Zero();
    for (int nu = 0; nu < 4; ++nu) images[static_cast<std::size_t>(mu)] += l(nu, mu) * pauli(nu);
  }
  Mat2c best = Mat2c::Zero();
  for (int c = 0; c < 4; ++c) {
    Mat2c k = Mat2c::Zero();
    for (int mu = 0; mu < 4; ++mu) k += images[static_cast<std::size_t>(mu)] * pauli(c) * pauli(mu);
    if (k.norm() > best.norm()) best = k;
  }
  Mat2c a = best / std::sqrt(best.determinant());

  const double top = a.cwiseAbs().maxCoeff();
  cplx lead = a(0, 0);
  for (int k = 0; k < 4; ++k) {
    if (std::abs(a(k / 2, k % 2)) >= top - 1e-12) {
      lead = a(k / 2, k % 2);
      break;
    }
  }
  if (lead.real() < -1e-12 || (std::abs(lead.real()) <= 1e-12 && lead.imag() < 0.0)) a = -a;
  return a;
}

LorentzSVD lorentz_svd(const PauliTensor& omega) {
  const Mat4& eta = minkowski_metric();
  lorentz_singular_values(omega);  // ordering checks and ComplexSpectrum

  // Time-like eigenvector of omega* omega: first row of L_B. A degenerate
  // leading eigenvalue leaves a choice; take the most time-like vector of
  // the eigenspace.
  const Mat4 product = minkowski_adjoint(omega).omega * omega.omega;
  const LorentzSpectrum spec = lorentz_spectrum(omega);
  Vec4 u0 = spec.eigenvectors.col(0);
  const Eigen::JacobiSVD<Mat4> null_svd(product - spec.eigenvalues(0) * Mat4::Identity(), Eigen::ComputeFullV);
  const double null_tol = 1e-8 * std::max(product.norm(), std::numeric_limits<double>::min());
  int null_dim = 0;
  for (int k = 3; k >= 0 && null_svd.singularValues()(k) <= null_tol; --k) ++null_dim;
  if (null_dim > 1) {
    const Eigen::MatrixXd basis = null_svd.matrixV().rightCols(null_dim);
    const Eigen::MatrixXd gram = basis.transpose() * eta * basis;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ges(0.5 * (gram + gram.transpose()));
    u0 = basis * ges.eigenvectors().col(null_dim - 1);
  }
  const double n0 = mdot(u0, u0);
  if (!(n0 > 1e-8 * u0.squaredNorm())) throw Error(ErrorKind::BoundaryClass, "leading eigenvector is not time-like");
  u0 /= std::sqrt(n0);
  if (u0(0) < 0.0) u0 = -u0;

  // Spatial eigenvectors from the symmetric problem on the eta-orthogonal
  // complement of u0.
  Mat4 frame = Mat4::Zero();
  frame.row(0) = u0.transpose();
  complete_frame(frame, 1);
  const Eigen::Matrix<double, 4, 3> f = frame.bottomRows<3>().transpose();
  const Mat3 k = -f.transpose() * eta * product * f;
  Eigen::SelfAdjointEigenSolver<Mat3> es(0.5 * (k + k.transpose()));

  Mat4 right = Mat4::Zero();
  right.row(0) = u0.transpose();
  for (int j = 0; j < 3; ++j) right.row(1 + j) = (f * es.eigenvectors().col(2 - j)).transpose();
  if (right.determinant() < 0.0) right.row(3) *= -1.0;

  const Vec4 lambdas(mdot(u0, product * u0), es.eigenvalues()(2), es.eigenvalues()(1),
                     es.eigenvalues()(0));
  Vec4 d;
  for (int a = 0; a < 4; ++a) d(a) = std::sqrt(std::max(0.0, lambdas(a)));
  if ((omega.omega * u0)(0) < 0.0) d(0) = -d(0);

  Mat4 left = Mat4::Zero();
  int known = 0;
  const double dtol = 1e-12 * std::abs(d(0));
  for (int a = 0; a < 4; ++a) {
    if (std::abs(d(a)) <= dtol) break;
    const Vec4 ua = right.row(a).transpose();
    left.row(a) = (eta(a, a) * (eta * omega.omega * ua) / d(a)).transpose();
    ++known;
  }
  if (known < 4) {
    for (int a = known; a < 4; ++a) d(a) = 0.0;
    complete_frame(left, known);
    if (left.determinant() < 0.0) left.row(3) *= -1.0;
  } else if (left.determinant() < 0.0) {
    d(3) = -d(3);
    left.row(3) *= -1.0;
  }
  if (d(0) < 0.0) {
    // Not a potential witness (omega maps the forward cone backwards).
    throw Error(ErrorKind::BoundaryClass, "time-like image reversed; not a potential witness");
  }

  LorentzSVD out{LorentzTransform{left}, LorentzSV::from_vector(d), LorentzTransform{right}};
  const double residual = (left * omega.omega * right.transpose() - Mat4(d.asDiagonal())).norm();
  if (residual > 1e-7 * omega.omega.norm()) {
    std::ostringstream os;
    os << "canonical form residual " << residual;
    throw Error(ErrorKind::BoundaryClass, os.str());
  }
  return out;
}

HermitianOp canonical_form(const LorentzSV& sv) {
  PauliTensor omega;
  omega.omega = sv.as_vector().asDiagonal();
  return to_hermitian(omega);
}

}  // namespace slocc
