#include "slocc/linalg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "slocc/errors.hpp"

namespace slocc {

Balanced balance(const Mat4& m) {
  constexpr double radix = 2.0;
  constexpr double radix2 = radix * radix;
  Balanced b{m, Vec4::Ones()};
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < 4; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        c += std::abs(b.matrix(j, i));
        r += std::abs(b.matrix(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / radix;
      while (c < g) {
        f *= radix;
        c *= radix2;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix2;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        b.scaling(i) *= f;
        b.matrix.row(i) /= f;
        b.matrix.col(i) *= f;
      }
    }
  }
  return b;
}

EigenPairs general_eigen(const Mat4& m) {
  const Balanced b = balance(m);
  Eigen::EigenSolver<Mat4> es(b.matrix, true);
  EigenPairs out{es.eigenvalues(), es.eigenvectors()};
  for (int k = 0; k < 4; ++k) {
    out.vectors.col(k) = b.scaling.cast<cplx>().cwiseProduct(out.vectors.col(k));
    out.vectors.col(k).normalize();
  }
  return out;
}

RealEigen real_eigen(const Mat4& m, double imag_tol) {
  const EigenPairs ep = general_eigen(m);
  RealEigen out;
  out.max_imag = ep.values.imag().cwiseAbs().maxCoeff();
  if (out.max_imag > imag_tol) {
    std::ostringstream os;
    os << "eigenvalue imaginary part " << out.max_imag << " exceeds " << imag_tol;
    throw Error(ErrorKind::ComplexSpectrum, os.str());
  }
  std::array<int, 4> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ep.values(a).real() > ep.values(b).real(); });
  for (int k = 0; k < 4; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values(k) = ep.values(src).real();
    // A real eigenvalue has a real eigenvector up to a phase; rotate by the
    // phase of the largest component before truncating.
    Eigen::Vector4cd v = ep.vectors.col(src);
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const cplx phase = std::conj(v(imax)) / std::abs(v(imax));
    out.vectors.col(k) = (v * phase).real().normalized();
  }
  return out;
}

Vec3 singular_values(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m);
  return svd.singularValues();
}

}  // namespace slocc
