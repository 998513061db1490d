#include "slocc/random.hpp"

#include <algorithm>
#include <cmath>

namespace slocc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng stream(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL)));
}

Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v;
  do {
    v = Vec3(n(rng), n(rng), n(rng));
  } while (v.norm() < 1e-8);
  return v.normalized();
}

Eigen::Vector4cd haar_pure_state(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector4cd psi;
  for (int k = 0; k < 4; ++k) psi(k) = cplx(n(rng), n(rng));
  return psi.normalized();
}

HermitianOp random_mixed_state(Rng& rng, int components) {
  std::exponential_distribution<double> gamma1(1.0);
  Mat4c rho = Mat4c::Zero();
  double total = 0.0;
  for (int k = 0; k < components; ++k) {
    const double w = gamma1(rng);
    const Eigen::Vector4cd psi = haar_pure_state(rng);
    rho += w * psi * psi.adjoint();
    total += w;
  }
  return HermitianOp::hermitian_part(rho / total);
}

FourVector random_pure_qubit(Rng& rng) {
  const Vec3 n = random_unit_vector(rng);
  return FourVector{Vec4(0.5, 0.5 * n(0), 0.5 * n(1), 0.5 * n(2))};
}

Mat2c random_su2(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector4d q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  Mat2c u;
  u << cplx(q(0), q(3)), cplx(q(2), q(1)), cplx(-q(2), q(1)), cplx(q(0), -q(3));
  return u;
}

Mat2c sl2c_exp(const Eigen::Vector3cd& g) {
  // X = sum g_k s^k / 2 squares to s^2 I with s^2 = (g.g)/4.
  Mat2c x = Mat2c::Zero();
  for (int k = 0; k < 3; ++k) x += 0.5 * g(k) * pauli(k + 1);
  const cplx s = std::sqrt(0.25 * (g(0) * g(0) + g(1) * g(1) + g(2) * g(2)));
  const cplx sinhc = std::abs(s) < 1e-8 ? cplx(1.0) + s * s / 6.0 : std::sinh(s) / s;
  Mat2c out = std::cosh(s) * Mat2c::Identity() + sinhc * x;
  return out / std::sqrt(out.determinant());
}

Mat2c random_sl2c(Rng& rng, double spread) {
  std::normal_distribution<double> n(0.0, spread);
  Eigen::Vector3cd g;
  for (int k = 0; k < 3; ++k) g(k) = cplx(n(rng), n(rng));
  return sl2c_exp(g);
}

LocalFilter random_filter(Rng& rng, double spread) {
  LocalFilter f;
  f.a = random_sl2c(rng, spread);
  f.b = random_sl2c(rng, spread);
  return f;
}

LorentzSV random_strict_sv(Rng& rng, double margin) {
  std::uniform_real_distribution<double> u(-(1.0 - margin), 1.0 - margin);
  Vec3 v(u(rng), u(rng), u(rng));
  const double det_sign = (v(0) * v(1) * v(2) < 0.0) ? -1.0 : 1.0;
  v = v.cwiseAbs();
  std::sort(v.data(), v.data() + 3, std::greater<>());
  return {1.0, v(0), v(1), det_sign * v(2)};
}

}  // namespace slocc
