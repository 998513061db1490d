#include "slocc/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "slocc/errors.hpp"
#include "slocc/random.hpp"

namespace slocc {

namespace {

double trace_scale(const HermitianOp& w, const Vec4& ev) {
  return std::max({std::abs(w.trace()), ev.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min()});
}

// Best response on the section q0 = 1, |q| <= 1: minimizes q^T v.
Vec4 best_response(const Vec4& v) {
  Vec4 q(1.0, 0.0, 0.0, 0.0);
  const double n = v.tail<3>().norm();
  if (n > 0.0) q.tail<3>() = -v.tail<3>() / n;
  return q;
}

ProductMinimum alternate(const Mat4& omega, Vec4 q_b) {
  ProductMinimum best{std::numeric_limits<double>::infinity(), Vec4::Zero(), Vec4::Zero()};
  for (int it = 0; it < 200; ++it) {
    const Vec4 q_a = best_response(omega * q_b);
    q_b = best_response(omega.transpose() * q_a);
    const double value = q_a.dot(omega * q_b);
    if (value >= best.value - 1e-15) {
      if (value < best.value) best = {value, q_a, q_b};
      break;
    }
    best = {value, q_a, q_b};
  }
  return best;
}

}  // namespace

bool is_state(const HermitianOp& w, double tol) {
  const Vec4 ev = w.eigenvalues();
  return ev(0) >= -tol * trace_scale(w, ev);
}

ProductMinimum minimize_product_pairing(const PauliTensor& omega, int random_probes, std::uint64_t seed) {
  ProductMinimum best{std::numeric_limits<double>::infinity(), Vec4::Zero(), Vec4::Zero()};
  auto consider = [&](const ProductMinimum& m) {
    if (m.value < best.value) best = m;
  };

  // 20 deterministic starts: axes, cube corners, and six face diagonals.
  std::vector<Vec3> starts;
  for (int k = 0; k < 3; ++k) {
    starts.push_back(Vec3::Unit(k));
    starts.push_back(-Vec3::Unit(k));
  }
  for (int c = 0; c < 8; ++c)
    starts.emplace_back(Vec3((c & 1) ? 1 : -1, (c & 2) ? 1 : -1, (c & 4) ? 1 : -1).normalized());
  starts.emplace_back(Vec3(1, 1, 0).normalized());
  starts.emplace_back(Vec3(1, -1, 0).normalized());
  starts.emplace_back(Vec3(0, 1, 1).normalized());
  starts.emplace_back(Vec3(0, 1, -1).normalized());
  starts.emplace_back(Vec3(1, 0, 1).normalized());
  starts.emplace_back(Vec3(1, 0, -1).normalized());
  for (const Vec3& s : starts) consider(alternate(omega.omega, Vec4(1.0, s(0), s(1), s(2))));

  Rng rng = stream(seed, 0);
  for (int k = 0; k < random_probes; ++k) {
    const Vec3 na = random_unit_vector(rng);
    const Vec3 nb = random_unit_vector(rng);
    const Vec4 q_a(1.0, na(0), na(1), na(2));
    const Vec4 q_b(1.0, nb(0), nb(1), nb(2));
    consider({q_a.dot(omega.omega * q_b), q_a, q_b});
    if (k % 50 == 0) consider(alternate(omega.omega, q_b));
  }
  return best;
}

bool is_potential_witness(const HermitianOp& w, double tol) {
  const PauliTensor omega = from_hermitian(w);
  const double scale = std::max(omega.omega.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  const bool pairing_ok = minimize_product_pairing(omega).value >= -tol * scale;
  try {
    const LorentzSV sv = lorentz_singular_values(omega);
    const bool sv_ok = sv.w0 >= std::max(sv.w1, std::abs(sv.w3)) - tol * scale;
    return pairing_ok && sv_ok;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ComplexSpectrum) throw;
    return pairing_ok;
  }
}

bool is_ppt(const HermitianOp& rho, double tol) {
  if (!is_state(rho, tol)) throw Error(ErrorKind::NotAState, "is_ppt needs a positive operator");
  return is_state(partial_transpose(rho), tol);
}

Membership octahedron_membership(const SloccCoord& c, double tol) {
  const double margin = 1.0 - (std::abs(c.x) + std::abs(c.y) + std::abs(c.z));
  return {margin >= -tol, margin};
}

Membership tetrahedron_membership(const SloccCoord& c, double tol) {
  double margin = std::numeric_limits<double>::infinity();
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) margin = std::min(margin, 1.0 + e1 * c.x + e2 * c.y - e1 * e2 * c.z);
  return {margin >= -tol, margin};
}

Membership cube_membership(const SloccCoord& c, double tol) {
  const double margin = 1.0 - std::max({std::abs(c.x), std::abs(c.y), std::abs(c.z)});
  return {margin >= -tol, margin};
}

double duality_pairing(const LorentzSV& s, const LorentzSV& t) {
  return 4.0 * (s.w0 * t.w0 - s.w1 * t.w1 - s.w2 * t.w2 + s.w3 * t.w3);
}

double duality_pairing_orbit_min(const LorentzSV& s, const LorentzSV& t) {
  const Vec3 spatial(s.w1, s.w2, s.w3);
  double best = std::numeric_limits<double>::infinity();
  for (const SloccCoord& rep : tetrahedral_orbit({t.w1, t.w2, t.w3}))
    best = std::min(best, s.w0 * t.w0 + spatial.dot(rep.as_vector()));
  return 4.0 * best;
}

bool dual_plane_detection(const SloccCoord& witness, const SloccCoord& rho, double tol) {
  const Vec3 w = witness.as_vector();
  double best = std::numeric_limits<double>::infinity();
  for (const SloccCoord& rep : tetrahedral_orbit(rho)) best = std::min(best, 1.0 + w.dot(rep.as_vector()));
  return best < -tol;
}

Classification classify(const Mat4c& w) { return classify(HermitianOp::checked(w)); }

Classification classify(const HermitianOp& w) {
  Classification out;
  out.eigenvalues = w.eigenvalues();
  out.is_state = is_state(w);
  out.is_separable = out.is_state && is_ppt(w);
  out.is_potential_witness = out.is_state || is_potential_witness(w);
  try {
    out.sv = lorentz_singular_values(from_hermitian(w));
    if (out.sv->w0 > kDegenerateW0) out.coords = slocc_coord(*out.sv);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ComplexSpectrum) throw;
  }
  return out;
}

}  // namespace slocc
