#include "slocc/i3322.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <thread>

#include "slocc/errors.hpp"
#include "slocc/linalg.hpp"
#include "slocc/optimize.hpp"
#include "slocc/random.hpp"

namespace slocc {

namespace {

Mat2c dot_sigma(const Vec3& v) { return v(0) * pauli(1) + v(1) * pauli(2) + v(2) * pauli(3); }

const std::array<Vec3, 3>& side_vectors(const TripleDirections& t, Side side) {
  return side == Side::Alice ? t.a : t.b;
}

enum class Status { Accepted, Complex, Degenerate };

}  // namespace

void TripleDirections::validate() const {
  for (const auto* group : {&a, &b})
    for (const Vec3& v : *group)
      if (std::abs(v.norm() - 1.0) > 1e-12) throw Error(ErrorKind::NotUnitVector, "I(3322) direction is not a unit vector");
}

HermitianOp w3322_witness(const TripleDirections& t) {
  t.validate();
  const Mat2c id = Mat2c::Identity();
  const Vec3 a_sum = t.a[0] + t.a[1];
  const Vec3 a_diff = t.a[0] - t.a[1];
  const Vec3 b_sum = t.b[0] + t.b[1];
  const Vec3 b_diff = t.b[0] - t.b[1];
  const Mat4c w = 4.0 * kron(id, id) + kron(id, dot_sigma(b_sum)) - kron(dot_sigma(a_sum), id) -
                  kron(dot_sigma(a_sum), dot_sigma(b_sum)) - kron(dot_sigma(a_diff), dot_sigma(t.b[2])) -
                  kron(dot_sigma(t.a[2]), dot_sigma(b_diff));
  return HermitianOp::hermitian_part(w);
}

const Mat4& w0_matrix() {
  static const Mat4 w0 = [] {
    Mat4 m;
    m << 4, -1, -1, 0,
         1, -1, -1, -1,
         1, -1, -1, 1,
         0, -1, 1, 0;
    return m;
  }();
  return w0;
}

Mat4 direction_matrix(const TripleDirections& t, Side side) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = 1.0;
  const auto& v = side_vectors(t, side);
  for (int k = 0; k < 3; ++k) m.block<3, 1>(1, 1 + k) = v[static_cast<std::size_t>(k)];
  return m;
}

Mat4 gram_eta(const TripleDirections& t, Side side) {
  const auto& v = side_vectors(t, side);
  Mat4 g = Mat4::Zero();
  g(0, 0) = 1.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      g(1 + i, 1 + j) = i == j ? -1.0 : -v[static_cast<std::size_t>(i)].dot(v[static_cast<std::size_t>(j)]);
  return g;
}

PauliTensor w3322_tensor(const TripleDirections& t) {
  // The single-party rows of the witness are those of W0 transposed;
  // W0^T = eta W0 eta.
  return PauliTensor{direction_matrix(t, Side::Alice) * w0_matrix().transpose() *
                     direction_matrix(t, Side::Bob).transpose()};
}

LorentzSV i3322_singular_values(const TripleDirections& t) {
  t.validate();
  const Mat4& w0 = w0_matrix();
  const Mat4 product = gram_eta(t, Side::Bob) * w0.transpose() * gram_eta(t, Side::Alice) * w0;
  const Mat4 a = direction_matrix(t, Side::Alice);
  const Mat4 b = direction_matrix(t, Side::Bob);
  const double scale = (a * w0 * b.transpose()).squaredNorm();
  const RealEigen re = real_eigen(product, kImagTol * scale);
  const double det = a.determinant() * w0.determinant() * b.determinant();
  return signed_singular_values(re.values, det > 0.0 ? 1.0 : (det < 0.0 ? -1.0 : 0.0), scale);
}

double circle_hull_support(const Vec3& u) {
  const Vec3 sq = u.cwiseAbs2();
  return std::sqrt(std::max(0.0, sq.sum() - sq.minCoeff()));
}

std::vector<Vec3> geodesic_grid(int levels) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts = {{-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (Vec3& v : verts) v.normalize();
  std::vector<std::array<int, 3>> faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                           {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                           {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                           {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int level = 0; level < levels; ++level) {
    std::map<std::pair<int, int>, int> midpoints;
    auto midpoint = [&](int i, int j) {
      const auto key = std::minmax(i, j);
      const auto it = midpoints.find(key);
      if (it != midpoints.end()) return it->second;
      verts.push_back((verts[static_cast<std::size_t>(i)] + verts[static_cast<std::size_t>(j)]).normalized());
      const int idx = static_cast<int>(verts.size()) - 1;
      midpoints.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(faces.size() * 4);
    for (const auto& f : faces) {
      const int ab = midpoint(f[0], f[1]);
      const int bc = midpoint(f[1], f[2]);
      const int ca = midpoint(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return verts;
}

double hull_membership(const SloccCoord& c) {
  static const std::vector<Vec3> grid = geodesic_grid(4);
  const Vec3 p = c.as_vector();
  auto gap = [&](const Vec3& u) { return circle_hull_support(u) - p.dot(u); };

  std::array<std::pair<double, std::size_t>, 3> best;
  best.fill({std::numeric_limits<double>::infinity(), 0});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double g = gap(grid[i]);
    if (g < best[2].first) {
      best[2] = {g, i};
      std::sort(best.begin(), best.end());
    }
  }

  double margin = best[0].first;
  for (const auto& [value, idx] : best) {
    const Vec3& u0 = grid[idx];
    const Vec3 t1 = u0.unitOrthogonal();
    const Vec3 t2 = u0.cross(t1);
    auto f = [&](const std::vector<double>& s) { return gap((u0 + s[0] * t1 + s[1] * t2).normalized()); };
    NelderMeadOptions opt;
    opt.initial_step = 0.05;
    opt.max_evaluations = 600;
    const Minimum m = nelder_mead(f, {0.0, 0.0}, opt);
    margin = std::min({margin, m.value, value});
  }
  return margin;
}

TripleDirections scan_configuration(std::uint64_t seed, std::uint64_t index) {
  Rng rng = stream(seed, index);
  TripleDirections t;
  for (Vec3& v : t.a) v = random_unit_vector(rng);
  for (Vec3& v : t.b) v = random_unit_vector(rng);
  return t;
}

ScanResult scan(std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<ScanRecord>> slots(n);
  std::vector<Status> status(n, Status::Accepted);

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const TripleDirections t = scan_configuration(seed, i);
      ScanRecord rec;
      rec.id = i;
      rec.cosines = {t.a[0].dot(t.a[1]), t.a[0].dot(t.a[2]), t.a[1].dot(t.a[2]),
                     t.b[0].dot(t.b[1]), t.b[0].dot(t.b[2]), t.b[1].dot(t.b[2])};
      try {
        rec.sv = i3322_singular_values(t);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ComplexSpectrum) throw;
        status[i] = Status::Complex;
        continue;
      }
      if (!(rec.sv.w0 > kDegenerateW0)) {
        status[i] = Status::Degenerate;
        continue;
      }
      rec.coords = slocc_coord(rec.sv);
      rec.hull_margin = hull_membership(rec.coords);
      slots[i] = rec;
    }
  };

  std::vector<std::exception_ptr> failures(threads);
  auto work = [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
    try {
      run_range(begin, end);
    } catch (...) {
      failures[worker] = std::current_exception();
    }
  };

  const std::uint64_t chunk = (n + threads - 1) / threads;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(n, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(n, begin + chunk);
    if (begin < end) workers.emplace_back(work, w, begin, end);
  }
  for (auto& t : workers) t.join();
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  ScanResult out;
  out.summary.n = n;
  out.summary.min_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < n; ++i) {
    if (status[i] == Status::Complex) ++out.summary.skipped_complex;
    if (status[i] == Status::Degenerate) ++out.summary.skipped_degenerate;
    if (!slots[i]) continue;
    const ScanRecord& rec = *slots[i];
    out.summary.min_margin = std::min(out.summary.min_margin, rec.hull_margin);
    if (std::abs(rec.coords.z) < kInPlaneBand) {
      ++out.summary.inplane_count;
      out.summary.inplane_max_radius = std::max(out.summary.inplane_max_radius, std::hypot(rec.coords.x, rec.coords.y));
    }
    out.records.push_back(rec);
  }
  return out;
}

}  // namespace slocc
