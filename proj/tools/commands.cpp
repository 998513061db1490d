#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "slocc/chsh.hpp"
#include "slocc/classify.hpp"
#include "slocc/errors.hpp"
#include "slocc/i3322.hpp"
#include "slocc/io.hpp"
#include "slocc/lorentz.hpp"

namespace slocc::cli {

using nlohmann::json;

namespace {

json vec_json(const Vec3& v) { return json::array({v(0), v(1), v(2)}); }
json sv_json(const LorentzSV& sv) { return json::array({sv.w0, sv.w1, sv.w2, sv.w3}); }
json coord_json(const SloccCoord& c) { return json::array({c.x, c.y, c.z}); }

json directions_json(const ChshDirections& d) {
  return {{"a", vec_json(d.a)}, {"a_prime", vec_json(d.a_prime)}, {"b", vec_json(d.b)}, {"b_prime", vec_json(d.b_prime)}};
}

json mat2_json(const Mat2c& m) {
  json re = json::array();
  json im = json::array();
  for (int r = 0; r < 2; ++r) {
    re.push_back(json::array({m(r, 0).real(), m(r, 1).real()}));
    im.push_back(json::array({m(r, 0).imag(), m(r, 1).imag()}));
  }
  return {{"re", re}, {"im", im}};
}

const char* plane_name(Plane p) {
  switch (p) {
    case Plane::YZ: return "yz";
    case Plane::XZ: return "xz";
    case Plane::XY: return "xy";
  }
  return "?";
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_number_float()) {
    out << prefix << ',' << format_double(j.get<double>()) << '\n';
  } else {
    out << prefix << ',' << j.dump() << '\n';
  }
}

void emit(const json& report, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == Format::Csv) {
    out << "key,value\n";
    flatten(report, "", out);
  } else {
    out << report.dump(2) << '\n';
  }
}

int report_error(const Error& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  return e.kind() == ErrorKind::ParseError ? kParse : kDomain;
}

json cylinder_json(const CylinderReport& c) {
  json j = {{"member", c.member}, {"margin", c.margin}, {"coords", coord_json(c.coords)}};
  j["violating_axis"] = c.violating_axis ? json(*c.violating_axis) : json(nullptr);
  return j;
}

bool write_file(const std::filesystem::path& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  f << content;
  f.close();
  if (!f) {
    err << "error: write failed for " << path.string() << '\n';
    return false;
  }
  return true;
}

bool make_dir(const std::string& dir, std::ostream& err) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    err << "error: cannot create directory " << dir << '\n';
    return false;
  }
  return true;
}

}  // namespace

bool Tolerances::apply(const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) return false;
  const std::string key = assignment.substr(0, eq);
  double value = 0.0;
  try {
    std::size_t used = 0;
    value = std::stod(assignment.substr(eq + 1), &used);
    if (used != assignment.size() - eq - 1) return false;
  } catch (const std::exception&) {
    return false;
  }
  if (!(value >= 0.0)) return false;
  if (key == "psd") psd = value;
  else if (key == "membership") membership = value;
  else if (key == "witness") witness = value;
  else if (key == "hull") hull = value;
  else if (key == "inplane") inplane = value;
  else return false;
  return true;
}

int cmd_classify(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const HermitianOp w = HermitianOp::checked(load_operator_matrix(input));
    json report;
    const Vec4 ev = w.eigenvalues();
    const bool state = is_state(w, cfg.tol.psd);
    const bool ppt = state && is_ppt(w, cfg.tol.psd);
    report["state"] = state;
    report["separable"] = ppt;
    report["ppt"] = state ? json(ppt) : json(nullptr);
    report["potential_witness"] = state || is_potential_witness(w, cfg.tol.witness);
    report["eigenvalues"] = json::array({ev(0), ev(1), ev(2), ev(3)});

    std::optional<LorentzSV> sv;
    try {
      sv = lorentz_singular_values(from_hermitian(w));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ComplexSpectrum) throw;
    }
    report["complex_spectrum"] = !sv.has_value();
    report["lorentz_sv"] = sv ? sv_json(*sv) : json(nullptr);
    if (sv && sv->w0 > kDegenerateW0) {
      const SloccCoord c = slocc_coord(*sv);
      const Membership oct = octahedron_membership(c, cfg.tol.membership);
      const Membership tet = tetrahedron_membership(c, cfg.tol.membership);
      const Membership cube = cube_membership(c, cfg.tol.membership);
      const CylinderReport cyl = cylinder_membership(c, cfg.tol.membership);
      report["coords"] = coord_json(c);
      report["margins"] = {{"octahedron", oct.margin}, {"tetrahedron", tet.margin}, {"cube", cube.margin},
                           {"cylinders", cyl.margin}};
      report["octahedron_member"] = oct.member;
      report["tetrahedron_member"] = tet.member;
      report["cube_member"] = cube.member;
      report["cylinder_member"] = cyl.member;
    } else {
      report["coords"] = nullptr;
      report["margins"] = nullptr;
      for (const char* k : {"octahedron_member", "tetrahedron_member", "cube_member", "cylinder_member"})
        report[k] = nullptr;
    }
    emit(report, cfg, out);
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_chsh(const std::string& input, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const HermitianOp raw = HermitianOp::checked(load_operator_matrix(input));
    if (!is_state(raw, cfg.tol.psd) || !(raw.trace() > 0.0))
      throw Error(ErrorKind::NotAState, "chsh needs a positive operator");
    const HermitianOp rho = (1.0 / raw.trace()) * raw;

    json report;
    const HorodeckiResult h = horodecki_optimum(rho);
    report["optimum"] = h.value;
    report["best_plane"] = plane_name(h.best_plane);
    report["correlations"] = vec_json(h.correlations);
    report["directions"] = directions_json(h.directions);
    report["violates"] = h.value < -1e-9;
    report["numeric_optimum"] = minimize_chsh_directly(rho).value;

    report["boundary_class"] = false;
    try {
      const CylinderReport cyl = slocc_chsh_satisfies(rho);
      report["cylinder"] = cylinder_json(cyl);
      report["slocc_satisfies"] = cyl.member;
      if (cyl.margin < -1e-6) {
        try {
          const ViolatingFilter vf = filter_to_violation(rho);
          report["filter"] = {{"A", mat2_json(vf.filter.a)},
                              {"B", mat2_json(vf.filter.b)},
                              {"directions", directions_json(vf.directions)},
                              {"value", vf.value}};
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::BoundaryClass) throw;
          report["boundary_class"] = true;
        }
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateClass) throw;
      report["cylinder"] = nullptr;
      report["slocc_satisfies"] = nullptr;
    }
    emit(report, cfg, out);
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_duality(const std::string& first, const std::string& second, const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  try {
    const HermitianOp w1 = HermitianOp::checked(load_operator_matrix(first));
    const HermitianOp w2 = HermitianOp::checked(load_operator_matrix(second));
    const LorentzSV s1 = lorentz_singular_values(from_hermitian(w1));
    const LorentzSV s2 = lorentz_singular_values(from_hermitian(w2));
    json report;
    report["sv1"] = sv_json(s1);
    report["sv2"] = sv_json(s2);
    report["pairing"] = duality_pairing(s1, s2);
    report["pairing_orbit_min"] = duality_pairing_orbit_min(s1, s2);
    if (s1.w0 > kDegenerateW0 && s2.w0 > kDegenerateW0) {
      const SloccCoord c1 = slocc_coord(s1);
      const SloccCoord c2 = slocc_coord(s2);
      report["coords1"] = coord_json(c1);
      report["coords2"] = coord_json(c2);
      report["detected"] = dual_plane_detection(c1, c2, cfg.tol.membership);
    }
    emit(report, cfg, out);
    return kOk;
  } catch (const Error& e) {
    return report_error(e, err);
  }
}

int cmd_i3322_scan(const std::string& out_dir, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) {
    err << "error: --n must be at least 1\n";
    return kUsage;
  }
  if (!make_dir(out_dir, err)) return kIo;
  const ScanResult result = scan(cfg.n, cfg.seed, cfg.threads);

  std::string csv = "id,ca12,ca13,ca23,cb12,cb13,cb23,w0,w1,w2,w3,x,y,z,hull_margin\n";
  csv.reserve(result.records.size() * 300);
  double inplane_max = 0.0;
  for (const ScanRecord& r : result.records) {
    csv += std::to_string(r.id);
    for (double v : r.cosines) csv += ',' + format_double(v);
    for (double v : {r.sv.w0, r.sv.w1, r.sv.w2, r.sv.w3, r.coords.x, r.coords.y, r.coords.z, r.hull_margin})
      csv += ',' + format_double(v);
    csv += '\n';
    if (std::abs(r.coords.z) < cfg.tol.inplane) inplane_max = std::max(inplane_max, std::hypot(r.coords.x, r.coords.y));
  }

  const ScanSummary& s = result.summary;
  json summary;
  summary["n"] = s.n;
  summary["min_margin"] = std::isfinite(s.min_margin) ? json(s.min_margin) : json(nullptr);
  summary["skipped_complex"] = s.skipped_complex;
  summary["skipped_degenerate"] = s.skipped_degenerate;
  summary["inplane_max_radius"] = inplane_max;

  const std::filesystem::path dir(out_dir);
  if (!write_file(dir / "scan.csv", csv, err)) return kIo;
  if (!write_file(dir / "summary.json", summary.dump(2) + "\n", err)) return kIo;
  out << summary.dump(2) << '\n';
  return (!std::isfinite(s.min_margin) || s.min_margin >= -cfg.tol.hull) ? kOk : kDomain;
}

int cmd_geometry(const std::string& out_dir, const RunConfig& /*cfg*/, std::ostream& out, std::ostream& err) {
  if (!make_dir(out_dir, err)) return kIo;
  constexpr double pi = std::numbers::pi;
  json g;

  json cube_v = json::array();
  for (int c = 0; c < 8; ++c) cube_v.push_back({(c & 1) ? 1.0 : -1.0, (c & 2) ? 1.0 : -1.0, (c & 4) ? 1.0 : -1.0});
  g["cube"] = {{"vertices", cube_v},
               {"faces", json::array({{0, 2, 6, 4}, {1, 3, 7, 5}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 1, 3, 2}, {4, 5, 7, 6}})}};

  const std::array<Vec3, 4> tet = {Vec3(1, 1, -1), Vec3(1, -1, 1), Vec3(-1, 1, 1), Vec3(-1, -1, -1)};
  json tet_v = json::array();
  for (const Vec3& v : tet) tet_v.push_back(vec_json(v));
  g["tetrahedron"] = {{"vertices", tet_v}, {"faces", json::array({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})}};

  json oct_v = json::array();
  for (int k = 0; k < 3; ++k) {
    oct_v.push_back(vec_json(Vec3::Unit(k)));
    oct_v.push_back(vec_json(-Vec3::Unit(k)));
  }
  json oct_f = json::array();
  for (int sx : {0, 1})
    for (int sy : {2, 3})
      for (int sz : {4, 5}) oct_f.push_back({sx, sy, sz});
  g["octahedron"] = {{"vertices", oct_v}, {"faces", oct_f}};

  // Circles in the coordinate planes; normal_axis is the omitted coordinate.
  json circles = json::array();
  const char* plane_names[3] = {"yz", "xz", "xy"};
  for (int axis = 0; axis < 3; ++axis) {
    const int i = (axis + 1) % 3;
    const int j = (axis + 2) % 3;
    json pts = json::array();
    for (int k = 0; k < 256; ++k) {
      const double phi = 2.0 * pi * k / 256.0;
      Vec3 p = Vec3::Zero();
      p(std::min(i, j)) = std::cos(phi);
      p(std::max(i, j)) = std::sin(phi);
      pts.push_back(vec_json(p));
    }
    circles.push_back({{"plane", plane_names[axis]}, {"normal_axis", axis}, {"points", pts}});
  }
  g["chsh_circles"] = circles;

  // Boundary of the three-cylinder intersection: on the cylinder around
  // `axis`, the axial coordinate runs up to min(|cos phi|, |sin phi|).
  json cylinders = json::array();
  for (int axis = 0; axis < 3; ++axis) {
    const int i = std::min((axis + 1) % 3, (axis + 2) % 3);
    const int j = std::max((axis + 1) % 3, (axis + 2) % 3);
    json pts = json::array();
    for (int a = 0; a < 64; ++a) {
      const double phi = 2.0 * pi * a / 64.0;
      const double height = std::min(std::abs(std::cos(phi)), std::abs(std::sin(phi)));
      for (int b = 0; b < 64; ++b) {
        const double t = -1.0 + 2.0 * b / 63.0;
        Vec3 p = Vec3::Zero();
        p(i) = std::cos(phi);
        p(j) = std::sin(phi);
        p(axis) = t * height;
        pts.push_back(vec_json(p));
      }
    }
    cylinders.push_back({{"axis", axis}, {"grid", json::array({64, 64})}, {"points", pts}});
  }
  g["cylinders"] = cylinders;

  // Detection plane 1 + w.rho = 0 of the corner witness w, cut by the
  // tetrahedron edges leaving the vertex it incriminates.
  const Vec3 witness(-1.0, -1.0, 1.0);
  json triangle = json::array();
  for (const Vec3& v : tet) {
    if (1.0 + witness.dot(v) >= 0.0) continue;
    for (const Vec3& u : tet) {
      if (u == v) continue;
      const double fv = 1.0 + witness.dot(v);
      const double fu = 1.0 + witness.dot(u);
      triangle.push_back(vec_json(v + (fv / (fv - fu)) * (u - v)));
    }
  }
  g["witness_plane"] = {{"witness", vec_json(witness)}, {"triangle", triangle}};

  if (!write_file(std::filesystem::path(out_dir) / "geometry.json", g.dump() + "\n", err)) return kIo;
  out << "wrote " << (std::filesystem::path(out_dir) / "geometry.json").string() << '\n';
  return kOk;
}

}  // namespace slocc::cli
