#include "slocc/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "slocc/errors.hpp"

namespace slocc {

namespace {

Mat4 parse_real_4x4(const nlohmann::json& j, const char* key) {
  if (!j.is_array() || j.size() != 4)
    throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a 4x4 array");
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4)
      throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a 4x4 array");
    for (int c = 0; c < 4; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw Error(ErrorKind::ParseError, std::string("non-numeric entry in \"") + key + "\"");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

nlohmann::json to_json(const Mat4& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int r = 0; r < 4; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

}  // namespace

Mat4c parse_operator_matrix(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "operator must be a JSON object");
  const bool complex_form = j.contains("re") || j.contains("im");
  const bool pauli_form = j.contains("pauli");
  if (complex_form == pauli_form)
    throw Error(ErrorKind::ParseError, "exactly one of {\"re\",\"im\"} or \"pauli\" must be present");
  if (pauli_form) {
    const PauliTensor omega{parse_real_4x4(j.at("pauli"), "pauli")};
    Mat4c m = Mat4c::Zero();
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) m += omega(mu, nu) * pauli_product(mu, nu);
    return m;
  }
  if (!j.contains("re") || !j.contains("im"))
    throw Error(ErrorKind::ParseError, "complex form needs both \"re\" and \"im\"");
  const Mat4 re = parse_real_4x4(j.at("re"), "re");
  const Mat4 im = parse_real_4x4(j.at("im"), "im");
  return re.cast<cplx>() + cplx(0.0, 1.0) * im.cast<cplx>();
}

Mat4c parse_operator_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return parse_operator_matrix(j);
}

Mat4c load_operator_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_operator_text(os.str());
}

nlohmann::json operator_to_json(const HermitianOp& w) {
  return {{"re", to_json(w.matrix().real())}, {"im", to_json(w.matrix().imag())}};
}

nlohmann::json pauli_to_json(const PauliTensor& omega) { return {{"pauli", to_json(omega.omega)}}; }

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace slocc
