#pragma once

// Operator files and numeric formatting.
//
// An operator file holds either {"re": [[4x4]], "im": [[4x4]]} or
// {"pauli": [[4x4]]}; mixing the two forms is a parse error.

#include <string>
#include <string_view>

#include <json.hpp>

#include "slocc/pauli.hpp"

namespace slocc {

/// Raw complex matrix from JSON; throws Error(ParseError). Hermiticity is
/// not checked here.
Mat4c parse_operator_matrix(const nlohmann::json& j);
Mat4c parse_operator_text(std::string_view text);
Mat4c load_operator_matrix(const std::string& path);

nlohmann::json operator_to_json(const HermitianOp& w);
nlohmann::json pauli_to_json(const PauliTensor& omega);

/// %.17g
std::string format_double(double v);

}  // namespace slocc
