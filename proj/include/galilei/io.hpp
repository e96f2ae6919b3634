#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "galilei/enveloping.hpp"
#include "galilei/group.hpp"
#include "galilei/lie_algebra.hpp"

namespace galilei {

/// An algebra read from a definition file together with the diagnostics the
/// loader computes.
struct LoadedAlgebra {
  LieAlgebra algebra;
  ExtensionParams params;
  Rational jacobi_defect;
};

/// Evaluates a bracket coefficient: a rational "p/q", a parameter name
/// (k, m, l), or "<rational>*<name>"; a leading '-' negates a bare name.
/// Throws std::invalid_argument.
Rational evaluate_coefficient(std::string_view text, const ExtensionParams& params);

/// Reads
///   {"basis": [...], "brackets": [{"left": "N1", "right": "P1",
///    "result": {"E": "m"}}, ...], "params": {"k": "1/2", "m": "2", "l": "0"}}.
/// Missing reversed brackets are filled in by antisymmetry. Throws
/// std::invalid_argument for unknown labels, [X, X] != 0, or a pair given
/// twice inconsistently.
LoadedAlgebra algebra_from_json(const nlohmann::json& j);

/// Writes the nonzero brackets [X_i, X_j], i < j, with numeric coefficients.
nlohmann::json algebra_to_json(const LieAlgebra& alg, const ExtensionParams& params);

nlohmann::json params_to_json(const ExtensionParams& params);

/// {"a,b,c,d,e,f": "p/q", ...}
nlohmann::json nopoly_to_json(const NOPoly& p);
NOPoly nopoly_from_json(const nlohmann::json& j);

/// {"phase": f, "tau": f, "u": [f, f], "v": [f, f], "theta": f}
nlohmann::json element_to_json(const GroupElement& g);
/// Missing fields default to 0. Throws std::invalid_argument on wrong types.
GroupElement element_from_json(const nlohmann::json& j);

}  // namespace galilei
