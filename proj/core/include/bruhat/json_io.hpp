#pragma once

#include <json.hpp>

#include "bruhat/decompose.hpp"
#include "bruhat/matrix.hpp"
#include "bruhat/series.hpp"

namespace bruhat {

/// Digit object {"val": v, "digits": [d0,...,d_{N-1}]}.  A value that is
/// zero to precision serializes with empty digits and val = the absolute
/// precision.
nlohmann::json padic_to_json(const PAdic& a);

/// Accepts a digit object or a rational string "num/den" / "num".
PAdic padic_from_json(const nlohmann::json& j, unsigned p, unsigned prec);

/// Array of arrays; entries as padic_to_json.
nlohmann::json matrix_to_json(const PMatrix& m);

/// Array of arrays of rational strings or digit objects; dimension inferred.
PMatrix matrix_from_json(const nlohmann::json& j, unsigned p, unsigned prec);

/// {"w": "2,3,1", "r": [[...]], "b": [[...]], "precision": N}.
nlohmann::json decomposition_to_json(const RBDecomposition& d, unsigned prec);

/// {"p":3, "m":1, "chi":[{"c":"1","e":0},...]}.
Character character_from_json(const nlohmann::json& j);
nlohmann::json character_to_json(const Character& chi);

} // namespace bruhat
