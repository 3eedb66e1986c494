#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sun_euler/core.hpp"
#include "sun_euler/lie_algebra.hpp"

namespace sun {

/// {"re": [[...]], "im": [[...]]}, row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// {"n": N, "index": i, "re": [[...]], "im": [[...]]}
nlohmann::json generator_to_json(const GeneratorSet& gs, int index);

/// Parses "a1,a2,..." into doubles; InvalidArgument on malformed input.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace sun
