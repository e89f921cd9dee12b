#pragma once

#include "hodgepsh/diamond.hpp"
#include "hodgepsh/period_chart.hpp"

#include <json.hpp>

namespace hodgepsh {

using Json = nlohmann::ordered_json;

Json complex_to_json(cd z);                        // [re, im]
cd complex_from_json(const Json& j);               // throws InvalidInput
Json coeffs_to_json(const std::vector<cd>& c);     // [[re, im], ...]
std::vector<cd> coeffs_from_json(const Json& j);  // throws InvalidInput

Json disc_to_json(const HorizontalDisc& disc);
// Rebuilds the disc from its free data and integration constant; dependent entries in the
// input are recomputed. Throws InvalidInput on malformed or inconsistent input.
HorizontalDisc disc_from_json(const Json& j);

Json diamond_to_json(const DiamondTable& table);

}  // namespace hodgepsh
