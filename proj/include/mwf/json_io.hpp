#pragma once
#include <complex>
#include <json.hpp>
#include <string>

#include "mwf/group_algebra.hpp"
#include "mwf/metaplectic.hpp"

namespace mwf {

using nlohmann::json;

// term: {"v": j, "g": [e_1..e_{n-1}], "c": "p/q"}; element: array of terms
json coeff_to_json(const CoeffElement& c);
// {"terms": [{"coweight": [..], "coeff": <coeff json>}]}
json algebra_to_json(const AlgebraElement& f);
// {"num": <algebra json>, "den": [{"mu": [..], "v": j, "c": "p/q", "power": m}]}
json rational_to_json(const RationalElement& f);
json complex_to_json(const std::complex<double>& z);  // [re, im]

// parameter echo attached to every result payload
json parameter_echo(const MetaplecticData& md, const std::string& cartan_label);

// Cartan data from a label or from a JSON object with a "cartan_matrix" field.
CartanSpec cartan_from_json(const json& src);

}  // namespace mwf
