#pragma once

#include <arrecip/charpoly.hpp>
#include <arrecip/quasipoly.hpp>

#include <json.hpp>

#include <string>

namespace arrecip::cli {

using Json = nlohmann::ordered_json;

/// {"period": N, "constituents": [["p/q", ...], ...]}, ascending powers.
Json quasipoly_to_json(const QuasiPolynomial& f);
QuasiPolynomial quasipoly_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);
Json arrangement_to_json(const ArrangementSpec& a);

/// One line per residue: "m ≡ j (mod N): <polynomial in m>", each prefixed by indent.
std::string render_quasipoly(const QuasiPolynomial& f, const std::string& indent = "  ");

}  // namespace arrecip::cli
