#include "arrecip_cli/format.hpp"

#include <sstream>

namespace arrecip::cli {

Json polynomial_to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(to_fraction_string(p.coefficient(k)));
    if (p.degree() < 0) coeffs.push_back("0/1");
    return coeffs;
}

Json quasipoly_to_json(const QuasiPolynomial& f) {
    Json j;
    j["period"] = f.period();
    Json constituents = Json::array();
    for (const auto& p : f.constituents()) constituents.push_back(polynomial_to_json(p));
    j["constituents"] = std::move(constituents);
    return j;
}

QuasiPolynomial quasipoly_from_json(const Json& j) {
    const auto period = j.at("period").get<std::size_t>();
    const auto& list = j.at("constituents");
    if (list.size() != period) throw std::invalid_argument("constituent count does not match period");
    std::vector<Polynomial> constituents;
    for (const auto& coeffs : list) {
        std::vector<Rational> values;
        for (const auto& c : coeffs) values.push_back(parse_rational(c.get<std::string>()));
        constituents.emplace_back(std::move(values));
    }
    return QuasiPolynomial(std::move(constituents));
}

Json arrangement_to_json(const ArrangementSpec& a) {
    Json j;
    j["label"] = a.label();
    j["dimension"] = a.dimension();
    Json forms = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < a.dimension(); ++k) row.push_back(to_int64(a.forms()(i, k)));
        forms.push_back(std::move(row));
    }
    j["forms"] = std::move(forms);
    return j;
}

std::string render_quasipoly(const QuasiPolynomial& f, const std::string& indent) {
    std::ostringstream os;
    for (std::size_t r = 0; r < f.period(); ++r)
        os << indent << "m ≡ " << r << " (mod " << f.period() << "): " << f.constituent(r).to_string("m") << '\n';
    return os.str();
}

}  // namespace arrecip::cli
