#include "arrecip/arrangement_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace arrecip {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Integer parse_token(const std::string& token, std::size_t line_no) {
    try {
        const Rational value = parse_rational(token);
        if (token.find('/') != std::string::npos) throw std::invalid_argument("fraction");
        return value.get_num();
    } catch (const std::invalid_argument&) {
        throw ParseError(line_no, "expected an integer, got '" + token + "'");
    }
}

}  // namespace

ArrangementSpec parse_arrangement(std::istream& in, const std::string& label) {
    std::string raw;
    std::size_t line_no = 0;
    std::size_t d = 0;
    bool have_header = false;
    std::vector<std::vector<Integer>> rows;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = strip(raw);
        if (line.empty()) continue;
        if (!have_header) {
            if (line.rfind("d=", 0) != 0) throw ParseError(line_no, "expected header 'd=<int>'");
            const std::string value = strip(line.substr(2));
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(line_no, "bad dimension '" + value + "'");
            d = std::stoul(value);
            if (d == 0) throw ParseError(line_no, "dimension must be positive");
            have_header = true;
            continue;
        }
        std::istringstream tokens(line);
        std::vector<Integer> row;
        std::string token;
        while (tokens >> token) row.push_back(parse_token(token, line_no));
        if (row.size() != d)
            throw ParseError(line_no, "expected " + std::to_string(d) + " integers, got " + std::to_string(row.size()));
        bool zero = true;
        for (const auto& v : row) zero = zero && v == 0;
        if (zero) throw ParseError(line_no, "zero form");
        rows.push_back(std::move(row));
    }
    if (!have_header) throw ParseError(line_no, "missing header 'd=<int>'");
    if (rows.size() < d)
        throw InvalidArrangement(InvalidArrangement::Reason::rank_deficient,
                                 std::to_string(rows.size()) + " forms cannot span dimension " + std::to_string(d));
    return ArrangementSpec(d, IntegerMatrix::from_rows(rows, d), label);
}

ArrangementSpec parse_arrangement_text(const std::string& text, const std::string& label) {
    std::istringstream in(text);
    return parse_arrangement(in, label);
}

ArrangementSpec load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_arrangement(in, path);
}

std::string emit_arrangement(const ArrangementSpec& a) {
    std::ostringstream os;
    if (!a.label().empty()) os << "# " << a.label() << '\n';
    os << "d=" << a.dimension() << '\n';
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.dimension(); ++j) os << (j ? " " : "") << a.forms()(i, j);
        os << '\n';
    }
    return os.str();
}

}  // namespace arrecip
