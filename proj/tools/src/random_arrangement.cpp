#include "arrecip_cli/random_arrangement.hpp"

#include <arrecip/exact_linear.hpp>

#include <charconv>
#include <sstream>

namespace arrecip::cli {

namespace {

std::uint64_t parse_number(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw std::invalid_argument("--random: bad value for " + key + ": '" + value + "'");
    return out;
}

}  // namespace

RandomSpec parse_random_spec(const std::string& text) {
    RandomSpec spec;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--random: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::uint64_t value = parse_number(key, item.substr(eq + 1));
        if (key == "n") spec.forms = value;
        else if (key == "d") spec.dimension = value;
        else if (key == "seed") spec.seed = value;
        else if (key == "count") spec.count = value;
        else if (key == "bound") spec.bound = static_cast<int>(value);
        else throw std::invalid_argument("--random: unknown key '" + key + "'");
    }
    if (spec.dimension == 0 || spec.forms < spec.dimension)
        throw std::invalid_argument("--random: need n >= d >= 1");
    if (spec.bound < 1) throw std::invalid_argument("--random: bound must be positive");
    return spec;
}

ArrangementSpec random_arrangement(std::size_t forms, std::size_t dimension, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    for (;;) {
        IntegerMatrix m(forms, dimension);
        for (std::size_t i = 0; i < forms; ++i) {
            do {
                for (std::size_t j = 0; j < dimension; ++j) m(i, j) = entry(rng);
            } while (m.is_zero_row(i));
        }
        if (rank(m) == dimension) return ArrangementSpec(dimension, std::move(m));
    }
}

std::vector<ArrangementSpec> random_arrangements(const RandomSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<ArrangementSpec> out;
    for (std::size_t k = 0; k < spec.count; ++k) {
        auto a = random_arrangement(spec.forms, spec.dimension, rng, spec.bound);
        std::ostringstream label;
        label << "random:n=" << spec.forms << ",d=" << spec.dimension << ",seed=" << spec.seed << '#' << k;
        out.emplace_back(a.dimension(), a.forms(), label.str());
    }
    return out;
}

}  // namespace arrecip::cli
