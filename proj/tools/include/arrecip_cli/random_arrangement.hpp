#pragma once

#include <arrecip/charpoly.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace arrecip::cli {

struct RandomSpec {
    std::size_t forms = 4;
    std::size_t dimension = 2;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    int bound = 3;  // entries drawn from [-bound, bound]
};

/// Parses "n=4,d=2,seed=7[,count=5][,bound=3]". Throws std::invalid_argument.
RandomSpec parse_random_spec(const std::string& text);

/// Rejection sampling: zero rows are redrawn, rank-deficient matrices discarded.
ArrangementSpec random_arrangement(std::size_t forms, std::size_t dimension, std::mt19937_64& rng, int bound = 3);

std::vector<ArrangementSpec> random_arrangements(const RandomSpec& spec);

}  // namespace arrecip::cli
