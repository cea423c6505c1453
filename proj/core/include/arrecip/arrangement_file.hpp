#pragma once

// Plain-text arrangement files:
//
//   # comment
//   d=2
//   1 0
//   0 1
//   1 1
//
// The header "d=<int>" comes first; every other non-blank line holds exactly
// d integers. '#' starts a comment anywhere on a line.

#include "arrecip/charpoly.hpp"

#include <istream>
#include <stdexcept>
#include <string>

namespace arrecip {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Throws ParseError for malformed text or a zero form, and
/// InvalidArrangement (rank_deficient) when the forms do not span Q^d.
ArrangementSpec parse_arrangement(std::istream& in, const std::string& label = {});
ArrangementSpec parse_arrangement_text(const std::string& text, const std::string& label = {});
ArrangementSpec load_arrangement(const std::string& path);

/// Canonical file text; parse_arrangement_text(emit_arrangement(a)) == a.
std::string emit_arrangement(const ArrangementSpec& a);

}  // namespace arrecip
