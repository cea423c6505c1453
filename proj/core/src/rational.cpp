#include "arrecip/rational.hpp"

namespace arrecip {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_fraction_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("empty integer literal");
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal: " + std::string(text));
    }
    std::string owned(text.front() == '+' ? text.substr(1) : text);
    return Integer(owned, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in: " + std::string(text));
    Rational result(num, den);
    result.canonicalize();
    return result;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Integer& value) {
    if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
    return static_cast<std::int64_t>(value.get_si());
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace arrecip
