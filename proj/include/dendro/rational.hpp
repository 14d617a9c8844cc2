#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>
#include <string_view>

#include "dendro/errors.hpp"

namespace dendro {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision numerator/denominator, kept in
// lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Accepts "p" or "p/q" with optional leading '-'.
inline Rational rational_from_string(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&](const char* what) -> ParseError { return ParseError(i, what); };
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw fail("digit");
    BigInt num(std::string(text.substr(start, i - start)));
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t dstart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) throw fail("digit");
        den = BigInt(std::string(text.substr(dstart, i - dstart)));
        if (den == 0) throw fail("nonzero denominator");
    }
    if (i != text.size()) throw fail("end of input");
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

}  // namespace dendro
