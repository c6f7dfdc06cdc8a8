#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

/// Exact arbitrary-precision rational. All geometry in this library is
/// computed over the rationals so that ties (a minimum attained twice)
/// are decided exactly; floating point never enters a predicate.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

/// Parses "p", "p/q" or a plain decimal such as "-0.25" into an exact
/// rational. Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("unparseable rational token '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') digits += text[pos++];
    if (digits.empty()) return fail();

    Integer num(digits);
    Integer den(1);
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::string frac;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') frac += text[pos++];
        if (frac.empty()) return fail();
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::string d;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') d += text[pos++];
        if (d.empty()) return fail();
        den = Integer(d);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    if (pos != text.size()) return fail();
    Rational q(num, den);
    return negative ? Rational(-q) : q;
}

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace tropical
