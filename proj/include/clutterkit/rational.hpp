#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "clutterkit/errors.hpp"

namespace clutterkit {

// Exact arbitrary-precision rational; cpp_rational keeps gcd(num,den)=1 and den>0.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RVec = std::vector<Rational>;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (!is_integer(r)) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception&) {
        throw ParseError("cannot parse rational: " + s);
    }
}

inline std::string rvec_to_string(const RVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += rational_to_string(v[i]);
    }
    s += ")";
    return s;
}

}  // namespace clutterkit
