#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "frz/errors.hpp"

namespace frz {

// All arithmetic in the library is exact. Integers are unbounded and
// rationals are kept normalized (reduced, positive denominator) by the
// backing type.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }
inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

// floor(p/q) as an integer; q > 0 is guaranteed by the representation.
inline Int floor_rat(const Rat& r) {
    Int p = num(r), q = den(r);
    Int t = p / q;  // truncates toward zero
    if (p < 0 && t * q != p) --t;
    return t;
}

inline Int pow_int(const Int& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

// Decimal string, "p" or "p/q". Used everywhere numbers cross a byte
// boundary (JSON, CLI, SVG labels); binary floats never appear.
inline std::string rat_str(const Rat& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline std::string int_str(const Int& n) { return n.str(); }

namespace detail {
inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}
}  // namespace detail

inline Int parse_int(const std::string& s) {
    if (!detail::all_digits(s)) throw ParseError("bad integer literal: '" + s + "'");
    return Int(s);
}

// Accepts "p" and "p/q" with q > 0.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int p = parse_int(s.substr(0, slash));
    Int q = parse_int(s.substr(slash + 1));
    if (q <= 0) throw ParseError("bad rational literal (denominator must be positive): '" + s + "'");
    return Rat(p, q);
}

}  // namespace frz
