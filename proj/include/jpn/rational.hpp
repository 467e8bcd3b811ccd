#ifndef JPN_RATIONAL_HPP
#define JPN_RATIONAL_HPP

// Exact rational scalar type and small helpers.
//
// cpp_rational keeps values in canonical reduced form (positive denominator,
// gcd(num,den)=1), so operator== is structural equality and values are safe
// to use as map keys via their string form.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace jpn {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; } // cpp_rational wants den > 0
    return Rat(num, den);
}

inline std::string num_str(const Rat& r) { return numerator(r).str(); }
inline std::string den_str(const Rat& r) { return denominator(r).str(); }

// "p/q" or "p"; used by CLI parsing and JSON ingestion.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    if (den < 0) { num = -num; den = -den; }
    return Rat(num, den);
}

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace jpn

#endif
