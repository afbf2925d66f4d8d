#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace loopform {

// Base field for the whole artifact. cpp_rational keeps gcd-reduced
// canonical form with positive denominator, so equality is structural.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Serialized form is "p/q", with "/q" omitted when q = 1.
inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1)
        s += "/" + denominator(r).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational literal");
    return Rat(num, den);
}

}  // namespace loopform
