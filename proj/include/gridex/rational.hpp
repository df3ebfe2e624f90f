#pragma once

#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace gridex {

// Competitive ratios are exact rationals throughout; bounds like 11/9 must
// compare exactly, never through floating point.
using Rational = boost::rational<long long>;

inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << "/" << r.denominator();
    return os.str();
}

// Decimal rendering rounded half-up to `places` digits.
inline std::string rational_decimal(const Rational& r, int places = 6) {
    long long scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    long long num = r.numerator() * scale * 2 + r.denominator();  // + 1/2 ulp
    long long scaled = num / (2 * r.denominator());
    std::string digits = std::to_string(scaled % scale);
    while (static_cast<int>(digits.size()) < places) digits.insert(digits.begin(), '0');
    return std::to_string(scaled / scale) + "." + digits;
}

}  // namespace gridex
