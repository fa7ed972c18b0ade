#include "focklab/ext_exponent.hpp"

#include <limits>

namespace focklab {

ExtExponent ExtExponent::parse(std::string_view s) {
    if (s == "inf" || s == "infinity" || s == "oo" || s == "Inf" || s == "INF")
        return infinity();
    return ExtExponent(Rational::parse(s));
}

double ExtExponent::to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : finite_.to_double();
}

} // namespace focklab
