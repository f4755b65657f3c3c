#ifndef FORTS_RATIONAL_HPP
#define FORTS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "forts/errors.hpp"

namespace forts {

// Arbitrary-precision rational; always stored reduced with positive
// denominator.  No floating point is used anywhere in the artifact.
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(std::string_view s) {
    if (s.empty()) throw InputError("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(boost::multiprecision::cpp_int(std::string(s)));
        boost::multiprecision::cpp_int p{std::string(s.substr(0, slash))};
        boost::multiprecision::cpp_int q{std::string(s.substr(slash + 1))};
        if (q == 0) throw InputError("zero denominator");
        return Rational(p, q);
    } catch (const std::exception&) {
        throw InputError("malformed rational literal: " + std::string(s));
    }
}

}  // namespace forts

#endif
