#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace xrank {

using Rational = mpq_class;
using BigInt = mpz_class;

// Thrown on precondition violations (dimension mismatches, invalid input).
// Distinct from computation failures, which are reported through result types.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string to_string(const Rational& q) {
    return q.get_str();  // "p/q" in decimal digits, or "p" when integral
}

inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("not a rational: " + s);
    q.canonicalize();
    return q;
}

// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    return Rational(x);
}

inline double to_double(const Rational& q) {
    return q.get_d();
}

}  // namespace xrank
