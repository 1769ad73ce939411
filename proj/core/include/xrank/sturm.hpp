#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "xrank/rational.hpp"

namespace xrank {

// Dense univariate polynomial over the rationals, ascending coefficients.
// The zero polynomial is the empty vector.
using QPoly = std::vector<Rational>;

namespace qpoly {

QPoly trim(QPoly p);
int degree(const QPoly& p);  // -1 for the zero polynomial
bool is_zero(const QPoly& p);
Rational eval(const QPoly& p, const Rational& x);
QPoly derivative(const QPoly& p);
QPoly multiply(const QPoly& a, const QPoly& b);
QPoly scale(QPoly p, const Rational& c);
QPoly add(const QPoly& a, const QPoly& b);

// Divide out the positive content, leaving a primitive integer-coefficient
// polynomial with the same sign everywhere.
QPoly primitive_part(const QPoly& p);

std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den);

// Monic gcd.
QPoly gcd(const QPoly& a, const QPoly& b);

bool square_free(const QPoly& p);

// Deflate by a known root; asserts exact divisibility.
QPoly deflate(const QPoly& p, const Rational& root);

}  // namespace qpoly

// Sturm chain of p: p, p', then negated remainders, each normalized to a
// primitive integer polynomial (positive scaling preserves the sign
// agreements the count rests on).
std::vector<QPoly> sturm_chain(const QPoly& p);

// Number of distinct real roots of p (whole real line).
int count_real_roots(const QPoly& p);

// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots_in(const QPoly& p, const Rational& a, const Rational& b);

// A bound B with all real roots of p inside (-B, B).
Rational root_bound(const QPoly& p);

// Disjoint rational intervals (lo, hi], one distinct real root each.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const QPoly& p);

// Shrink an isolating interval by bisection until hi - lo <= width.
std::pair<Rational, Rational> refine_root(const QPoly& p, std::pair<Rational, Rational> iv,
                                          const Rational& width);

}  // namespace xrank
