#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xrank/exact_linalg.hpp"
#include "xrank/rational.hpp"
#include "xrank/variety.hpp"

namespace xrank {

// A binary form of degree d with rational coefficients in the monomial
// basis x^d, x^{d-1} y, ..., y^d.
struct BinaryForm {
    int d = 0;
    std::vector<Rational> coeffs;  // length d + 1

    BinaryForm() = default;
    BinaryForm(int degree, std::vector<Rational> c);

    bool is_zero() const;
    static BinaryForm monomial(int degree, int y_exponent, Rational c = 1);
};

// Minimal parser for expressions over x and y with integer literals and
// + - * ^ and parentheses, e.g. "x^3 - 3*x*y^2". The expression must be
// homogeneous.
BinaryForm parse_binary_form(const std::string& text);

std::string to_string(const BinaryForm& f);

// Witness for a Waring-rank value: a square-free apolar form of degree
// equal to the rank (all-real-rooted in the Real case).
struct RankCertificate {
    int rank = 0;
    BinaryForm apolar_form;
    Field field = Field::Complex;
};

// Hankel matrix of the apolarity-normalized coefficients: entry (i, j) is
// a_{i+j} where F = sum binom(d,i) a_i x^{d-i} y^i. A degree-r form G
// annihilates F under apolarity iff its coefficient vector is in the
// kernel.
RationalMatrix catalecticant(const BinaryForm& f, int r);

// Least r such that the degree-r kernel of the catalecticant contains a
// square-free form.
RankCertificate complex_rank(const BinaryForm& f);

// Least r such that the kernel contains a form with r distinct real
// projective roots; realness is certified by Sturm counts. Always at least
// the complex rank and at most d.
RankCertificate real_rank(const BinaryForm& f);

// Exact rational decomposition term c * (alpha x + beta y)^d.
struct ExactBinaryTerm {
    Rational coeff;
    Rational alpha, beta;
};

struct BinaryDecomposition {
    // present when every projective root of the apolar form is rational;
    // reproduces the input exactly
    std::optional<std::vector<ExactBinaryTerm>> exact_terms;
    Decomposition numeric;
};

// Turn a certificate into an explicit decomposition of f as a combination
// of d-th powers of linear forms. Rational roots give an exact rational
// decomposition; otherwise roots are found numerically and the linear
// system is solved at 256-bit precision, with the residual certified after
// rounding.
BinaryDecomposition sylvester_decompose(const RankCertificate& cert, const BinaryForm& f);

// Exact evaluation of an exact decomposition, for verification.
std::vector<Rational> evaluate_exact_terms(int d, const std::vector<ExactBinaryTerm>& terms);

// The ambient-point view of a binary form (Veronese(2, d) coefficients).
AmbientPoint to_ambient_point(const BinaryForm& f, Field field = Field::Real);

}  // namespace xrank
