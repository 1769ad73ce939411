#pragma once

#include <complex>
#include <vector>

#include "xrank/rational.hpp"
#include "xrank/sturm.hpp"

namespace xrank {

// Complex number on GMP floats, for root polishing and small linear solves
// past double precision.
struct MpComplex {
    mpf_class re, im;

    MpComplex() : re(0), im(0) {}
    MpComplex(mpf_class r, mpf_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit MpComplex(const std::complex<double>& z, unsigned prec)
        : re(z.real(), prec), im(z.imag(), prec) {}

    MpComplex operator+(const MpComplex& o) const { return {re + o.re, im + o.im}; }
    MpComplex operator-(const MpComplex& o) const { return {re - o.re, im - o.im}; }
    MpComplex operator*(const MpComplex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    MpComplex operator/(const MpComplex& o) const {
        const mpf_class denom = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / denom, (im * o.re - re * o.im) / denom};
    }
    MpComplex conj() const { return {re, -im}; }
    mpf_class abs2() const { return re * re + im * im; }
    std::complex<double> to_double() const { return {re.get_d(), im.get_d()}; }
};

// All complex roots of a univariate polynomial (ascending coefficients) by
// the Durand-Kerner iteration in double precision. The iteration budget can
// be lowered for screening passes that only need coarse root locations.
std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& ascending,
                                             int max_iter = 500, double tol = 1e-14);
std::vector<std::complex<double>> poly_roots(const QPoly& p);

// Newton-polish a double root of a rational polynomial at `prec` bits.
MpComplex polish_root(const QPoly& p, std::complex<double> approx, unsigned prec);

// Gaussian elimination with partial pivoting on GMP-float complexes.
// Square systems only; the binary decomposition solver forms its own
// normal equations first.
std::vector<MpComplex> solve_mp(std::vector<std::vector<MpComplex>> a,
                                std::vector<MpComplex> rhs);

}  // namespace xrank
