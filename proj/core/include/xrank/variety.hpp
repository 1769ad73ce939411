#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xrank/combinatorics.hpp"
#include "xrank/exact_linalg.hpp"
#include "xrank/rational.hpp"

namespace xrank {

enum class Family { Veronese, Segre, Grassmannian, PowerOfForms };
enum class Field { Real, Complex };

std::string family_name(Family f);
std::string field_name(Field f);

// A variety from the catalog together with its shape parameters. Knows the
// dimension of the ambient affine space and of the parameter space of its
// affine-cone parameterization.
//
// Coefficient-basis conventions (fixed so that independent implementations
// produce identical vectors):
//   Veronese / PowerOfForms: plain monomial coefficients, monomials ordered
//     by exponent tuple in lexicographically decreasing order.
//   Segre: row-major flattening of the outer product (last factor fastest).
//   Grassmannian: Pluecker coordinates indexed by increasing k-subsets in
//     lexicographic order.
class VarietySpec {
public:
    static VarietySpec veronese(int n_vars, int degree);
    static VarietySpec segre(std::vector<int> formats);
    static VarietySpec grassmannian(int k, int m);
    static VarietySpec power_of_forms(int n_vars, int degree, int power);

    Family family() const { return family_; }
    std::int64_t ambient_affine_dim() const { return ambient_dim_; }
    std::int64_t param_dim() const { return param_dim_; }

    int n_vars() const { return n_vars_; }
    int degree() const { return degree_; }
    int power() const { return power_; }
    int gr_k() const { return gr_k_; }
    int gr_m() const { return gr_m_; }
    const std::vector<int>& formats() const { return formats_; }

    // w such that cone_point(t * param) == t^w * cone_point(param).
    int homogeneity_weight() const;

    std::string to_string() const;
    bool operator==(const VarietySpec& other) const;
    bool operator!=(const VarietySpec& other) const { return !(*this == other); }

    // uninitialized placeholder; every usable spec comes from a factory
    VarietySpec() = default;

private:
    Family family_ = Family::Veronese;
    int n_vars_ = 0, degree_ = 0, power_ = 0, gr_k_ = 0, gr_m_ = 0;
    std::vector<int> formats_;
    std::int64_t ambient_dim_ = 0, param_dim_ = 0;
};

// ---------------------------------------------------------------------------
// Scalar-generic parameterization kernels. S may be double,
// std::complex<double>, Rational or BigInt; only ring operations are used.
// ---------------------------------------------------------------------------

namespace kernels {

// Product of homogeneous forms in n variables, dense coefficients in the
// fixed monomial order.
template <typename S>
std::vector<S> hom_multiply(int n_vars, const std::vector<S>& a, int deg_a,
                            const std::vector<S>& b, int deg_b) {
    const auto exp_a = monomial_exponents(n_vars, deg_a);
    const auto exp_b = monomial_exponents(n_vars, deg_b);
    std::vector<S> out(static_cast<size_t>(monomial_count(n_vars, deg_a + deg_b)), S(0));
    std::vector<int> e(static_cast<size_t>(n_vars));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == S(0)) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == S(0)) continue;
            for (size_t v = 0; v < e.size(); ++v) e[v] = exp_a[i][v] + exp_b[j][v];
            out[static_cast<size_t>(monomial_index(e, deg_a + deg_b))] += a[i] * b[j];
        }
    }
    return out;
}

template <typename S>
std::vector<S> hom_power(int n_vars, const std::vector<S>& g, int deg_g, int exponent) {
    std::vector<S> acc{S(1)};
    int acc_deg = 0;
    for (int i = 0; i < exponent; ++i) {
        acc = hom_multiply(n_vars, acc, acc_deg, g, deg_g);
        acc_deg += deg_g;
    }
    return acc;
}

template <typename S>
S det(const DenseMatrix<S>& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    S acc = S(0);
    for (std::size_t r = 0; r < n; ++r) {
        if (m(r, 0) == S(0)) continue;
        DenseMatrix<S> sub(n - 1, n - 1);
        for (std::size_t i = 0, si = 0; i < n; ++i) {
            if (i == r) continue;
            for (std::size_t j = 1; j < n; ++j) sub(si, j - 1) = m(i, j);
            ++si;
        }
        const S term = m(r, 0) * det(sub);
        if (r % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

template <typename S>
std::vector<S> cone_point(const VarietySpec& spec, std::span<const S> param) {
    if (static_cast<std::int64_t>(param.size()) != spec.param_dim())
        throw InputError("cone_point: parameter length does not match param_dim");

    switch (spec.family()) {
        case Family::Veronese:
        case Family::PowerOfForms: {
            const int base_deg = spec.family() == Family::Veronese ? 1 : spec.degree();
            const int expo = spec.family() == Family::Veronese ? spec.degree() : spec.power();
            std::vector<S> g(param.begin(), param.end());
            return hom_power(spec.n_vars(), g, base_deg, expo);
        }
        case Family::Segre: {
            const auto& fmt = spec.formats();
            std::vector<S> out(static_cast<size_t>(spec.ambient_affine_dim()), S(0));
            std::vector<int> idx(fmt.size(), 0);
            std::vector<std::size_t> offset(fmt.size(), 0);
            for (size_t a = 1; a < fmt.size(); ++a)
                offset[a] = offset[a - 1] + static_cast<std::size_t>(fmt[a - 1]);
            for (std::size_t flat = 0; flat < out.size(); ++flat) {
                S v = S(1);
                std::size_t rem = flat;
                for (size_t a = fmt.size(); a-- > 0;) {
                    idx[a] = static_cast<int>(rem % static_cast<std::size_t>(fmt[a]));
                    rem /= static_cast<std::size_t>(fmt[a]);
                }
                for (size_t a = 0; a < fmt.size(); ++a)
                    v = v * param[offset[a] + static_cast<std::size_t>(idx[a])];
                out[flat] = v;
            }
            return out;
        }
        case Family::Grassmannian: {
            const int k = spec.gr_k(), m = spec.gr_m();
            const auto subsets = k_subsets(k, m);
            std::vector<S> out;
            out.reserve(subsets.size());
            DenseMatrix<S> minor(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
            for (const auto& s : subsets) {
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j)
                        minor(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                            param[static_cast<std::size_t>(i * m + s[static_cast<size_t>(j)])];
                out.push_back(det(minor));
            }
            return out;
        }
    }
    throw InputError("cone_point: unknown family");
}

// Entry (i, j) is the partial derivative of coordinate i of cone_point with
// respect to parameter j.
template <typename S>
DenseMatrix<S> cone_jacobian(const VarietySpec& spec, std::span<const S> param) {
    if (static_cast<std::int64_t>(param.size()) != spec.param_dim())
        throw InputError("cone_jacobian: parameter length does not match param_dim");

    DenseMatrix<S> jac(static_cast<std::size_t>(spec.ambient_affine_dim()),
                       static_cast<std::size_t>(spec.param_dim()));

    switch (spec.family()) {
        case Family::Veronese:
        case Family::PowerOfForms: {
            const int n = spec.n_vars();
            const int base_deg = spec.family() == Family::Veronese ? 1 : spec.degree();
            const int expo = spec.family() == Family::Veronese ? spec.degree() : spec.power();
            std::vector<S> g(param.begin(), param.end());
            const std::vector<S> h = hom_power(n, g, base_deg, expo - 1);
            const int h_deg = base_deg * (expo - 1);
            const auto exp_h = monomial_exponents(n, h_deg);
            const auto exp_basis = monomial_exponents(n, base_deg);
            std::vector<int> e(static_cast<size_t>(n));
            for (size_t j = 0; j < exp_basis.size(); ++j) {
                for (size_t p = 0; p < h.size(); ++p) {
                    if (h[p] == S(0)) continue;
                    for (size_t v = 0; v < e.size(); ++v) e[v] = exp_h[p][v] + exp_basis[j][v];
                    const auto row = static_cast<std::size_t>(monomial_index(e, h_deg + base_deg));
                    jac(row, j) += S(expo) * h[p];
                }
            }
            return jac;
        }
        case Family::Segre: {
            const auto& fmt = spec.formats();
            std::vector<std::size_t> offset(fmt.size(), 0);
            for (size_t a = 1; a < fmt.size(); ++a)
                offset[a] = offset[a - 1] + static_cast<std::size_t>(fmt[a - 1]);
            std::vector<int> idx(fmt.size(), 0);
            const auto ambient = static_cast<std::size_t>(spec.ambient_affine_dim());
            for (std::size_t flat = 0; flat < ambient; ++flat) {
                std::size_t rem = flat;
                for (size_t a = fmt.size(); a-- > 0;) {
                    idx[a] = static_cast<int>(rem % static_cast<std::size_t>(fmt[a]));
                    rem /= static_cast<std::size_t>(fmt[a]);
                }
                for (size_t a = 0; a < fmt.size(); ++a) {
                    S prod = S(1);
                    for (size_t b = 0; b < fmt.size(); ++b) {
                        if (b == a) continue;
                        prod = prod * param[offset[b] + static_cast<std::size_t>(idx[b])];
                    }
                    jac(flat, offset[a] + static_cast<std::size_t>(idx[a])) += prod;
                }
            }
            return jac;
        }
        case Family::Grassmannian: {
            const int k = spec.gr_k(), m = spec.gr_m();
            const auto subsets = k_subsets(k, m);
            for (size_t row = 0; row < subsets.size(); ++row) {
                const auto& s = subsets[row];
                for (int a = 0; a < k; ++a) {
                    for (int pos = 0; pos < k; ++pos) {
                        // cofactor of entry (a, pos) in the k x k submatrix on columns s
                        if (k == 1) {
                            jac(row, static_cast<std::size_t>(a * m + s[0])) = S(1);
                            continue;
                        }
                        DenseMatrix<S> sub(static_cast<std::size_t>(k - 1),
                                           static_cast<std::size_t>(k - 1));
                        for (int i = 0, si = 0; i < k; ++i) {
                            if (i == a) continue;
                            for (int j = 0, sj = 0; j < k; ++j) {
                                if (j == pos) continue;
                                sub(static_cast<std::size_t>(si), static_cast<std::size_t>(sj)) =
                                    param[static_cast<std::size_t>(i * m + s[static_cast<size_t>(j)])];
                                ++sj;
                            }
                            ++si;
                        }
                        S cof = det(sub);
                        if ((a + pos) % 2 != 0) cof = -cof;
                        jac(row, static_cast<std::size_t>(a * m + s[static_cast<size_t>(pos)])) = cof;
                    }
                }
            }
            return jac;
        }
    }
    throw InputError("cone_jacobian: unknown family");
}

}  // namespace kernels

// ---------------------------------------------------------------------------
// Typed values. Complex scalars are stored as separate real/imaginary parts;
// Real-field values keep the imaginary part identically zero.
// ---------------------------------------------------------------------------

struct ConeParam {
    Field field = Field::Real;
    Eigen::VectorXd re;
    Eigen::VectorXd im;  // zero vector for Real field

    static ConeParam real(Eigen::VectorXd values);
    static ConeParam complex(Eigen::VectorXd re, Eigen::VectorXd im);
    Eigen::VectorXcd as_complex() const;
    bool is_zero() const;
};

struct AmbientPoint {
    VarietySpec spec;
    Field field = Field::Real;
    Eigen::VectorXd re;
    Eigen::VectorXd im;

    Eigen::VectorXcd as_complex() const;
    double norm() const;
};

struct DecompositionTerm {
    double coeff_re = 1.0;
    double coeff_im = 0.0;
    ConeParam param;
};

// A list of (coefficient, cone parameter) terms witnessing a rank upper
// bound. `residual` is relative to the stated target; absent means exact.
struct Decomposition {
    VarietySpec spec;
    Field field = Field::Real;
    std::vector<DecompositionTerm> terms;
    std::optional<double> residual;

    std::size_t length() const { return terms.size(); }
};

AmbientPoint cone_point(const VarietySpec& spec, const ConeParam& param);

// Jacobian of the cone parameterization, complex and real views.
Eigen::MatrixXcd cone_jacobian_complex(const VarietySpec& spec, const Eigen::VectorXcd& param);
Eigen::MatrixXd cone_jacobian_real(const VarietySpec& spec, const Eigen::VectorXd& param);

// Sum of coefficient-weighted cone points. Rejects terms with mismatched
// spec/field or an identically zero parameter.
AmbientPoint evaluate(const Decomposition& dec);

}  // namespace xrank
