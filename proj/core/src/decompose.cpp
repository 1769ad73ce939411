#include "xrank/decompose.hpp"

#include <Eigen/Dense>

#include <cmath>

#include "xrank/dimension.hpp"
#include "xrank/rng.hpp"

namespace xrank {

void FitOptions::validate() const {
    if (max_iterations < 1 || restarts < 1 || split_anchor_retries < 1)
        throw InputError("FitOptions: iteration/restart counts must be positive");
    if (!(target_relative_residual > 0.0 && target_relative_residual < 1.0))
        throw InputError("FitOptions: target residual must lie in (0, 1)");
    if (lambda_init <= 0.0 || lambda_up <= 1.0 || lambda_down <= 1.0)
        throw InputError("FitOptions: damping schedule must be positive");
}

namespace {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
VectorX<Scalar> cone_point_vec(const VarietySpec& spec, const VectorX<Scalar>& param) {
    std::vector<Scalar> p(param.data(), param.data() + param.size());
    const std::vector<Scalar> v = kernels::cone_point<Scalar>(spec, p);
    return Eigen::Map<const VectorX<Scalar>>(v.data(), static_cast<Eigen::Index>(v.size()));
}

template <typename Scalar>
MatrixX<Scalar> cone_jacobian_mat(const VarietySpec& spec, const VectorX<Scalar>& param) {
    std::vector<Scalar> p(param.data(), param.data() + param.size());
    const DenseMatrix<Scalar> jac = kernels::cone_jacobian<Scalar>(spec, p);
    MatrixX<Scalar> out(jac.rows(), jac.cols());
    for (std::size_t i = 0; i < jac.rows(); ++i)
        for (std::size_t j = 0; j < jac.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jac(i, j);
    return out;
}

// Unknowns are flattened as r blocks of (coefficient, parameter block).
template <typename Scalar>
struct LmState {
    VectorX<Scalar> u;
    Eigen::Index r = 0, pd = 0;

    Scalar coeff(Eigen::Index i) const { return u[i * (pd + 1)]; }
    VectorX<Scalar> param(Eigen::Index i) const { return u.segment(i * (pd + 1) + 1, pd); }
};

template <typename Scalar>
VectorX<Scalar> model_value(const VarietySpec& spec, const LmState<Scalar>& s) {
    VectorX<Scalar> acc = VectorX<Scalar>::Zero(spec.ambient_affine_dim());
    for (Eigen::Index i = 0; i < s.r; ++i)
        acc += s.coeff(i) * cone_point_vec<Scalar>(spec, s.param(i));
    return acc;
}

template <typename Scalar>
MatrixX<Scalar> model_jacobian(const VarietySpec& spec, const LmState<Scalar>& s) {
    const Eigen::Index ambient = spec.ambient_affine_dim();
    MatrixX<Scalar> jac(ambient, s.r * (s.pd + 1));
    for (Eigen::Index i = 0; i < s.r; ++i) {
        const VectorX<Scalar> theta = s.param(i);
        jac.col(i * (s.pd + 1)) = cone_point_vec<Scalar>(spec, theta);
        jac.middleCols(i * (s.pd + 1) + 1, s.pd) =
            s.coeff(i) * cone_jacobian_mat<Scalar>(spec, theta);
    }
    return jac;
}

template <typename Scalar>
Scalar draw_scalar(Rng& rng);

template <>
double draw_scalar<double>(Rng& rng) {
    return rng.normal();
}
template <>
std::complex<double> draw_scalar<std::complex<double>>(Rng& rng) {
    return rng.complex_normal();
}

// Random start: normal parameter blocks, then the optimal coefficients for
// those blocks from one linear least-squares solve.
template <typename Scalar>
LmState<Scalar> random_start(const VarietySpec& spec, const VectorX<Scalar>& target, int r,
                             Rng& rng) {
    LmState<Scalar> s;
    s.r = r;
    s.pd = spec.param_dim();
    s.u = VectorX<Scalar>::Zero(r * (s.pd + 1));
    MatrixX<Scalar> cols(spec.ambient_affine_dim(), r);
    for (Eigen::Index i = 0; i < r; ++i) {
        VectorX<Scalar> theta(s.pd);
        for (Eigen::Index j = 0; j < s.pd; ++j) theta[j] = draw_scalar<Scalar>(rng);
        s.u.segment(i * (s.pd + 1) + 1, s.pd) = theta;
        cols.col(i) = cone_point_vec<Scalar>(spec, theta);
    }
    const VectorX<Scalar> c = cols.colPivHouseholderQr().solve(target);
    for (Eigen::Index i = 0; i < r; ++i) {
        // keep terms alive: a zero coefficient would freeze the block
        s.u[i * (s.pd + 1)] = c[i] == Scalar(0) ? Scalar(1e-6) : c[i];
    }
    return s;
}

template <typename Scalar>
bool lm_minimize(const VarietySpec& spec, const VectorX<Scalar>& target, LmState<Scalar>& s,
                 const FitOptions& opts, double target_abs) {
    double lambda = opts.lambda_init;
    VectorX<Scalar> residual = target - model_value(spec, s);
    double cost = residual.norm();
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (cost <= target_abs) return true;
        const MatrixX<Scalar> jac = model_jacobian(spec, s);
        const MatrixX<Scalar> jtj = jac.adjoint() * jac;
        const VectorX<Scalar> jtr = jac.adjoint() * residual;
        bool accepted = false;
        while (lambda <= 1e14) {
            MatrixX<Scalar> damped = jtj;
            damped.diagonal().array() += Scalar(lambda);
            const VectorX<Scalar> step = damped.ldlt().solve(jtr);
            LmState<Scalar> trial = s;
            trial.u += step;
            const VectorX<Scalar> trial_res = target - model_value(spec, trial);
            const double trial_cost = trial_res.norm();
            if (trial_cost < cost) {
                s = trial;
                residual = trial_res;
                cost = trial_cost;
                lambda = std::max(lambda / opts.lambda_down, 1e-12);
                accepted = true;
                break;
            }
            lambda *= opts.lambda_up;
        }
        if (!accepted) return cost <= target_abs;  // stalled
    }
    return cost <= target_abs;
}

template <typename Scalar>
Decomposition to_decomposition(const VarietySpec& spec, Field field, const LmState<Scalar>& s);

template <>
Decomposition to_decomposition<double>(const VarietySpec& spec, Field field,
                                       const LmState<double>& s) {
    Decomposition dec;
    dec.spec = spec;
    dec.field = field;
    for (Eigen::Index i = 0; i < s.r; ++i) {
        DecompositionTerm t;
        t.coeff_re = s.coeff(i);
        t.param = ConeParam::real(s.param(i));
        dec.terms.push_back(std::move(t));
    }
    return dec;
}

template <>
Decomposition to_decomposition<std::complex<double>>(const VarietySpec& spec, Field field,
                                                     const LmState<std::complex<double>>& s) {
    Decomposition dec;
    dec.spec = spec;
    dec.field = field;
    for (Eigen::Index i = 0; i < s.r; ++i) {
        DecompositionTerm t;
        const std::complex<double> c = s.coeff(i);
        t.coeff_re = c.real();
        t.coeff_im = c.imag();
        const VectorX<std::complex<double>> theta = s.param(i);
        t.param = ConeParam::complex(theta.real(), theta.imag());
        dec.terms.push_back(std::move(t));
    }
    return dec;
}

template <typename Scalar>
LmState<Scalar> state_from_decomposition(const VarietySpec& spec, const Decomposition& init);

template <>
LmState<double> state_from_decomposition<double>(const VarietySpec& spec,
                                                 const Decomposition& init) {
    LmState<double> s;
    s.r = static_cast<Eigen::Index>(init.terms.size());
    s.pd = spec.param_dim();
    s.u = VectorX<double>::Zero(s.r * (s.pd + 1));
    for (Eigen::Index i = 0; i < s.r; ++i) {
        s.u[i * (s.pd + 1)] = init.terms[static_cast<size_t>(i)].coeff_re;
        s.u.segment(i * (s.pd + 1) + 1, s.pd) = init.terms[static_cast<size_t>(i)].param.re;
    }
    return s;
}

template <>
LmState<std::complex<double>> state_from_decomposition<std::complex<double>>(
    const VarietySpec& spec, const Decomposition& init) {
    LmState<std::complex<double>> s;
    s.r = static_cast<Eigen::Index>(init.terms.size());
    s.pd = spec.param_dim();
    s.u = VectorX<std::complex<double>>::Zero(s.r * (s.pd + 1));
    for (Eigen::Index i = 0; i < s.r; ++i) {
        const auto& term = init.terms[static_cast<size_t>(i)];
        s.u[i * (s.pd + 1)] = std::complex<double>(term.coeff_re, term.coeff_im);
        s.u.segment(i * (s.pd + 1) + 1, s.pd) = term.param.as_complex();
    }
    return s;
}

// Re-verify the residual through the public evaluate path rather than the
// optimizer's own bookkeeping.
double certified_residual(const Decomposition& dec, const AmbientPoint& target) {
    const AmbientPoint got = evaluate(dec);
    return (got.as_complex() - target.as_complex()).norm() / target.as_complex().norm();
}

template <typename Scalar>
FitResult fit_rank_impl(const VarietySpec& spec, const AmbientPoint& target, int r, Field field,
                        const FitOptions& opts, const Decomposition* init) {
    opts.validate();
    if (r < 1) throw InputError("fit_rank: r must be >= 1");
    if (target.spec != spec) throw InputError("fit_rank: target spec mismatch");
    const double target_norm = target.norm();
    if (target_norm == 0.0) throw InputError("fit_rank: zero target");

    VectorX<Scalar> t;
    if constexpr (std::is_same_v<Scalar, double>) {
        if (target.field != Field::Real || !target.im.isZero(0.0))
            throw InputError("fit_rank: real fit needs a real target");
        t = target.re;
    } else {
        t = target.as_complex();
    }

    FitResult best;
    best.relative_residual = std::numeric_limits<double>::infinity();
    const double target_abs = opts.target_relative_residual * target_norm;

    for (int restart = 0; restart < opts.restarts; ++restart) {
        LmState<Scalar> s;
        if (restart == 0 && init != nullptr) {
            s = state_from_decomposition<Scalar>(spec, *init);
        } else {
            Rng rng = Rng::substream(opts.seed ^ 0xf17a5eedULL, static_cast<std::uint64_t>(restart));
            s = random_start<Scalar>(spec, t, r, rng);
        }
        const bool converged = lm_minimize<Scalar>(spec, t, s, opts, target_abs);
        Decomposition dec = to_decomposition<Scalar>(spec, field, s);
        bool degenerate = false;
        for (const auto& term : dec.terms)
            if (term.param.is_zero()) degenerate = true;
        if (degenerate) continue;
        const double resid = certified_residual(dec, target);
        dec.residual = resid;
        if (resid < best.relative_residual) {
            best.relative_residual = resid;
            best.decomposition = std::move(dec);
            best.restarts_used = restart + 1;
        }
        if (converged && resid <= opts.target_relative_residual) {
            best.success = true;
            return best;
        }
    }
    return best;
}

}  // namespace

FitResult fit_rank(const VarietySpec& spec, const AmbientPoint& target, int r, Field field,
                   const FitOptions& opts) {
    return field == Field::Real
               ? fit_rank_impl<double>(spec, target, r, field, opts, nullptr)
               : fit_rank_impl<std::complex<double>>(spec, target, r, field, opts, nullptr);
}

FitResult fit_rank_from(const VarietySpec& spec, const AmbientPoint& target, int r, Field field,
                        const FitOptions& opts, const Decomposition& init) {
    if (static_cast<int>(init.terms.size()) != r)
        throw InputError("fit_rank_from: init length must equal r");
    return field == Field::Real
               ? fit_rank_impl<double>(spec, target, r, field, opts, &init)
               : fit_rank_impl<std::complex<double>>(spec, target, r, field, opts, &init);
}

namespace {

// Random rank-r anchor with unit coefficients (complex) or random signs
// (real), parameter scale chosen so the anchor norm is comparable to `scale`.
Decomposition random_anchor(const VarietySpec& spec, Field field, int r, double scale, Rng& rng) {
    Decomposition dec;
    dec.spec = spec;
    dec.field = field;
    const int w = spec.homogeneity_weight();
    for (int i = 0; i < r; ++i) {
        DecompositionTerm t;
        Eigen::VectorXd re(spec.param_dim()), im(spec.param_dim());
        for (Eigen::Index j = 0; j < re.size(); ++j) {
            re[j] = rng.normal();
            im[j] = field == Field::Complex ? rng.normal() : 0.0;
        }
        ConeParam p = field == Field::Complex ? ConeParam::complex(re, im) : ConeParam::real(re);
        const double pt_norm = cone_point(spec, p).norm();
        if (pt_norm > 0.0) {
            const double factor = std::pow(scale / (r * pt_norm), 1.0 / w);
            p.re *= factor;
            p.im *= factor;
        }
        t.param = std::move(p);
        t.coeff_re = field == Field::Real ? (rng.uniform_int(0, 1) == 0 ? 1.0 : -1.0) : 1.0;
        dec.terms.push_back(std::move(t));
    }
    return dec;
}

Decomposition concatenate(const Decomposition& a, const Decomposition& b, double scale_a,
                          double scale_b) {
    Decomposition out;
    out.spec = a.spec;
    out.field = a.field;
    for (const auto& t : a.terms) {
        DecompositionTerm nt = t;
        nt.coeff_re *= scale_a;
        nt.coeff_im *= scale_a;
        out.terms.push_back(std::move(nt));
    }
    for (const auto& t : b.terms) {
        DecompositionTerm nt = t;
        nt.coeff_re *= scale_b;
        nt.coeff_im *= scale_b;
        out.terms.push_back(std::move(nt));
    }
    return out;
}

AmbientPoint difference(const AmbientPoint& a, const AmbientPoint& b, Field field) {
    AmbientPoint out;
    out.spec = a.spec;
    out.field = field;
    out.re = a.re - b.re;
    out.im = a.im - b.im;
    return out;
}

}  // namespace

SplitReport two_point_split_complex(const VarietySpec& spec, const AmbientPoint& target,
                                    const FitOptions& opts, std::optional<int> r_gen_opt) {
    opts.validate();
    if (target.spec != spec) throw InputError("two_point_split_complex: target spec mismatch");
    if (target.norm() == 0.0) throw InputError("two_point_split_complex: zero target");

    int r_gen = 0;
    if (r_gen_opt) {
        r_gen = *r_gen_opt;
    } else if (spec.family() == Family::Veronese) {
        r_gen = waring_generic_rank(spec.n_vars(), spec.degree()).r_gen;
    } else if (spec.family() == Family::Segre) {
        r_gen = segre_generic_rank(spec.formats()).r_gen;
    } else {
        r_gen = generic_rank_terracini(spec).r_gen;
    }

    AmbientPoint input = target;
    input.field = Field::Complex;

    SplitReport report;
    report.input = input;
    report.seed = opts.seed;

    for (int attempt = 0; attempt < opts.split_anchor_retries; ++attempt) {
        ++report.attempts;
        Rng rng = Rng::substream(opts.seed ^ 0xa2c404ULL, static_cast<std::uint64_t>(attempt));
        const Decomposition anchor =
            random_anchor(spec, Field::Complex, r_gen, target.norm(), rng);
        const AmbientPoint p = evaluate(anchor);
        const AmbientPoint diff = difference(input, p, Field::Complex);
        if (diff.norm() == 0.0) continue;  // target happened to equal the anchor

        FitOptions inner = opts;
        inner.seed = rng.next_u64();
        // the fit residual is relative to ||q - p||; tighten it so the
        // combined residual lands under the requested target
        inner.target_relative_residual = std::min(
            0.5, opts.target_relative_residual * target.norm() / diff.norm() * 0.5);
        const FitResult fit = fit_rank(spec, diff, r_gen, Field::Complex, inner);
        if (!fit.success) continue;

        Decomposition combined = concatenate(fit.decomposition, anchor, 1.0, 1.0);
        const double resid = certified_residual(combined, input);
        if (resid > opts.target_relative_residual) continue;

        combined.residual = resid;
        report.success = true;
        report.anchor = anchor;
        report.remainder = fit.decomposition;
        report.combined = std::move(combined);
        report.length = static_cast<int>(report.combined.terms.size());
        report.relative_residual = resid;
        return report;
    }
    return report;
}

SplitReport two_point_split_real(const VarietySpec& spec, const AmbientPoint& target, int r0,
                                 const FitOptions& opts) {
    opts.validate();
    if (r0 < 1) throw InputError("two_point_split_real: r0 must be >= 1");
    if (target.spec != spec) throw InputError("two_point_split_real: target spec mismatch");
    if (target.field != Field::Real || !target.im.isZero(0.0))
        throw InputError("two_point_split_real: target must be real");
    if (target.norm() == 0.0) throw InputError("two_point_split_real: zero target");

    SplitReport report;
    report.input = target;
    report.seed = opts.seed;

    for (int anchor_try = 0; anchor_try < opts.split_anchor_retries; ++anchor_try) {
        Rng rng = Rng::substream(opts.seed ^ 0xb5a11ULL, static_cast<std::uint64_t>(anchor_try));
        const Decomposition anchor = random_anchor(spec, Field::Real, r0, target.norm(), rng);
        const AmbientPoint p = evaluate(anchor);
        if (p.norm() == 0.0) continue;

        double eps = 0.1 * p.norm() / target.norm();
        while (eps >= 1e-8) {
            ++report.attempts;
            AmbientPoint shifted;
            shifted.spec = spec;
            shifted.field = Field::Real;
            shifted.re = eps * target.re + p.re;
            shifted.im = Eigen::VectorXd::Zero(target.re.size());
            if (shifted.norm() == 0.0) {
                eps *= 0.5;
                continue;
            }

            FitOptions inner = opts;
            inner.seed = rng.next_u64();
            inner.target_relative_residual =
                std::min(0.5, opts.target_relative_residual * eps * target.norm() /
                                  shifted.norm() * 0.5);
            const FitResult fit =
                fit_rank_from(spec, shifted, r0, Field::Real, inner, anchor);
            if (fit.success) {
                Decomposition combined =
                    concatenate(fit.decomposition, anchor, 1.0 / eps, -1.0 / eps);
                const double resid = certified_residual(combined, target);
                if (resid <= opts.target_relative_residual) {
                    combined.residual = resid;
                    report.success = true;
                    report.anchor = anchor;
                    report.remainder = fit.decomposition;
                    report.combined = std::move(combined);
                    report.length = static_cast<int>(report.combined.terms.size());
                    report.relative_residual = resid;
                    return report;
                }
            }
            eps *= 0.5;
        }
    }
    return report;
}

}  // namespace xrank
