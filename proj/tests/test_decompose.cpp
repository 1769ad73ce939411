#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xrank/binary.hpp"
#include "xrank/decompose.hpp"
#include "xrank/rng.hpp"

using namespace xrank;

namespace {

AmbientPoint random_cone_target(const VarietySpec& spec, Field field, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::VectorXd re(spec.param_dim()), im(spec.param_dim());
    for (Eigen::Index i = 0; i < re.size(); ++i) {
        re[i] = rng.normal();
        im[i] = field == Field::Complex ? rng.normal() : 0.0;
    }
    const ConeParam p =
        field == Field::Complex ? ConeParam::complex(re, im) : ConeParam::real(re);
    return cone_point(spec, p);
}

AmbientPoint random_ambient(const VarietySpec& spec, Field field, std::uint64_t seed) {
    Rng rng(seed);
    AmbientPoint p;
    p.spec = spec;
    p.field = field;
    p.re.resize(spec.ambient_affine_dim());
    p.im.resize(spec.ambient_affine_dim());
    for (Eigen::Index i = 0; i < p.re.size(); ++i) {
        p.re[i] = rng.normal();
        p.im[i] = field == Field::Complex ? rng.normal() : 0.0;
    }
    return p;
}

}  // namespace

TEST_CASE("rank-1 fit recovers exact cone membership") {
    FitOptions opts;
    opts.seed = 5;
    opts.restarts = 6;
    opts.target_relative_residual = 1e-12;  // exact membership polishes well past it
    for (Field field : {Field::Real, Field::Complex}) {
        const auto spec = VarietySpec::veronese(3, 3);
        const AmbientPoint target = random_cone_target(spec, field, 42);
        const FitResult fit = fit_rank(spec, target, 1, field, opts);
        REQUIRE(fit.success);
        CHECK(fit.relative_residual <= 1e-10);
    }
}

TEST_CASE("generic complex quartic targets fit at the generic rank, not below") {
    const auto spec = VarietySpec::veronese(3, 4);
    const AmbientPoint target = random_ambient(spec, Field::Complex, 7);

    FitOptions opts;
    opts.seed = 11;
    const FitResult at_gen = fit_rank(spec, target, 6, Field::Complex, opts);
    REQUIRE(at_gen.success);
    CHECK(at_gen.relative_residual <= 1e-8);
    for (const auto& t : at_gen.decomposition.terms) CHECK(!t.param.is_zero());

    FitOptions fast = opts;
    fast.restarts = 4;
    fast.max_iterations = 200;
    const FitResult below = fit_rank(spec, target, 4, Field::Complex, fast);
    CHECK(!below.success);
    CHECK(below.relative_residual > 1e-4);  // sigma_4 is a proper subvariety
}

TEST_CASE("certified residual is recomputed through evaluate") {
    const auto spec = VarietySpec::segre({2, 2, 2});
    const AmbientPoint target = random_ambient(spec, Field::Complex, 13);
    FitOptions opts;
    opts.seed = 3;
    const FitResult fit = fit_rank(spec, target, 2, Field::Complex, opts);
    REQUIRE(fit.success);
    const AmbientPoint replay = evaluate(fit.decomposition);
    const double resid =
        (replay.as_complex() - target.as_complex()).norm() / target.as_complex().norm();
    CHECK(resid == doctest::Approx(fit.relative_residual).epsilon(1e-9));
}

TEST_CASE("analytic gradient matches finite differences") {
    const auto spec = VarietySpec::veronese(3, 3);
    Rng rng(17);
    const AmbientPoint target = random_ambient(spec, Field::Real, 19);
    const int r = 2;
    const Eigen::Index pd = spec.param_dim();
    Eigen::VectorXd u(r * (pd + 1));
    for (Eigen::Index i = 0; i < u.size(); ++i) u[i] = rng.normal();

    auto model = [&](const Eigen::VectorXd& vars) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(spec.ambient_affine_dim());
        for (int i = 0; i < r; ++i) {
            const double c = vars[i * (pd + 1)];
            const Eigen::VectorXd theta = vars.segment(i * (pd + 1) + 1, pd);
            acc += c * cone_point(spec, ConeParam::real(theta)).re;
        }
        return acc;
    };
    auto cost = [&](const Eigen::VectorXd& vars) {
        return (target.re - model(vars)).squaredNorm();
    };

    // analytic: grad = -2 J^T (target - model)
    Eigen::MatrixXd jac(spec.ambient_affine_dim(), u.size());
    for (int i = 0; i < r; ++i) {
        const double c = u[i * (pd + 1)];
        const Eigen::VectorXd theta = u.segment(i * (pd + 1) + 1, pd);
        jac.col(i * (pd + 1)) = cone_point(spec, ConeParam::real(theta)).re;
        jac.middleCols(i * (pd + 1) + 1, pd) = c * cone_jacobian_real(spec, theta);
    }
    const Eigen::VectorXd grad_analytic = -2.0 * jac.transpose() * (target.re - model(u));

    Eigen::VectorXd grad_fd(u.size());
    const double h = 1e-6;
    for (Eigen::Index k = 0; k < u.size(); ++k) {
        Eigen::VectorXd hi = u, lo = u;
        hi[k] += h;
        lo[k] -= h;
        grad_fd[k] = (cost(hi) - cost(lo)) / (2 * h);
    }
    CHECK((grad_fd - grad_analytic).norm() <= 1e-5 * grad_analytic.norm());
}

TEST_CASE("complex split: ternary quintics within fourteen terms") {
    const auto spec = VarietySpec::veronese(3, 5);
    const AmbientPoint target = random_ambient(spec, Field::Complex, 23);
    FitOptions opts;
    opts.seed = 29;
    const SplitReport report = two_point_split_complex(spec, target, opts);
    REQUIRE(report.success);
    CHECK(report.length <= 14);  // twice the generic rank 7
    CHECK(report.relative_residual <= 1e-8);
    CHECK(report.anchor.terms.size() == 7);
    CHECK(report.remainder.terms.size() == 7);

    // soundness: replay the combined decomposition independently
    const AmbientPoint replay = evaluate(report.combined);
    const double resid =
        (replay.as_complex() - target.as_complex()).norm() / target.as_complex().norm();
    CHECK(resid <= 1e-8);
}

TEST_CASE("complex split does not shorten low-rank targets") {
    const auto spec = VarietySpec::veronese(3, 3);
    const AmbientPoint target = random_cone_target(spec, Field::Complex, 31);  // rank 1
    FitOptions opts;
    opts.seed = 37;
    const SplitReport report = two_point_split_complex(spec, target, opts);
    REQUIRE(report.success);
    CHECK(report.length <= 2 * 4);  // contract only: at most 2 r_gen terms
}

TEST_CASE("complex split of a binary quartic with known exact rank") {
    // x^3 y has exact complex rank 4; the split contract is only <= 2 r_gen = 6
    const BinaryForm f = parse_binary_form("x^3*y");
    CHECK(complex_rank(f).rank == 4);
    AmbientPoint target = to_ambient_point(f, Field::Complex);
    FitOptions opts;
    opts.seed = 41;
    const SplitReport report =
        two_point_split_complex(VarietySpec::veronese(2, 4), target, opts);
    REQUIRE(report.success);
    CHECK(report.length <= 6);
    CHECK(report.relative_residual <= 1e-8);
}

TEST_CASE("real split: the maximal-rank sextic in at most eight real terms") {
    const BinaryForm f = parse_binary_form("x^5*y");
    CHECK(real_rank(f).rank == 6);
    const AmbientPoint target = to_ambient_point(f, Field::Real);
    FitOptions opts;
    opts.seed = 43;
    const SplitReport report =
        two_point_split_real(VarietySpec::veronese(2, 6), target, 4, opts);
    REQUIRE(report.success);
    CHECK(report.length <= 8);
    CHECK(report.relative_residual <= 1e-8);

    // field closure: imaginary parts are exactly zero by construction
    for (const auto& t : report.combined.terms) {
        CHECK(t.coeff_im == 0.0);
        CHECK(t.param.im.isZero(0.0));
    }
}

TEST_CASE("real split handles a rank-3 2x2x2 tensor within four terms") {
    const auto spec = VarietySpec::segre({2, 2, 2});
    // pencil with complex eigenvalues: slices I and a rotation; real rank 3
    AmbientPoint target;
    target.spec = spec;
    target.field = Field::Real;
    target.re = Eigen::VectorXd::Zero(8);
    target.re[0] = 1;   // t000
    target.re[3] = 1;   // t011
    target.re[5] = -1;  // t101
    target.re[6] = 1;   // t110
    target.im = Eigen::VectorXd::Zero(8);

    FitOptions opts;
    opts.seed = 47;
    const SplitReport report = two_point_split_real(spec, target, 2, opts);
    REQUIRE(report.success);
    CHECK(report.length <= 4);
    CHECK(report.relative_residual <= 1e-8);
}

TEST_CASE("real split of an anchor-like target is routine") {
    const auto spec = VarietySpec::veronese(2, 3);
    // target already has a two-term real decomposition
    Decomposition known;
    known.spec = spec;
    known.field = Field::Real;
    Eigen::VectorXd p1(2), p2(2);
    p1 << 1.0, 0.5;
    p2 << -0.3, 1.2;
    known.terms.push_back({1.0, 0.0, ConeParam::real(p1)});
    known.terms.push_back({-2.0, 0.0, ConeParam::real(p2)});
    const AmbientPoint target = evaluate(known);

    FitOptions opts;
    opts.seed = 53;
    const SplitReport report = two_point_split_real(spec, target, 2, opts);
    REQUIRE(report.success);
    CHECK(report.length <= 4);
}

TEST_CASE("splits are deterministic in the seed") {
    const auto spec = VarietySpec::veronese(3, 4);
    const AmbientPoint target = random_ambient(spec, Field::Complex, 59);
    FitOptions opts;
    opts.seed = 61;
    const SplitReport a = two_point_split_complex(spec, target, opts);
    const SplitReport b = two_point_split_complex(spec, target, opts);
    REQUIRE(a.success);
    REQUIRE(b.success);
    CHECK(a.length == b.length);
    CHECK(a.attempts == b.attempts);
    CHECK(a.relative_residual == b.relative_residual);
    REQUIRE(a.combined.terms.size() == b.combined.terms.size());
    for (size_t i = 0; i < a.combined.terms.size(); ++i) {
        CHECK(a.combined.terms[i].coeff_re == b.combined.terms[i].coeff_re);
        CHECK(a.combined.terms[i].coeff_im == b.combined.terms[i].coeff_im);
        CHECK((a.combined.terms[i].param.re - b.combined.terms[i].param.re).norm() == 0.0);
        CHECK((a.combined.terms[i].param.im - b.combined.terms[i].param.im).norm() == 0.0);
    }
}

TEST_CASE("fit options are validated") {
    FitOptions opts;
    opts.target_relative_residual = 2.0;
    const auto spec = VarietySpec::veronese(2, 2);
    const AmbientPoint target = random_ambient(spec, Field::Real, 1);
    CHECK_THROWS_AS(fit_rank(spec, target, 1, Field::Real, opts), InputError);
    FitOptions opts2;
    opts2.restarts = 0;
    CHECK_THROWS_AS(fit_rank(spec, target, 1, Field::Real, opts2), InputError);
}
