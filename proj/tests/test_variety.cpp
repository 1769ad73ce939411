#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "xrank/rng.hpp"
#include "xrank/variety.hpp"

using namespace xrank;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> vals) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
    Eigen::Index i = 0;
    for (double x : vals) v[i++] = x;
    return v;
}

ConeParam random_real_param(const VarietySpec& spec, Rng& rng) {
    Eigen::VectorXd v(spec.param_dim());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
    return ConeParam::real(v);
}

}  // namespace

TEST_CASE("spec dimensions match the closed forms") {
    const auto ver = VarietySpec::veronese(3, 4);
    CHECK(ver.ambient_affine_dim() == 15);  // binom(6,2)
    CHECK(ver.param_dim() == 3);

    const auto seg = VarietySpec::segre({2, 3, 4});
    CHECK(seg.ambient_affine_dim() == 24);
    CHECK(seg.param_dim() == 9);

    const auto gr = VarietySpec::grassmannian(2, 4);
    CHECK(gr.ambient_affine_dim() == 6);
    CHECK(gr.param_dim() == 8);

    const auto pf = VarietySpec::power_of_forms(3, 2, 2);
    CHECK(pf.ambient_affine_dim() == 15);  // binom(6,2), quartics in 3 vars
    CHECK(pf.param_dim() == 6);            // quadrics in 3 vars

    CHECK_THROWS_AS(VarietySpec::veronese(1, 2), InputError);
    CHECK_THROWS_AS(VarietySpec::segre({2}), InputError);
    CHECK_THROWS_AS(VarietySpec::grassmannian(3, 3), InputError);
}

TEST_CASE("veronese cone point: (x+y)^2 in the monomial basis") {
    const auto spec = VarietySpec::veronese(2, 2);
    const AmbientPoint p = cone_point(spec, ConeParam::real(vec({1, 1})));
    CHECK(p.re[0] == doctest::Approx(1));  // x^2
    CHECK(p.re[1] == doctest::Approx(2));  // xy
    CHECK(p.re[2] == doctest::Approx(1));  // y^2
}

TEST_CASE("segre cone point: basis slot of e0 (x) e1") {
    const auto spec = VarietySpec::segre({2, 2});
    const AmbientPoint p = cone_point(spec, ConeParam::real(vec({1, 0, 0, 1})));
    CHECK(p.re[0] == doctest::Approx(0));
    CHECK(p.re[1] == doctest::Approx(1));  // row-major slot (0,1)
    CHECK(p.re[2] == doctest::Approx(0));
    CHECK(p.re[3] == doctest::Approx(0));
}

TEST_CASE("the xy identity: quarter of (x+y)^2 minus quarter of (x-y)^2") {
    const auto spec = VarietySpec::veronese(2, 2);
    const AmbientPoint plus = cone_point(spec, ConeParam::real(vec({1, 1})));
    const AmbientPoint minus = cone_point(spec, ConeParam::real(vec({1, -1})));
    CHECK(minus.re[0] == doctest::Approx(1));
    CHECK(minus.re[1] == doctest::Approx(-2));
    CHECK(minus.re[2] == doctest::Approx(1));

    Decomposition dec;
    dec.spec = spec;
    dec.field = Field::Real;
    dec.terms.push_back({0.25, 0.0, ConeParam::real(vec({1, 1}))});
    dec.terms.push_back({-0.25, 0.0, ConeParam::real(vec({1, -1}))});
    const AmbientPoint xy = evaluate(dec);
    CHECK(xy.re[0] == doctest::Approx(0));
    CHECK(xy.re[1] == doctest::Approx(1));
    CHECK(xy.re[2] == doctest::Approx(0));
}

TEST_CASE("evaluate edge cases") {
    const auto spec = VarietySpec::veronese(2, 2);

    Decomposition empty;
    empty.spec = spec;
    empty.field = Field::Real;
    const AmbientPoint zero = evaluate(empty);
    CHECK(zero.re.isZero(0.0));

    Decomposition one;
    one.spec = spec;
    one.field = Field::Real;
    one.terms.push_back({1.0, 0.0, ConeParam::real(vec({2, 3}))});
    const AmbientPoint pt = evaluate(one);
    const AmbientPoint direct = cone_point(spec, ConeParam::real(vec({2, 3})));
    CHECK((pt.re - direct.re).norm() == doctest::Approx(0));

    Decomposition mixed;
    mixed.spec = spec;
    mixed.field = Field::Real;
    DecompositionTerm t;
    t.param = ConeParam::complex(vec({1, 0}), vec({0, 1}));
    mixed.terms.push_back(t);
    CHECK_THROWS_AS(evaluate(mixed), InputError);

    Decomposition zero_term;
    zero_term.spec = spec;
    zero_term.field = Field::Real;
    zero_term.terms.push_back({1.0, 0.0, ConeParam::real(vec({0, 0}))});
    CHECK_THROWS_AS(evaluate(zero_term), InputError);
}

TEST_CASE("cone_point rejects wrong parameter length") {
    const auto spec = VarietySpec::veronese(3, 2);
    CHECK_THROWS_AS(cone_point(spec, ConeParam::real(vec({1, 2}))), InputError);
}

TEST_CASE("veronese(2,1) jacobian is the identity") {
    const auto spec = VarietySpec::veronese(2, 1);
    const Eigen::MatrixXd jac = cone_jacobian_real(spec, vec({3, -7}));
    CHECK(jac.rows() == 2);
    CHECK(jac.cols() == 2);
    CHECK((jac - Eigen::MatrixXd::Identity(2, 2)).norm() == doctest::Approx(0));
}

TEST_CASE("veronese(2,2) jacobian at (1,0)") {
    const auto spec = VarietySpec::veronese(2, 2);
    const Eigen::MatrixXd jac = cone_jacobian_real(spec, vec({1, 0}));
    // d/dl1 (l^2) = 2x*x = 2x^2, d/dl2 = 2x*y = 2xy
    CHECK(jac(0, 0) == doctest::Approx(2));
    CHECK(jac(1, 0) == doctest::Approx(0));
    CHECK(jac(2, 0) == doctest::Approx(0));
    CHECK(jac(0, 1) == doctest::Approx(0));
    CHECK(jac(1, 1) == doctest::Approx(2));
    CHECK(jac(2, 1) == doctest::Approx(0));
}

TEST_CASE("jacobian matches central finite differences on every family") {
    const std::vector<VarietySpec> specs{
        VarietySpec::veronese(3, 4), VarietySpec::segre({2, 3, 2}),
        VarietySpec::grassmannian(2, 4), VarietySpec::grassmannian(3, 6),
        VarietySpec::power_of_forms(2, 2, 3)};
    Rng rng(11);
    for (const auto& spec : specs) {
        const ConeParam param = random_real_param(spec, rng);
        const Eigen::MatrixXd jac = cone_jacobian_real(spec, param.re);
        const double h = 1e-5;
        double max_rel = 0.0;
        for (Eigen::Index j = 0; j < spec.param_dim(); ++j) {
            Eigen::VectorXd lo = param.re, hi = param.re;
            hi[j] += h;
            lo[j] -= h;
            const AmbientPoint phi = cone_point(spec, ConeParam::real(hi));
            const AmbientPoint plo = cone_point(spec, ConeParam::real(lo));
            const Eigen::VectorXd fd = (phi.re - plo.re) / (2 * h);
            const double scale = std::max(1.0, jac.col(j).norm());
            max_rel = std::max(max_rel, (fd - jac.col(j)).norm() / scale);
        }
        CHECK(max_rel <= 1e-6);
    }
}

TEST_CASE("homogeneity weight on random params and scalars") {
    const std::vector<VarietySpec> specs{
        VarietySpec::veronese(2, 3), VarietySpec::veronese(3, 2),
        VarietySpec::segre({2, 2, 2}), VarietySpec::grassmannian(2, 4),
        VarietySpec::power_of_forms(2, 2, 2)};
    Rng rng(7);
    for (const auto& spec : specs) {
        const int w = spec.homogeneity_weight();
        for (int trial = 0; trial < 5; ++trial) {
            const ConeParam param = random_real_param(spec, rng);
            const double t = rng.normal() + 2.5;  // keep away from zero
            const AmbientPoint base = cone_point(spec, param);
            ConeParam scaled = param;
            scaled.re *= t;
            const AmbientPoint scaled_pt = cone_point(spec, scaled);
            const double factor = std::pow(t, w);
            CHECK((scaled_pt.re - factor * base.re).norm() <=
                  1e-9 * std::max(1.0, std::abs(factor) * base.re.norm()));
        }
        // complex scaling too
        const ConeParam param = random_real_param(spec, rng);
        Eigen::VectorXd zero = Eigen::VectorXd::Zero(spec.param_dim());
        const ConeParam cparam = ConeParam::complex(param.re, zero);
        const std::complex<double> t(0.7, 1.3);
        Eigen::VectorXcd scaled_values = t * cparam.as_complex();
        const ConeParam scaled =
            ConeParam::complex(scaled_values.real(), scaled_values.imag());
        const std::complex<double> factor = std::pow(t, w);
        const Eigen::VectorXcd lhs = cone_point(spec, scaled).as_complex();
        const Eigen::VectorXcd rhs = factor * cone_point(spec, cparam).as_complex();
        CHECK((lhs - rhs).norm() <= 1e-9 * std::max(1.0, rhs.norm()));
    }
}

TEST_CASE("power_of_forms(n,1,k) coincides with veronese(n,k)") {
    const auto pf = VarietySpec::power_of_forms(3, 1, 4);
    const auto ver = VarietySpec::veronese(3, 4);
    CHECK(pf.ambient_affine_dim() == ver.ambient_affine_dim());
    CHECK(pf.param_dim() == ver.param_dim());
    Rng rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        Eigen::VectorXd v(3);
        for (int i = 0; i < 3; ++i) v[i] = rng.normal();
        const AmbientPoint a = cone_point(pf, ConeParam::real(v));
        const AmbientPoint b = cone_point(ver, ConeParam::real(v));
        CHECK((a.re - b.re).norm() == doctest::Approx(0));
    }
}

TEST_CASE("pluecker coordinates satisfy the quadratic relation exactly") {
    const auto spec = VarietySpec::grassmannian(2, 4);
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rational> param(8);
        for (auto& v : param) {
            v = Rational(rng.uniform_int(-9, 9), 1 + rng.uniform_int(0, 4));
            v.canonicalize();
        }
        const std::vector<Rational> p = kernels::cone_point<Rational>(spec, param);
        // subsets in lex order: 01, 02, 03, 12, 13, 23
        const Rational rel = p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
        CHECK(rel == 0);
    }
}

TEST_CASE("cone_point at zero is zero but decomposition terms must be nonzero") {
    const auto spec = VarietySpec::veronese(2, 3);
    const AmbientPoint z = cone_point(spec, ConeParam::real(vec({0, 0})));
    CHECK(z.re.isZero(0.0));  // plain evaluation is allowed
}
