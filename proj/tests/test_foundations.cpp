#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "xrank/combinatorics.hpp"
#include "xrank/exact_linalg.hpp"
#include "xrank/polyroots.hpp"
#include "xrank/rng.hpp"
#include "xrank/sturm.hpp"

using namespace xrank;

TEST_CASE("binomial convention") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(8, 2) == 28);
    CHECK(binom(11, 3) == 165);
    CHECK(binom(14, 4) == 1001);
    CHECK(binom(4, 0) == 1);
    CHECK(binom(0, 0) == 1);
    // zero below the diagonal and for negative arguments
    CHECK(binom(2, 5) == 0);
    CHECK(binom(-1, 0) == 0);
    CHECK(binom(-3, 2) == 0);
}

TEST_CASE("monomial order is lexicographically decreasing") {
    const auto exps = monomial_exponents(2, 2);
    REQUIRE(exps.size() == 3);
    CHECK(exps[0] == std::vector<int>{2, 0});
    CHECK(exps[1] == std::vector<int>{1, 1});
    CHECK(exps[2] == std::vector<int>{0, 2});

    const auto e3 = monomial_exponents(3, 4);
    CHECK(static_cast<std::int64_t>(e3.size()) == monomial_count(3, 4));
    for (size_t i = 0; i + 1 < e3.size(); ++i) CHECK(e3[i] > e3[i + 1]);  // strictly decreasing
}

TEST_CASE("monomial_index inverts enumeration") {
    for (int n : {2, 3, 4}) {
        for (int d : {1, 2, 3, 5}) {
            const auto exps = monomial_exponents(n, d);
            for (size_t i = 0; i < exps.size(); ++i)
                CHECK(monomial_index(exps[i], d) == static_cast<std::int64_t>(i));
        }
    }
}

TEST_CASE("k-subsets are increasing and lex ordered") {
    const auto subs = k_subsets(2, 4);
    REQUIRE(subs.size() == 6);
    CHECK(subs[0] == std::vector<int>{0, 1});
    CHECK(subs[1] == std::vector<int>{0, 2});
    CHECK(subs[5] == std::vector<int>{2, 3});
}

TEST_CASE("rng substreams are deterministic and independent") {
    Rng a = Rng::substream(42, 7);
    Rng b = Rng::substream(42, 7);
    Rng c = Rng::substream(42, 8);
    bool all_equal = true, any_diff = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64(), vb = b.next_u64(), vc = c.next_u64();
        all_equal = all_equal && va == vb;
        any_diff = any_diff || va != vc;
    }
    CHECK(all_equal);
    CHECK(any_diff);
}

TEST_CASE("rng uniform_int stays in range") {
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        const int v = rng.uniform_int(-10, 10);
        CHECK(v >= -10);
        CHECK(v <= 10);
    }
}

TEST_CASE("bareiss rank on known matrices") {
    IntMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id(static_cast<size_t>(i), static_cast<size_t>(i)) = 1;
    CHECK(bareiss_rank(id) == 3);

    // rank-1 outer product
    IntMatrix outer(3, 4);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 4; ++j)
            outer(i, j) = static_cast<long>((i + 1) * (j + 2));
    CHECK(bareiss_rank(outer) == 1);

    IntMatrix zero(4, 5);
    CHECK(bareiss_rank(zero) == 0);

    // two independent rows plus their sum
    IntMatrix dep(3, 3);
    long vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {5, 7, 9}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) dep(i, j) = vals[i][j];
    CHECK(bareiss_rank(dep) == 2);
}

TEST_CASE("bareiss rank agrees with float rank on random integer matrices") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const size_t rows = static_cast<size_t>(rng.uniform_int(2, 8));
        const size_t cols = static_cast<size_t>(rng.uniform_int(2, 8));
        const size_t inner = static_cast<size_t>(rng.uniform_int(1, 4));
        // A = B * C with inner dimension `inner`, so rank <= inner
        IntMatrix a(rows, cols);
        std::vector<std::vector<long>> b(rows, std::vector<long>(inner));
        std::vector<std::vector<long>> c(inner, std::vector<long>(cols));
        for (auto& row : b)
            for (auto& v : row) v = rng.uniform_int(-5, 5);
        for (auto& row : c)
            for (auto& v : row) v = rng.uniform_int(-5, 5);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                long acc = 0;
                for (size_t k = 0; k < inner; ++k) acc += b[i][k] * c[k][j];
                a(i, j) = acc;
            }
        CHECK(bareiss_rank(std::move(a)) <= inner);
    }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    RationalMatrix m(2, 4);
    long vals[2][4] = {{1, 2, 3, 4}, {2, 4, 1, 0}};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 4; ++j) m(i, j) = vals[i][j];
    const RationalMatrix basis = nullspace(m);
    CHECK(basis.cols() == 2);
    for (size_t k = 0; k < basis.cols(); ++k) {
        for (size_t i = 0; i < m.rows(); ++i) {
            Rational acc = 0;
            for (size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * basis(j, k);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("solve_exact solves and detects inconsistency") {
    RationalMatrix a(3, 2);
    a(0, 0) = 1; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = -1;
    a(2, 0) = 2; a(2, 1) = 0;
    const auto sol = solve_exact(a, {Rational(3), Rational(1), Rational(4)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK((*sol)[1] == 1);

    const auto bad = solve_exact(a, {Rational(3), Rational(1), Rational(5)});
    CHECK(!bad.has_value());
}

TEST_CASE("sturm counts real roots exactly") {
    // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
    QPoly p{Rational(-6), Rational(11), Rational(-6), Rational(1)};
    CHECK(count_real_roots(p) == 3);
    CHECK(count_real_roots_in(p, Rational(0), Rational(2)) == 2);
    CHECK(count_real_roots_in(p, Rational(2), Rational(10)) == 1);

    // t^2 + 1: no real roots
    CHECK(count_real_roots(QPoly{Rational(1), Rational(0), Rational(1)}) == 0);

    // t^2 (double root): one distinct real root
    CHECK(count_real_roots(QPoly{Rational(0), Rational(0), Rational(1)}) == 1);

    // t^4 - 1: two real roots
    CHECK(count_real_roots(QPoly{Rational(-1), Rational(0), Rational(0), Rational(0),
                                 Rational(1)}) == 2);
}

TEST_CASE("square_free detection") {
    CHECK(qpoly::square_free(QPoly{Rational(-1), Rational(0), Rational(1)}));  // t^2 - 1
    CHECK(!qpoly::square_free(QPoly{Rational(1), Rational(2), Rational(1)}));  // (t+1)^2
    CHECK(qpoly::square_free(QPoly{Rational(1), Rational(0), Rational(1)}));   // t^2 + 1
}

TEST_CASE("isolation separates the roots") {
    // (t+2)(t)(t-5) = t^3 - 3t^2 - 10t
    QPoly p{Rational(0), Rational(-10), Rational(-3), Rational(1)};
    auto intervals = isolate_real_roots(p);
    REQUIRE(intervals.size() == 3);
    const Rational roots[3] = {Rational(-2), Rational(0), Rational(5)};
    for (size_t i = 0; i < 3; ++i) {
        CHECK(intervals[i].first < roots[i]);
        CHECK(roots[i] <= intervals[i].second);
    }
    auto tight = refine_root(p, intervals[2], Rational(1, 1000));
    CHECK(tight.second - tight.first <= Rational(1, 1000));
    CHECK(tight.first < 5);
    CHECK(Rational(5) <= tight.second);
}

TEST_CASE("poly_roots finds all roots of a cubic") {
    // (t-1)(t-2)(t-3)
    QPoly p{Rational(-6), Rational(11), Rational(-6), Rational(1)};
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 3);
    std::multiset<int> found;
    for (const auto& z : roots) {
        CHECK(std::abs(z.imag()) < 1e-9);
        found.insert(static_cast<int>(std::lround(z.real())));
        CHECK(std::abs(z.real() - std::lround(z.real())) < 1e-9);
    }
    CHECK(found == std::multiset<int>{1, 2, 3});
}

TEST_CASE("polish_root reaches far beyond double precision") {
    // t^2 - 2: polish sqrt(2)
    QPoly p{Rational(-2), Rational(0), Rational(1)};
    MpComplex z = polish_root(p, {1.4, 0.0}, 256);
    mpf_class err = z.re * z.re - 2;
    mpf_class tol(1, 256);
    tol >>= 200;
    CHECK(abs(err) < tol);
}
