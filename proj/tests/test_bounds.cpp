#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "xrank/bounds.hpp"

using namespace xrank;

namespace {

// both published comparison tables, frozen row by row:
// n, d, r_gen, r_max^J, r_max^BDP, r_max^*, known r_max (0 = none)
struct Row {
    int n, d;
    std::int64_t r_gen, j, bdp, star;
    int known;
};
const Row published[] = {
    {3, 3, 4, 5, 5, 8, 5},       {3, 4, 6, 9, 8, 11, 7},     {3, 5, 7, 14, 13, 14, 0},
    {3, 6, 10, 20, 19, 20, 0},   {3, 7, 12, 27, 26, 24, 0},  {3, 8, 15, 35, 34, 30, 0},
    {4, 3, 5, 9, 9, 10, 7},      {4, 4, 10, 18, 17, 19, 0},  {4, 5, 14, 32, 30, 28, 0},
    {4, 6, 21, 52, 49, 42, 0},   {4, 7, 30, 79, 75, 60, 0},  {4, 8, 42, 114, 109, 84, 0},
};

}  // namespace

TEST_CASE("twice-generic bound") {
    CHECK(bound_twice_generic(12) == 24);  // degree-7 ternary forms
    CHECK(bound_twice_generic(1) == 2);
    CHECK_THROWS_AS(bound_twice_generic(0), InputError);

    // binary x ... x binary with nine factors beats the power-of-two bound
    const std::int64_t r_gen = segre_generic_rank(std::vector<int>(9, 2)).r_gen;
    CHECK(r_gen == 52);  // ceil(512/10)
    CHECK(bound_twice_generic(r_gen) == 104);
    CHECK(bound_twice_generic(r_gen) < (1 << 7));
}

TEST_CASE("hypersurface refinement bound") {
    CHECK(bound_hypersurface_refinement(6) == 11);   // ternary quartics
    CHECK(bound_hypersurface_refinement(15) == 29);  // five-variable quartics
    for (int d = 2; d <= 10; d += 2) {
        const int r_gen = (d + 2) / 2;
        CHECK(bound_hypersurface_refinement(r_gen) == d + 1);  // one above the true max d
    }
}

TEST_CASE("ambient minus dimension bound") {
    CHECK(bound_ambient_minus_dim(9, 2) == 8);   // ternary cubics
    CHECK(bound_ambient_minus_dim(5, 5) == 1);   // X = the whole space
    CHECK(bound_ambient_minus_dim(7, 3) == 5);   // 2x2x2
    CHECK_THROWS_AS(bound_ambient_minus_dim(3, 4), InputError);
}

TEST_CASE("proposition bound and its two extreme cases") {
    CHECK(bound_proposition(2, 3, 5) == 8);
    // k = s = 1 recovers the ambient-minus-dim bound
    for (int n = 3; n <= 9; ++n)
        for (int dim_x = 0; dim_x <= n; ++dim_x)
            CHECK(bound_proposition(1, n - dim_x, 1) == bound_ambient_minus_dim(n, dim_x));
    // c = 1, k = r_gen - 1, s = 2k + 1 recovers the hypersurface refinement
    for (int r_gen = 2; r_gen <= 30; ++r_gen) {
        const std::int64_t k = r_gen - 1;
        CHECK(bound_proposition(k, 1, 2 * k + 1) == bound_hypersurface_refinement(r_gen));
    }
}

TEST_CASE("jelisiejew and ballico-de paris formulas against the tables") {
    CHECK(bound_jelisiejew(3, 5) == 14);
    CHECK(bound_ballico_deparis(4, 3) == 9);
    CHECK(bound_ballico_deparis(3, 8) == 34);
    for (const auto& row : published) {
        CHECK(bound_jelisiejew(row.n, row.d) == row.j);
        CHECK(bound_ballico_deparis(row.n, row.d) == row.bdp);
    }
}

TEST_CASE("waring max bound with the exceptional overrides") {
    CHECK(waring_max_bound(3, 6) == 20);
    CHECK(waring_max_bound(4, 4) == 19);
    CHECK(waring_max_bound(5, 3) == 15);
    CHECK(waring_max_bound(3, 4) == 11);
    CHECK(waring_max_bound(5, 4) == 29);
    CHECK_THROWS_AS(waring_max_bound(3, 2), InputError);
}

TEST_CASE("waring max bound is the twice-generic bound away from the exceptions") {
    for (int n = 2; n <= 6; ++n) {
        for (int d = 3; d <= 9; ++d) {
            const auto gen = waring_generic_rank(n, d);
            const bool exceptional_quartic_like = gen.exceptional;
            if (exceptional_quartic_like)
                CHECK(waring_max_bound(n, d) == bound_hypersurface_refinement(gen.r_gen));
            else
                CHECK(waring_max_bound(n, d) == bound_twice_generic(gen.r_gen));
        }
    }
}

TEST_CASE("table reproduction, cell for cell") {
    const auto rows = emit_waring_table({3, 4}, {3, 4, 5, 6, 7, 8});
    REQUIRE(rows.size() == 12);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == published[i].n);
        CHECK(rows[i].d == published[i].d);
        CHECK(rows[i].r_gen == published[i].r_gen);
        CHECK(rows[i].r_max_jelisiejew == published[i].j);
        CHECK(rows[i].r_max_ballico_deparis == published[i].bdp);
        CHECK(rows[i].r_max_star == published[i].star);
        if (published[i].known != 0) {
            REQUIRE(rows[i].r_max_known.has_value());
            CHECK(*rows[i].r_max_known == published[i].known);
        } else {
            CHECK(!rows[i].r_max_known.has_value());
        }
    }
}

TEST_CASE("every published bound sits at or above the generic rank, known maxima below") {
    for (const auto& row : published) {
        CHECK(row.r_gen <= row.j);
        CHECK(row.r_gen <= row.bdp);
        CHECK(row.r_gen <= row.star);
        if (row.known != 0) {
            CHECK(row.known <= row.j);
            CHECK(row.known <= row.bdp);
            CHECK(row.known <= row.star);
        }
    }
}

TEST_CASE("asymptotic crossover at n = 3: twice-generic wins exactly from degree 7") {
    for (int d = 3; d <= 8; ++d) {
        const std::int64_t twice = 2 * waring_generic_rank(3, d).r_gen;
        const std::int64_t bdp = bound_ballico_deparis(3, d);
        CHECK((twice < bdp) == (d >= 7));
        if (d <= 4) CHECK(twice > bdp);
    }
}

TEST_CASE("binary form facts") {
    const auto f6 = binary_form_facts(6);
    CHECK(f6.r_max == 6);
    CHECK(f6.r_gen == 4);
    CHECK(f6.sharp_bound == 6);

    const auto f7 = binary_form_facts(7);
    CHECK(f7.r_max == 7);
    CHECK(f7.r_gen == 4);
    CHECK(f7.sharp_bound == 7);

    const auto f1 = binary_form_facts(1);
    CHECK(f1.r_max == 1);
    CHECK(f1.r_gen == 1);
}

TEST_CASE("bound report collects applicable bounds with the minimum") {
    const auto report = bound_report(VarietySpec::veronese(3, 5));
    CHECK(report.r_gen == 7);
    bool saw_twice = false, saw_j = false, saw_bdp = false, saw_ambient = false;
    for (const auto& e : report.entries) {
        CHECK(e.value >= report.r_gen);
        if (e.label == BoundLabel::TwiceGeneric) {
            saw_twice = true;
            CHECK(e.value == 14);
        }
        if (e.label == BoundLabel::Jelisiejew) {
            saw_j = true;
            CHECK(e.value == 14);
        }
        if (e.label == BoundLabel::BallicoDeParis) {
            saw_bdp = true;
            CHECK(e.value == 13);
        }
        if (e.label == BoundLabel::AmbientMinusDim) {
            saw_ambient = true;
            CHECK(e.value == 19);  // 20 + 1 - 2
        }
        CHECK(report.best <= e.value);
    }
    CHECK(saw_twice);
    CHECK(saw_j);
    CHECK(saw_bdp);
    CHECK(saw_ambient);
    CHECK(report.best == 13);

    const auto seg = bound_report(VarietySpec::segre({2, 2, 2}));
    CHECK(seg.r_gen == 2);
    for (const auto& e : seg.entries) {
        if (e.label == BoundLabel::AmbientMinusDim) CHECK(e.value == 5);  // 7 + 1 - 3
    }
}
