#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xrank/dimension.hpp"
#include "xrank/variety.hpp"

namespace xrank {

enum class BoundLabel {
    TwiceGeneric,
    TwiceGenericMinusOne,
    AmbientMinusDim,
    Proposition,
    Jelisiejew,
    BallicoDeParis,
    Trivial,
};

std::string bound_label_name(BoundLabel label);

struct BoundEntry {
    BoundLabel label;
    std::int64_t value = 0;
    std::string source;  // how the number was obtained
};

// Every maximum-rank bound applicable to one variety, and their minimum.
struct BoundReport {
    VarietySpec spec;
    int r_gen = 0;
    std::vector<BoundEntry> entries;
    std::int64_t best = 0;
};

// Maximum rank is at most twice the generic rank.
std::int64_t bound_twice_generic(std::int64_t r_gen);

// Refinement when the secant variety one below the filling one is a
// hypersurface: 2 * r_gen - 1. The caller is responsible for having
// established the hypersurface condition.
std::int64_t bound_hypersurface_refinement(std::int64_t r_gen);

// r_max <= (ambient projective dim) + 1 - dim X.
std::int64_t bound_ambient_minus_dim(std::int64_t ambient_projective_dim,
                                     std::int64_t variety_dim);

// r_max <= max(s, (c+1) k), where sigma_k has codimension c and s is a
// caller-supplied maximum rank on sigma_k.
std::int64_t bound_proposition(std::int64_t k, std::int64_t c, std::int64_t s);

// Literature bounds on maximum Waring rank (extended binomial convention:
// binom(a,b) = 0 below the diagonal or for negative a).
std::int64_t bound_jelisiejew(int n_vars, int degree);
std::int64_t bound_ballico_deparis(int n_vars, int degree);

// 2 * ceil(binom(n+d-1, n-1) / n), overridden by the four exceptional
// values for degree >= 3. Quadrics are out of range (classically
// r_max(n,2) = n, reported separately).
std::int64_t waring_max_bound(int n_vars, int degree);

// The known exact maximum Waring ranks: (3,3) -> 5, (3,4) -> 7, (4,3) -> 7.
std::optional<int> known_waring_max(int n_vars, int degree);

struct WaringTableRow {
    int n = 0, d = 0;
    std::int64_t r_gen = 0;
    std::int64_t r_max_jelisiejew = 0;
    std::int64_t r_max_ballico_deparis = 0;
    std::int64_t r_max_star = 0;  // 2 r_gen, or the exceptional override
    std::optional<int> r_max_known;
};

// Comparison rows for maximum-Waring-rank bounds, degree >= 3.
std::vector<WaringTableRow> emit_waring_table(const std::vector<int>& n_values,
                                              const std::vector<int>& d_values);

std::string format_waring_table(const std::vector<WaringTableRow>& rows);

struct BinaryFormFacts {
    int d = 0;
    int r_max = 0;      // maximum rank, real or complex: d
    int r_gen = 0;      // ceil((d+1)/2)
    int sharp_bound = 0;  // 2 r_gen - 2 for even d, 2 r_gen - 1 for odd d
};

BinaryFormFacts binary_form_facts(int degree);

// Assemble every applicable bound for one spec. The generic rank is taken
// from the closed form where one exists, otherwise from a Terracini scan.
BoundReport bound_report(const VarietySpec& spec, int trials = 5,
                         RankMode mode = RankMode::ExactRational, std::uint64_t seed = 0);

}  // namespace xrank
