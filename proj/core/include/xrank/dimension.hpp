#pragma once

#include <cstdint>

#include "xrank/variety.hpp"

namespace xrank {

enum class RankMode { ExactRational, FloatSVD };
enum class RankMethod { Terracini, ClosedForm };

std::string rank_mode_name(RankMode m);

// Observed affine dimension of the r-th secant variety: the rank of r
// stacked cone Jacobians at independently random parameters, maximized over
// trials.
struct TerraciniEstimate {
    VarietySpec spec;
    int r = 0;
    std::int64_t observed_rank = 0;
    int trials = 0;
    RankMode mode = RankMode::ExactRational;
    bool fills_ambient = false;
};

struct GenericRankResult {
    VarietySpec spec;
    int r_gen = 0;
    RankMethod method = RankMethod::Terracini;
    // For Terracini results: the observed generic rank exceeds the naive
    // dimension count. For the Veronese closed form: one of the five
    // Alexander-Hirschowitz exceptional families.
    bool exceptional = false;
    // sigma_{r_gen - 1} has affine dimension ambient - 1.
    bool hypersurface_below = false;
};

// Affine dimension of the tangent space at a random smooth point of the
// cone, computed (not hardcoded) as the single-point Jacobian rank.
std::int64_t generic_tangent_dim(const VarietySpec& spec, std::uint64_t seed = 0);

// dim X as a projective variety: generic_tangent_dim - 1.
std::int64_t variety_projective_dim(const VarietySpec& spec, std::uint64_t seed = 0);

// ExactRational mode draws integer parameters uniformly from [-10, 10] per
// coordinate (rejecting all-zero blocks) and takes exact fraction-free
// ranks. FloatSVD draws standard normals and counts singular values above
// 1e-8 * sigma_max. Trials use substreams of `seed`.
TerraciniEstimate terracini_dimension(const VarietySpec& spec, int r, int trials,
                                      RankMode mode = RankMode::ExactRational,
                                      std::uint64_t seed = 0);

// Least r whose secant fills the ambient space, by Terracini scan starting
// at the naive estimate. Throws InputError for a degenerate variety.
GenericRankResult generic_rank_terracini(const VarietySpec& spec, int trials = 5,
                                         RankMode mode = RankMode::ExactRational,
                                         std::uint64_t seed = 0);

// Alexander-Hirschowitz generic Waring rank for degree-d forms in n
// variables, with the five exceptional families.
GenericRankResult waring_generic_rank(int n_vars, int degree);

// Closed forms for 2 x ... x 2 and n x n x n tensor formats; every other
// format falls back to the Terracini scan.
GenericRankResult segre_generic_rank(const std::vector<int>& formats, int trials = 5,
                                     RankMode mode = RankMode::ExactRational,
                                     std::uint64_t seed = 0);

// Number of kth powers of d-forms that suffice for a generic (k*d)-form in
// n_vars variables: k^(n_vars - 1).
std::int64_t power_forms_generic_count(int n_vars, int degree, int k);

// Whether binom(n+d-1, n-1) == 1 (mod n): the criterion for
// sigma_{r_gen - 1} of the Veronese to be a hypersurface away from the
// exceptional families.
bool hypersurface_condition(int n_vars, int degree);

}  // namespace xrank
