#pragma once

#include <cstdint>
#include <optional>

#include "xrank/variety.hpp"

namespace xrank {

struct FitOptions {
    int max_iterations = 500;
    int restarts = 10;
    double target_relative_residual = 1e-8;
    // Levenberg-Marquardt damping schedule: start value, factor applied on a
    // rejected step, divisor on an accepted one.
    double lambda_init = 1e-3;
    double lambda_up = 10.0;
    double lambda_down = 10.0;
    std::uint64_t seed = 0;
    int split_anchor_retries = 5;

    void validate() const;
};

struct FitResult {
    bool success = false;
    Decomposition decomposition;       // best attempt, also on failure
    double relative_residual = 1.0;    // re-verified by independent evaluation
    int restarts_used = 0;
};

// Least-squares projection onto the image of the r-fold secant map:
// minimize || target - sum_i c_i cone_point(theta_i) || over r parameter
// blocks by damped Gauss-Newton with multi-start. Failure reports the best
// residual and signals either rank(target) > r or optimizer failure; the
// two cannot be told apart numerically.
FitResult fit_rank(const VarietySpec& spec, const AmbientPoint& target, int r, Field field,
                   const FitOptions& opts);

// Same, but the first attempt starts from `init` instead of a random draw.
FitResult fit_rank_from(const VarietySpec& spec, const AmbientPoint& target, int r, Field field,
                        const FitOptions& opts, const Decomposition& init);

struct SplitReport {
    bool success = false;
    AmbientPoint input;
    Decomposition anchor;     // random generic point with known decomposition
    Decomposition remainder;  // fit of the difference (or scaled variant)
    Decomposition combined;
    int length = 0;
    double relative_residual = 1.0;
    int attempts = 0;
    std::uint64_t seed = 0;
};

// Writes target = (target - p) + p with p a random point of rank r_gen:
// both summands are generic, so each carries a rank-r_gen decomposition and
// the combination has at most 2 r_gen terms. Retries with a fresh anchor on
// fit failure; failure signals optimizer inadequacy, never a counterexample.
// When r_gen is not supplied it is resolved from the closed forms or a
// Terracini scan.
SplitReport two_point_split_complex(const VarietySpec& spec, const AmbientPoint& target,
                                    const FitOptions& opts,
                                    std::optional<int> r_gen = std::nullopt);

// Real variant: pick a random real anchor p of rank r0 with known real
// decomposition; for a small eps, eps*target + p stays in a neighborhood
// where rank r0 holds, so target = (1/eps)((eps*target + p) - p) with at
// most 2 r0 real terms (negative coefficients permitted). eps halves on
// failure down to 1e-8.
SplitReport two_point_split_real(const VarietySpec& spec, const AmbientPoint& target, int r0,
                                 const FitOptions& opts);

}  // namespace xrank
