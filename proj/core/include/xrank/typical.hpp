#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "xrank/decompose.hpp"
#include "xrank/variety.hpp"

namespace xrank {

// Histogram of certified real ranks over seeded random samples. Only
// families with an exact real-rank classifier contribute (binary forms via
// the Sylvester oracle, 2x2x2 tensors via the hyperdeterminant sign), so a
// histogram entry is never an optimizer artifact.
struct TypicalRankReport {
    std::string family;
    int samples = 0;
    std::uint64_t seed = 0;
    double threshold = 0.01;
    std::map<int, int> histogram;
    std::vector<int> observed_typical;  // ranks with frequency above threshold
    int min_typical = 0;
    int r_gen_complex = 0;
    int boundary_rejects = 0;
};

// Random real binary d-forms (standard normal coefficients, rationalized),
// exact real rank per sample.
TypicalRankReport sample_binary_typical(int d, int samples, std::uint64_t seed,
                                        double threshold = 0.01);

// Cayley hyperdeterminant of a 2x2x2 tensor, row-major coefficients
// t[4i + 2j + k]. Positive sign means real rank 2, negative real rank 3,
// zero is the boundary where this test abstains.
double hyperdeterminant_222(const std::array<double, 8>& t);

TypicalRankReport sample_222_typical(int samples, std::uint64_t seed, double threshold = 0.01);

struct R0BoundReport {
    VarietySpec spec;
    int r0 = 0;
    int samples = 0;
    int successes = 0;
    int max_length = 0;
    double max_residual = 0.0;
    std::vector<std::uint64_t> failure_seeds;  // optimizer failures, never counterexamples
};

// Real-split each sampled point (Gaussian draws; for Veronese(2,d) the
// sample list is fronted by the adversarial x^{d-1} y, for the 2x2x2 format
// draws are restricted to negative hyperdeterminant) and record that every
// split has at most 2 r0 terms.
R0BoundReport verify_r0_bound(const VarietySpec& spec, int r0, int samples, std::uint64_t seed,
                              const FitOptions& opts = {});

}  // namespace xrank
