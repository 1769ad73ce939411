#include "xrank/typical.hpp"

#include <algorithm>
#include <cmath>

#include "xrank/binary.hpp"
#include "xrank/dimension.hpp"
#include "xrank/rng.hpp"

namespace xrank {

namespace {

void finalize_report(TypicalRankReport& report, int counted) {
    for (const auto& [rank, count] : report.histogram) {
        if (counted > 0 && static_cast<double>(count) / counted > report.threshold)
            report.observed_typical.push_back(rank);
    }
    report.min_typical = report.observed_typical.empty() ? 0 : report.observed_typical.front();
}

}  // namespace

TypicalRankReport sample_binary_typical(int d, int samples, std::uint64_t seed, double threshold) {
    if (d < 2) throw InputError("sample_binary_typical: need d >= 2");
    if (samples < 1) throw InputError("sample_binary_typical: need samples >= 1");

    TypicalRankReport report;
    report.family = "binary_forms_d" + std::to_string(d);
    report.samples = samples;
    report.seed = seed;
    report.threshold = threshold;
    report.r_gen_complex = static_cast<int>(ceil_div(d + 1, 2));

    int counted = 0;
    for (int s = 0; s < samples; ++s) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(s));
        std::vector<Rational> coeffs(static_cast<size_t>(d) + 1);
        bool nonzero = false;
        for (auto& c : coeffs) {
            const double x = rng.normal();
            c = rational_from_double(x);
            nonzero = nonzero || x != 0.0;
        }
        if (!nonzero) {
            ++report.boundary_rejects;
            continue;
        }
        const BinaryForm f(d, std::move(coeffs));
        const RankCertificate cert = real_rank(f);
        ++report.histogram[cert.rank];
        ++counted;
    }
    finalize_report(report, counted);
    return report;
}

double hyperdeterminant_222(const std::array<double, 8>& t) {
    const double t000 = t[0], t001 = t[1], t010 = t[2], t011 = t[3];
    const double t100 = t[4], t101 = t[5], t110 = t[6], t111 = t[7];
    const double squares = t000 * t000 * t111 * t111 + t001 * t001 * t110 * t110 +
                           t010 * t010 * t101 * t101 + t011 * t011 * t100 * t100;
    const double pairs = t000 * t001 * t110 * t111 + t000 * t010 * t101 * t111 +
                         t000 * t011 * t100 * t111 + t001 * t010 * t101 * t110 +
                         t001 * t011 * t110 * t100 + t010 * t011 * t101 * t100;
    const double quads = t000 * t011 * t101 * t110 + t001 * t010 * t100 * t111;
    return squares - 2.0 * pairs + 4.0 * quads;
}

TypicalRankReport sample_222_typical(int samples, std::uint64_t seed, double threshold) {
    if (samples < 1) throw InputError("sample_222_typical: need samples >= 1");

    TypicalRankReport report;
    report.family = "segre_2x2x2";
    report.samples = samples;
    report.seed = seed;
    report.threshold = threshold;
    report.r_gen_complex = segre_generic_rank({2, 2, 2}).r_gen;

    int counted = 0;
    for (int s = 0; s < samples; ++s) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(s));
        std::array<double, 8> t{};
        double norm2 = 0.0;
        for (auto& v : t) {
            v = rng.normal();
            norm2 += v * v;
        }
        const double delta = hyperdeterminant_222(t);
        // degree-4 invariant, so the boundary band scales with ||T||^4
        if (std::abs(delta) < 1e-12 * norm2 * norm2) {
            ++report.boundary_rejects;
            continue;
        }
        ++report.histogram[delta > 0.0 ? 2 : 3];
        ++counted;
    }
    finalize_report(report, counted);
    return report;
}

R0BoundReport verify_r0_bound(const VarietySpec& spec, int r0, int samples, std::uint64_t seed,
                              const FitOptions& opts) {
    if (r0 < 1) throw InputError("verify_r0_bound: r0 must be >= 1");
    if (samples < 1) throw InputError("verify_r0_bound: need samples >= 1");

    R0BoundReport report;
    report.spec = spec;
    report.r0 = r0;
    report.samples = samples;

    const bool is_binary = spec.family() == Family::Veronese && spec.n_vars() == 2;
    const bool is_222 = spec.family() == Family::Segre && spec.formats() == std::vector<int>{2, 2, 2};

    for (int s = 0; s < samples; ++s) {
        const std::uint64_t sample_seed = seed + static_cast<std::uint64_t>(s);
        AmbientPoint target;
        target.spec = spec;
        target.field = Field::Real;
        target.im = Eigen::VectorXd::Zero(spec.ambient_affine_dim());

        if (is_binary && s == 0) {
            // adversarial witness of maximal real rank
            target.re = Eigen::VectorXd::Zero(spec.ambient_affine_dim());
            target.re[1] = 1.0;  // x^{d-1} y
        } else {
            Rng rng = Rng::substream(seed ^ 0x5a317ULL, static_cast<std::uint64_t>(s));
            Eigen::VectorXd v(spec.ambient_affine_dim());
            while (true) {
                for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
                if (!is_222) break;
                std::array<double, 8> t{};
                for (int i = 0; i < 8; ++i) t[static_cast<size_t>(i)] = v[i];
                const double delta = hyperdeterminant_222(t);
                if (delta < -1e-12 * std::pow(v.norm(), 4.0)) break;  // want real rank 3
            }
            target.re = v;
        }

        FitOptions split_opts = opts;
        split_opts.seed = sample_seed;
        const SplitReport split = two_point_split_real(spec, target, r0, split_opts);
        if (split.success && split.length <= 2 * r0) {
            ++report.successes;
            report.max_length = std::max(report.max_length, split.length);
            report.max_residual = std::max(report.max_residual, split.relative_residual);
        } else {
            report.failure_seeds.push_back(sample_seed);
        }
    }
    return report;
}

}  // namespace xrank
