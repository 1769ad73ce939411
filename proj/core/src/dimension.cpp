#include "xrank/dimension.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <map>

#include "xrank/rng.hpp"

namespace xrank {

std::string rank_mode_name(RankMode m) {
    return m == RankMode::ExactRational ? "exact_rational" : "float_svd";
}

namespace {

// One random parameter block per mode. Integer draws reject the all-zero
// block so the point lies on the cone minus the origin.
std::vector<BigInt> draw_int_block(Rng& rng, std::int64_t len) {
    std::vector<BigInt> block(static_cast<size_t>(len));
    while (true) {
        bool nonzero = false;
        for (auto& v : block) {
            const int x = rng.uniform_int(-10, 10);
            v = x;
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return block;
    }
}

Eigen::VectorXd draw_normal_block(Rng& rng, std::int64_t len) {
    Eigen::VectorXd v(len);
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.normal();
    return v;
}

std::int64_t stacked_rank_exact(const VarietySpec& spec, int r, Rng& rng) {
    const auto ambient = static_cast<std::size_t>(spec.ambient_affine_dim());
    const auto pd = static_cast<std::size_t>(spec.param_dim());
    IntMatrix stacked(ambient, pd * static_cast<std::size_t>(r));
    for (int block = 0; block < r; ++block) {
        const std::vector<BigInt> param = draw_int_block(rng, spec.param_dim());
        const DenseMatrix<BigInt> jac = kernels::cone_jacobian<BigInt>(spec, param);
        for (std::size_t i = 0; i < ambient; ++i)
            for (std::size_t j = 0; j < pd; ++j)
                stacked(i, static_cast<std::size_t>(block) * pd + j) = jac(i, j);
    }
    return static_cast<std::int64_t>(bareiss_rank(std::move(stacked)));
}

std::int64_t stacked_rank_float(const VarietySpec& spec, int r, Rng& rng) {
    const Eigen::Index ambient = spec.ambient_affine_dim();
    const Eigen::Index pd = spec.param_dim();
    Eigen::MatrixXd stacked(ambient, pd * r);
    for (int block = 0; block < r; ++block) {
        const Eigen::VectorXd param = draw_normal_block(rng, pd);
        stacked.middleCols(static_cast<Eigen::Index>(block) * pd, pd) =
            cone_jacobian_real(spec, param);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
    const Eigen::VectorXd sv = svd.singularValues();
    if (sv.size() == 0 || sv[0] == 0.0) return 0;
    const double cutoff = 1e-8 * sv[0];
    std::int64_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > cutoff) ++rank;
    return rank;
}

}  // namespace

std::int64_t generic_tangent_dim(const VarietySpec& spec, std::uint64_t seed) {
    std::int64_t best = 0;
    for (int t = 0; t < 3; ++t) {
        Rng rng = Rng::substream(seed ^ 0x74616e67656e74ULL, static_cast<std::uint64_t>(t));
        best = std::max(best, stacked_rank_exact(spec, 1, rng));
    }
    return best;
}

std::int64_t variety_projective_dim(const VarietySpec& spec, std::uint64_t seed) {
    return generic_tangent_dim(spec, seed) - 1;
}

TerraciniEstimate terracini_dimension(const VarietySpec& spec, int r, int trials, RankMode mode,
                                      std::uint64_t seed) {
    if (r < 1) throw InputError("terracini_dimension: r must be >= 1");
    if (trials < 1) throw InputError("terracini_dimension: trials must be >= 1");

    TerraciniEstimate est;
    est.spec = spec;
    est.r = r;
    est.trials = trials;
    est.mode = mode;

    const std::int64_t cap = spec.ambient_affine_dim();
    std::int64_t observed = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
        const std::int64_t rank = mode == RankMode::ExactRational
                                      ? stacked_rank_exact(spec, r, rng)
                                      : stacked_rank_float(spec, r, rng);
        observed = std::max(observed, rank);
        if (observed >= cap) break;  // cannot grow past the ambient dimension
    }
    est.observed_rank = observed;
    est.fills_ambient = observed == cap;
    return est;
}

GenericRankResult generic_rank_terracini(const VarietySpec& spec, int trials, RankMode mode,
                                         std::uint64_t seed) {
    const std::int64_t ambient = spec.ambient_affine_dim();
    const std::int64_t tangent = generic_tangent_dim(spec, seed);
    if (tangent <= 0) throw InputError("generic_rank_terracini: zero tangent dimension");

    std::map<int, TerraciniEstimate> cache;
    auto estimate = [&](int r) -> const TerraciniEstimate& {
        auto it = cache.find(r);
        if (it == cache.end())
            it = cache.emplace(r, terracini_dimension(spec, r, trials, mode, seed)).first;
        return it->second;
    };

    const int naive = static_cast<int>(ceil_div(ambient, tangent));
    int r = std::max(1, naive);

    if (estimate(r).fills_ambient) {
        while (r > 1 && estimate(r - 1).fills_ambient) --r;
    } else {
        while (r <= static_cast<int>(ambient) && !estimate(r).fills_ambient) ++r;
        if (r > static_cast<int>(ambient))
            throw InputError("generic_rank_terracini: variety is degenerate (secants never fill)");
    }

    GenericRankResult res;
    res.spec = spec;
    res.method = RankMethod::Terracini;
    res.r_gen = r;
    res.exceptional = r > naive;
    res.hypersurface_below = r >= 2 && estimate(r - 1).observed_rank == ambient - 1;
    return res;
}

bool hypersurface_condition(int n_vars, int degree) {
    if (n_vars < 2 || degree < 1) throw InputError("hypersurface_condition: need n >= 2, d >= 1");
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n_vars + degree - 1),
                 static_cast<unsigned long>(n_vars - 1));
    return mpz_fdiv_ui(b.get_mpz_t(), static_cast<unsigned long>(n_vars)) == 1;
}

GenericRankResult waring_generic_rank(int n_vars, int degree) {
    if (n_vars < 2 || degree < 1) throw InputError("waring_generic_rank: need n >= 2, d >= 1");

    GenericRankResult res;
    res.spec = VarietySpec::veronese(n_vars, degree);
    res.method = RankMethod::ClosedForm;

    const std::int64_t formula = ceil_div(monomial_count(n_vars, degree), n_vars);
    const bool quartic_like = (n_vars == 3 && degree == 4) || (n_vars == 4 && degree == 4) ||
                              (n_vars == 5 && degree == 4) || (n_vars == 5 && degree == 3);

    if (degree == 2) {
        res.r_gen = n_vars;
        res.exceptional = true;
        res.hypersurface_below = hypersurface_condition(n_vars, degree);
    } else if (quartic_like) {
        res.r_gen = static_cast<int>(formula) + 1;
        res.exceptional = true;
        res.hypersurface_below = true;
    } else {
        res.r_gen = static_cast<int>(formula);
        res.exceptional = false;
        res.hypersurface_below = hypersurface_condition(n_vars, degree);
    }
    return res;
}

GenericRankResult segre_generic_rank(const std::vector<int>& formats, int trials, RankMode mode,
                                     std::uint64_t seed) {
    const VarietySpec spec = VarietySpec::segre(formats);

    const bool all_two = std::all_of(formats.begin(), formats.end(), [](int f) { return f == 2; });
    const bool cube = formats.size() == 3 && formats[0] == formats[1] && formats[1] == formats[2];

    GenericRankResult res;
    res.spec = spec;
    res.method = RankMethod::ClosedForm;

    if (all_two) {
        const auto n = static_cast<std::int64_t>(formats.size());
        res.r_gen = static_cast<int>(ceil_div(std::int64_t(1) << n, n + 1));
        res.exceptional = false;
    } else if (cube) {
        const std::int64_t n = formats[0];
        res.r_gen = n == 3 ? 5 : static_cast<int>(ceil_div(n * n * n, 3 * n - 2));
        res.exceptional = n == 3;
    } else {
        return generic_rank_terracini(spec, trials, mode, seed);
    }

    // expected-dimension count for the secant one below; the n = 3 cube is
    // the known defective case with a hypersurface there
    const std::int64_t tangent = spec.param_dim() - static_cast<std::int64_t>(formats.size()) + 1;
    res.hypersurface_below =
        res.exceptional ||
        (res.r_gen >= 2 &&
         std::min<std::int64_t>((res.r_gen - 1) * tangent, spec.ambient_affine_dim()) ==
             spec.ambient_affine_dim() - 1);
    return res;
}

std::int64_t power_forms_generic_count(int n_vars, int degree, int k) {
    if (n_vars < 2 || degree < 1 || k < 1)
        throw InputError("power_forms_generic_count: inputs must be positive");
    std::int64_t out = 1;
    for (int i = 0; i < n_vars - 1; ++i) out *= k;
    return out;
}

}  // namespace xrank
