#include "xrank/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace xrank {

std::string bound_label_name(BoundLabel label) {
    switch (label) {
        case BoundLabel::TwiceGeneric: return "twice_generic";
        case BoundLabel::TwiceGenericMinusOne: return "twice_generic_minus_one";
        case BoundLabel::AmbientMinusDim: return "ambient_minus_dim";
        case BoundLabel::Proposition: return "proposition";
        case BoundLabel::Jelisiejew: return "jelisiejew";
        case BoundLabel::BallicoDeParis: return "ballico_de_paris";
        case BoundLabel::Trivial: return "trivial";
    }
    return "?";
}

std::int64_t bound_twice_generic(std::int64_t r_gen) {
    if (r_gen < 1) throw InputError("bound_twice_generic: r_gen must be >= 1");
    return 2 * r_gen;
}

std::int64_t bound_hypersurface_refinement(std::int64_t r_gen) {
    if (r_gen < 1) throw InputError("bound_hypersurface_refinement: r_gen must be >= 1");
    return 2 * r_gen - 1;
}

std::int64_t bound_ambient_minus_dim(std::int64_t ambient_projective_dim,
                                     std::int64_t variety_dim) {
    if (variety_dim < 0 || variety_dim > ambient_projective_dim)
        throw InputError("bound_ambient_minus_dim: need 0 <= dim X <= n");
    return ambient_projective_dim + 1 - variety_dim;
}

std::int64_t bound_proposition(std::int64_t k, std::int64_t c, std::int64_t s) {
    if (k < 1 || c < 0 || s < 1) throw InputError("bound_proposition: need k, s >= 1 and c >= 0");
    return std::max(s, (c + 1) * k);
}

std::int64_t bound_jelisiejew(int n, int d) {
    if (n < 2 || d < 1) throw InputError("bound_jelisiejew: need n >= 2, d >= 1");
    return binom(n + d - 2, n - 1) - binom(n + d - 6, n - 3);
}

std::int64_t bound_ballico_deparis(int n, int d) {
    if (n < 2 || d < 1) throw InputError("bound_ballico_deparis: need n >= 2, d >= 1");
    return binom(n + d - 2, n - 1) - binom(n + d - 6, n - 3) - binom(n + d - 7, n - 3);
}

std::int64_t waring_max_bound(int n, int d) {
    if (n < 2) throw InputError("waring_max_bound: need n >= 2");
    if (d < 3)
        throw InputError("waring_max_bound: degree must be >= 3 (quadrics: r_max(n,2) = n)");
    if (n == 3 && d == 4) return 11;
    if (n == 4 && d == 4) return 19;
    if (n == 5 && d == 4) return 29;
    if (n == 5 && d == 3) return 15;
    return 2 * ceil_div(monomial_count(n, d), n);
}

std::optional<int> known_waring_max(int n, int d) {
    // the three published exact maxima: plane cubics, plane quartics,
    // cubic surfaces
    if (n == 3 && d == 3) return 5;
    if (n == 3 && d == 4) return 7;
    if (n == 4 && d == 3) return 7;
    return std::nullopt;
}

std::vector<WaringTableRow> emit_waring_table(const std::vector<int>& n_values,
                                              const std::vector<int>& d_values) {
    std::vector<WaringTableRow> rows;
    for (int n : n_values) {
        for (int d : d_values) {
            WaringTableRow row;
            row.n = n;
            row.d = d;
            row.r_gen = waring_generic_rank(n, d).r_gen;
            row.r_max_jelisiejew = bound_jelisiejew(n, d);
            row.r_max_ballico_deparis = bound_ballico_deparis(n, d);
            row.r_max_star = waring_max_bound(n, d);
            row.r_max_known = known_waring_max(n, d);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_waring_table(const std::vector<WaringTableRow>& rows) {
    std::ostringstream os;
    os << std::setw(3) << "n" << std::setw(4) << "d" << std::setw(7) << "r_gen" << std::setw(9)
       << "r_max^J" << std::setw(11) << "r_max^BDP" << std::setw(9) << "r_max^*" << std::setw(8)
       << "r_max" << '\n';
    for (const auto& r : rows) {
        os << std::setw(3) << r.n << std::setw(4) << r.d << std::setw(7) << r.r_gen << std::setw(9)
           << r.r_max_jelisiejew << std::setw(11) << r.r_max_ballico_deparis << std::setw(9)
           << r.r_max_star << std::setw(8);
        if (r.r_max_known)
            os << *r.r_max_known;
        else
            os << "-";
        os << '\n';
    }
    return os.str();
}

BinaryFormFacts binary_form_facts(int d) {
    if (d < 1) throw InputError("binary_form_facts: degree must be >= 1");
    BinaryFormFacts f;
    f.d = d;
    f.r_max = d;
    f.r_gen = static_cast<int>(ceil_div(d + 1, 2));
    f.sharp_bound = d % 2 == 0 ? 2 * f.r_gen - 2 : 2 * f.r_gen - 1;
    return f;
}

BoundReport bound_report(const VarietySpec& spec, int trials, RankMode mode, std::uint64_t seed) {
    BoundReport report;
    report.spec = spec;

    GenericRankResult gen;
    switch (spec.family()) {
        case Family::Veronese:
            gen = waring_generic_rank(spec.n_vars(), spec.degree());
            break;
        case Family::Segre:
            gen = segre_generic_rank(spec.formats(), trials, mode, seed);
            break;
        default:
            gen = generic_rank_terracini(spec, trials, mode, seed);
            break;
    }
    report.r_gen = gen.r_gen;

    report.entries.push_back({BoundLabel::TwiceGeneric, bound_twice_generic(gen.r_gen),
                              "twice the generic rank"});
    if (gen.hypersurface_below) {
        report.entries.push_back({BoundLabel::TwiceGenericMinusOne,
                                  bound_hypersurface_refinement(gen.r_gen),
                                  "hypersurface one secant below the filling one"});
    }

    const std::int64_t dim_x = variety_projective_dim(spec, seed);
    report.entries.push_back({BoundLabel::AmbientMinusDim,
                              bound_ambient_minus_dim(spec.ambient_affine_dim() - 1, dim_x),
                              "ambient projective dimension plus one, minus dim X"});

    if (spec.family() == Family::Veronese && spec.degree() >= 3) {
        report.entries.push_back({BoundLabel::Jelisiejew,
                                  bound_jelisiejew(spec.n_vars(), spec.degree()),
                                  "Jelisiejew bound"});
        report.entries.push_back({BoundLabel::BallicoDeParis,
                                  bound_ballico_deparis(spec.n_vars(), spec.degree()),
                                  "Ballico-De Paris bound"});
    }

    report.entries.push_back({BoundLabel::Trivial, spec.ambient_affine_dim(),
                              "a basis of cone points"});

    report.best = report.entries.front().value;
    for (const auto& e : report.entries) report.best = std::min(report.best, e.value);
    return report;
}

}  // namespace xrank
