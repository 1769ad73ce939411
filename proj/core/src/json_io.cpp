#include "xrank/json_io.hpp"

#include <json.hpp>

namespace xrank {

using nlohmann::json;

namespace {

json spec_params(const VarietySpec& spec) {
    json p;
    switch (spec.family()) {
        case Family::Veronese:
            p["n"] = spec.n_vars();
            p["d"] = spec.degree();
            break;
        case Family::Segre:
            p["formats"] = spec.formats();
            break;
        case Family::Grassmannian:
            p["k"] = spec.gr_k();
            p["m"] = spec.gr_m();
            break;
        case Family::PowerOfForms:
            p["n"] = spec.n_vars();
            p["d"] = spec.degree();
            p["k"] = spec.power();
            break;
    }
    return p;
}

VarietySpec spec_from_json(const json& j) {
    const std::string family = j.at("family").get<std::string>();
    const json& p = j.at("params");
    if (family == "veronese") return VarietySpec::veronese(p.at("n"), p.at("d"));
    if (family == "segre") return VarietySpec::segre(p.at("formats").get<std::vector<int>>());
    if (family == "grassmannian") return VarietySpec::grassmannian(p.at("k"), p.at("m"));
    if (family == "power_of_forms")
        return VarietySpec::power_of_forms(p.at("n"), p.at("d"), p.at("k"));
    throw InputError("unknown family: " + family);
}

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
    return arr;
}

Eigen::VectorXd vector_from_json(const json& arr) {
    Eigen::VectorXd v(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    return v;
}

json decomposition_to_json_obj(const Decomposition& dec) {
    json j;
    json terms = json::array();
    for (const auto& t : dec.terms) {
        json term;
        term["coeff_re"] = t.coeff_re;
        term["coeff_im"] = t.coeff_im;
        term["param_re"] = vector_to_json(t.param.re);
        term["param_im"] = vector_to_json(t.param.im);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    if (dec.residual) j["residual"] = *dec.residual;
    return j;
}

Decomposition decomposition_from_json_obj(const json& j, const VarietySpec& spec, Field field) {
    Decomposition dec;
    dec.spec = spec;
    dec.field = field;
    for (const auto& term : j.at("terms")) {
        DecompositionTerm t;
        t.coeff_re = term.at("coeff_re").get<double>();
        t.coeff_im = term.at("coeff_im").get<double>();
        const Eigen::VectorXd re = vector_from_json(term.at("param_re"));
        const Eigen::VectorXd im = vector_from_json(term.at("param_im"));
        t.param = field == Field::Real && im.isZero(0.0) ? ConeParam::real(re)
                                                         : ConeParam::complex(re, im);
        t.param.field = field;
        dec.terms.push_back(std::move(t));
    }
    if (j.contains("residual")) dec.residual = j.at("residual").get<double>();
    return dec;
}

json spec_header(const VarietySpec& spec, Field field) {
    json j;
    j["family"] = family_name(spec.family());
    j["params"] = spec_params(spec);
    j["field"] = field_name(field);
    return j;
}

std::string dump(const json& j, int indent) { return j.dump(indent); }

}  // namespace

std::string ambient_point_to_json(const AmbientPoint& point, int indent) {
    json j = spec_header(point.spec, point.field);
    j["coeffs_re"] = vector_to_json(point.re);
    j["coeffs_im"] = vector_to_json(point.im);
    return dump(j, indent);
}

AmbientPoint ambient_point_from_json(const std::string& text) {
    const json j = json::parse(text);
    AmbientPoint p;
    p.spec = spec_from_json(j);
    p.field = j.at("field").get<std::string>() == "real" ? Field::Real : Field::Complex;
    p.re = vector_from_json(j.at("coeffs_re"));
    p.im = j.contains("coeffs_im") ? vector_from_json(j.at("coeffs_im"))
                                   : Eigen::VectorXd::Zero(p.re.size()).eval();
    if (p.re.size() != p.spec.ambient_affine_dim() || p.im.size() != p.re.size())
        throw InputError("ambient_point_from_json: coefficient length mismatch");
    if (p.field == Field::Real && !p.im.isZero(0.0))
        throw InputError("ambient_point_from_json: real point with nonzero imaginary part");
    return p;
}

std::string decomposition_to_json(const Decomposition& dec, int indent) {
    return dump(decomposition_to_json_obj(dec), indent);
}

Decomposition decomposition_from_json(const std::string& text, const VarietySpec& spec,
                                      Field field) {
    return decomposition_from_json_obj(json::parse(text), spec, field);
}

std::string split_report_to_json(const SplitReport& report, int indent) {
    json j = spec_header(report.input.spec, report.input.field);
    j["success"] = report.success;
    j["input"] = json::parse(ambient_point_to_json(report.input));
    j["anchor"] = decomposition_to_json_obj(report.anchor);
    j["remainder"] = decomposition_to_json_obj(report.remainder);
    j["combined"] = decomposition_to_json_obj(report.combined);
    j["length"] = report.length;
    j["relative_residual"] = report.relative_residual;
    j["attempts"] = report.attempts;
    j["seed"] = report.seed;
    return dump(j, indent);
}

std::string generic_rank_to_json(const GenericRankResult& result, int indent) {
    json j;
    j["family"] = family_name(result.spec.family());
    j["params"] = spec_params(result.spec);
    j["r_gen"] = result.r_gen;
    j["method"] = result.method == RankMethod::Terracini ? "terracini" : "closed_form";
    j["exceptional"] = result.exceptional;
    j["hypersurface_below"] = result.hypersurface_below;
    return dump(j, indent);
}

std::string terracini_to_json(const TerraciniEstimate& estimate, int indent) {
    json j;
    j["family"] = family_name(estimate.spec.family());
    j["params"] = spec_params(estimate.spec);
    j["r"] = estimate.r;
    j["observed_rank"] = estimate.observed_rank;
    j["ambient_affine_dim"] = estimate.spec.ambient_affine_dim();
    j["trials"] = estimate.trials;
    j["mode"] = rank_mode_name(estimate.mode);
    j["fills_ambient"] = estimate.fills_ambient;
    return dump(j, indent);
}

std::string bound_report_to_json(const BoundReport& report, int indent) {
    json j;
    j["family"] = family_name(report.spec.family());
    j["params"] = spec_params(report.spec);
    j["r_gen"] = report.r_gen;
    json entries = json::array();
    for (const auto& e : report.entries) {
        json entry;
        entry["label"] = bound_label_name(e.label);
        entry["value"] = e.value;
        entry["source"] = e.source;
        entries.push_back(std::move(entry));
    }
    j["entries"] = std::move(entries);
    j["best"] = report.best;
    return dump(j, indent);
}

std::string waring_rows_to_json(const std::vector<WaringTableRow>& rows, int indent) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row;
        row["n"] = r.n;
        row["d"] = r.d;
        row["r_gen"] = r.r_gen;
        row["r_max_J"] = r.r_max_jelisiejew;
        row["r_max_BDP"] = r.r_max_ballico_deparis;
        row["r_max_star"] = r.r_max_star;
        if (r.r_max_known)
            row["r_max_known"] = *r.r_max_known;
        else
            row["r_max_known"] = nullptr;
        arr.push_back(std::move(row));
    }
    return dump(arr, indent);
}

std::string typical_report_to_json(const TypicalRankReport& report, int indent) {
    json j;
    j["family"] = report.family;
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["threshold"] = report.threshold;
    json hist = json::object();
    for (const auto& [rank, count] : report.histogram) hist[std::to_string(rank)] = count;
    j["histogram"] = std::move(hist);
    j["observed_typical"] = report.observed_typical;
    j["min_typical"] = report.min_typical;
    j["r_gen_complex"] = report.r_gen_complex;
    j["boundary_rejects"] = report.boundary_rejects;
    return dump(j, indent);
}

std::string binary_rank_to_json(const RankCertificate& cert, const BinaryForm& form,
                                const BinaryDecomposition& dec, int indent) {
    json j;
    j["degree"] = form.d;
    j["field"] = field_name(cert.field);
    j["rank"] = cert.rank;
    json form_coeffs = json::array();
    for (const auto& c : form.coeffs) form_coeffs.push_back(to_string(c));
    j["form_coeffs"] = std::move(form_coeffs);
    json apolar = json::array();
    for (const auto& c : cert.apolar_form.coeffs) apolar.push_back(to_string(c));
    j["apolar_coeffs"] = std::move(apolar);
    j["exact"] = dec.exact_terms.has_value();
    if (dec.exact_terms) {
        json terms = json::array();
        for (const auto& t : *dec.exact_terms) {
            json term;
            term["coeff"] = to_string(t.coeff);
            term["alpha"] = to_string(t.alpha);
            term["beta"] = to_string(t.beta);
            terms.push_back(std::move(term));
        }
        j["exact_terms"] = std::move(terms);
    }
    j["decomposition"] = json::parse(decomposition_to_json(dec.numeric));
    return dump(j, indent);
}

}  // namespace xrank
