#include "xrank/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xrank/binary.hpp"
#include "xrank/bounds.hpp"
#include "xrank/decompose.hpp"
#include "xrank/dimension.hpp"
#include "xrank/json_io.hpp"
#include "xrank/typical.hpp"
#include "xrank/version.hpp"

namespace xrank {

using nlohmann::json;

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string iso_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

// Header carried by every JSON document: tool version, seed, and a hash of
// the effective configuration so runs are auditable. The timestamp is the
// only field allowed to differ between identical runs.
json make_header(const json& config, std::uint64_t seed) {
    json h;
    h["tool"] = "xrank";
    h["version"] = version_string;
    h["seed"] = seed;
    h["config_hash"] = fnv1a_hex(config.dump());
    h["timestamp"] = iso_timestamp();
    return h;
}

void emit(std::ostream& out, const std::string& path, const json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        out << text;
    } else {
        std::ofstream f(path);
        if (!f) throw InputError("cannot open output file: " + path);
        f << text;
    }
}

std::vector<int> parse_int_list_or_range(const std::string& text) {
    std::vector<int> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

struct FamilyFlags {
    std::string family = "veronese";
    int n = 0, d = 0, k = 0, m = 0, power = 0;
    std::string format;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "veronese | segre | grassmannian | power_of_forms")
            ->default_val("veronese");
        cmd->add_option("--n", n, "number of variables (veronese, power_of_forms)");
        cmd->add_option("--d", d, "degree");
        cmd->add_option("--k", k, "wedge factors (grassmannian) / power (power_of_forms)");
        cmd->add_option("--m", m, "ambient vector dimension (grassmannian)");
        cmd->add_option("--format", format, "comma-separated tensor format, e.g. 3,3,3");
    }

    VarietySpec to_spec() const {
        if (family == "veronese") return VarietySpec::veronese(n, d);
        if (family == "segre") return VarietySpec::segre(parse_int_list_or_range(format));
        if (family == "grassmannian") return VarietySpec::grassmannian(k, m);
        if (family == "power_of_forms") return VarietySpec::power_of_forms(n, d, k);
        throw InputError("unknown family: " + family);
    }

    json config() const {
        json c;
        c["family"] = family;
        if (n) c["n"] = n;
        if (d) c["d"] = d;
        if (k) c["k"] = k;
        if (m) c["m"] = m;
        if (!format.empty()) c["format"] = format;
        return c;
    }
};

int cmd_table(const std::vector<int>& n_values, const std::vector<int>& d_values, bool as_json,
              const std::string& out_path, std::ostream& out) {
    const auto rows = emit_waring_table(n_values, d_values);
    json config{{"command", "table"}, {"n", n_values}, {"d", d_values}};
    if (as_json || !out_path.empty()) {
        json doc;
        doc["header"] = make_header(config, 0);
        doc["rows"] = json::parse(waring_rows_to_json(rows));
        emit(out, out_path, doc);
    }
    if (!as_json) {
        out << "# xrank " << version_string << " seed=0 config=" << fnv1a_hex(config.dump())
            << "\n";
        for (int n : n_values) {
            std::vector<WaringTableRow> block;
            for (const auto& r : rows)
                if (r.n == n) block.push_back(r);
            out << format_waring_table(block) << "\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rank computations with respect to classical projective varieties"};
    app.require_subcommand(1);

    // ---- table ----
    auto* table = app.add_subcommand("table", "maximum-rank bound comparison tables");
    bool table_waring = false;
    std::string table_n = "3,4", table_d = "3..8", table_out;
    bool table_json = false;
    table->add_flag("--waring", table_waring, "Waring (symmetric) rank tables");
    table->add_option("--n", table_n, "n values (list or a..b)");
    table->add_option("--d", table_d, "d values (list or a..b)");
    table->add_flag("--json", table_json, "emit JSON instead of aligned text");
    table->add_option("--out", table_out, "write JSON to a file");

    // ---- generic-rank ----
    auto* grank = app.add_subcommand("generic-rank", "generic rank of a catalog variety");
    FamilyFlags grank_family;
    grank_family.attach(grank);
    std::string grank_method = "auto", grank_mode = "exact";
    int grank_trials = 5;
    std::uint64_t grank_seed = 0;
    grank->add_option("--method", grank_method, "auto | terracini | closed-form");
    grank->add_option("--mode", grank_mode, "exact | float (terracini arithmetic)");
    grank->add_option("--trials", grank_trials, "random trials per secant dimension");
    grank->add_option("--seed", grank_seed, "master seed");

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "every applicable maximum-rank bound");
    FamilyFlags bounds_family;
    bounds_family.attach(bounds_cmd);
    int bounds_trials = 5;
    std::uint64_t bounds_seed = 0;
    std::string bounds_out;
    bounds_cmd->add_option("--trials", bounds_trials, "Terracini trials where needed");
    bounds_cmd->add_option("--seed", bounds_seed, "master seed");
    bounds_cmd->add_option("--out", bounds_out, "write JSON to a file");

    // ---- rank-binary ----
    auto* rb = app.add_subcommand("rank-binary", "exact Waring rank of a binary form");
    std::string rb_form, rb_coeffs, rb_field = "complex", rb_out;
    rb->add_option("--form", rb_form, "symbolic form, e.g. \"x^3 - 3*x*y^2\"");
    rb->add_option("--coeffs", rb_coeffs, "coefficients x^d..y^d, e.g. 0,1,0,0 (rationals allowed)");
    rb->add_option("--field", rb_field, "real | complex");
    rb->add_option("--out", rb_out, "write JSON to a file");

    // ---- decompose ----
    auto* dc = app.add_subcommand("decompose", "two-point split of an ambient point");
    std::string dc_input, dc_mode = "complex", dc_out;
    int dc_r0 = 0;
    std::uint64_t dc_seed = 0;
    int dc_restarts = 10, dc_max_iter = 500;
    double dc_target = 1e-8;
    dc->add_option("--input", dc_input, "AmbientPoint JSON file")->required();
    dc->add_option("--mode", dc_mode, "complex | real");
    dc->add_option("--r0", dc_r0, "minimum typical rank (real mode; default: generic rank)");
    dc->add_option("--seed", dc_seed, "master seed");
    dc->add_option("--restarts", dc_restarts, "fit restarts");
    dc->add_option("--max-iterations", dc_max_iter, "fit iteration cap");
    dc->add_option("--target-residual", dc_target, "relative residual target");
    dc->add_option("--out", dc_out, "write SplitReport JSON to a file");

    // ---- typical ----
    auto* ty = app.add_subcommand("typical", "sampled real typical-rank histogram");
    std::string ty_family = "binary", ty_out;
    int ty_d = 3, ty_samples = 10000;
    std::uint64_t ty_seed = 0;
    double ty_threshold = 0.01;
    ty->add_option("--family", ty_family, "binary | 222");
    ty->add_option("-d,--d", ty_d, "degree (binary family)");
    ty->add_option("--samples", ty_samples, "sample count");
    ty->add_option("--seed", ty_seed, "master seed");
    ty->add_option("--threshold", ty_threshold, "typicality frequency threshold");
    ty->add_option("--out", ty_out, "write JSON to a file");

    std::vector<const char*> argv;
    argv.push_back("xrank");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (table->parsed()) {
            if (!table_waring) throw InputError("table: only --waring tables are available");
            return cmd_table(parse_int_list_or_range(table_n), parse_int_list_or_range(table_d),
                             table_json, table_out, out);
        }

        if (grank->parsed()) {
            const VarietySpec spec = grank_family.to_spec();
            const RankMode mode =
                grank_mode == "float" ? RankMode::FloatSVD : RankMode::ExactRational;
            GenericRankResult res;
            const bool has_closed_form =
                spec.family() == Family::Veronese ||
                (spec.family() == Family::Segre &&
                 segre_generic_rank(spec.formats(), grank_trials, mode, grank_seed).method ==
                     RankMethod::ClosedForm);
            if (grank_method == "terracini" || (grank_method == "auto" && !has_closed_form)) {
                res = generic_rank_terracini(spec, grank_trials, mode, grank_seed);
            } else if (spec.family() == Family::Veronese) {
                res = waring_generic_rank(spec.n_vars(), spec.degree());
            } else if (spec.family() == Family::Segre) {
                res = segre_generic_rank(spec.formats(), grank_trials, mode, grank_seed);
            } else {
                throw InputError("generic-rank: no closed form for this family; use --method terracini");
            }
            json config = grank_family.config();
            config["command"] = "generic-rank";
            config["method"] = grank_method;
            config["mode"] = grank_mode;
            config["trials"] = grank_trials;
            json doc;
            doc["header"] = make_header(config, grank_seed);
            doc["result"] = json::parse(generic_rank_to_json(res));
            emit(out, "", doc);
            return 0;
        }

        if (bounds_cmd->parsed()) {
            const VarietySpec spec = bounds_family.to_spec();
            const BoundReport report =
                bound_report(spec, bounds_trials, RankMode::ExactRational, bounds_seed);
            json config = bounds_family.config();
            config["command"] = "bounds";
            config["trials"] = bounds_trials;
            json doc;
            doc["header"] = make_header(config, bounds_seed);
            doc["report"] = json::parse(bound_report_to_json(report));
            emit(out, bounds_out, doc);
            return 0;
        }

        if (rb->parsed()) {
            BinaryForm form;
            if (!rb_form.empty()) {
                form = parse_binary_form(rb_form);
            } else if (!rb_coeffs.empty()) {
                std::vector<Rational> coeffs;
                std::stringstream ss(rb_coeffs);
                std::string item;
                while (std::getline(ss, item, ',')) coeffs.push_back(rational_from_string(item));
                const int degree = static_cast<int>(coeffs.size()) - 1;
                form = BinaryForm(degree, std::move(coeffs));
            } else {
                throw InputError("rank-binary: provide --form or --coeffs");
            }
            const Field field = rb_field == "real" ? Field::Real : Field::Complex;
            const RankCertificate cert = field == Field::Real ? real_rank(form) : complex_rank(form);
            const BinaryDecomposition dec = sylvester_decompose(cert, form);
            json config{{"command", "rank-binary"},
                        {"field", rb_field},
                        {"form", rb_form},
                        {"coeffs", rb_coeffs}};
            json doc;
            doc["header"] = make_header(config, 0);
            doc["result"] = json::parse(binary_rank_to_json(cert, form, dec));
            emit(out, rb_out, doc);
            return 0;
        }

        if (dc->parsed()) {
            std::ifstream f(dc_input);
            if (!f) throw InputError("decompose: cannot read " + dc_input);
            std::stringstream buf;
            buf << f.rdbuf();
            const AmbientPoint point = ambient_point_from_json(buf.str());

            FitOptions opts;
            opts.seed = dc_seed;
            opts.restarts = dc_restarts;
            opts.max_iterations = dc_max_iter;
            opts.target_relative_residual = dc_target;

            SplitReport report;
            if (dc_mode == "real") {
                int r0 = dc_r0;
                if (r0 == 0) {
                    if (point.spec.family() == Family::Veronese)
                        r0 = waring_generic_rank(point.spec.n_vars(), point.spec.degree()).r_gen;
                    else if (point.spec.family() == Family::Segre)
                        r0 = segre_generic_rank(point.spec.formats()).r_gen;
                    else
                        r0 = generic_rank_terracini(point.spec).r_gen;
                }
                report = two_point_split_real(point.spec, point, r0, opts);
            } else {
                report = two_point_split_complex(point.spec, point, opts);
            }

            json config{{"command", "decompose"}, {"mode", dc_mode},   {"r0", dc_r0},
                        {"restarts", dc_restarts}, {"max_iterations", dc_max_iter},
                        {"target", dc_target},     {"input", dc_input}};
            json doc;
            doc["header"] = make_header(config, dc_seed);
            doc["report"] = json::parse(split_report_to_json(report));
            emit(out, dc_out, doc);
            return report.success ? 0 : 1;
        }

        if (ty->parsed()) {
            TypicalRankReport report;
            if (ty_family == "binary") {
                report = sample_binary_typical(ty_d, ty_samples, ty_seed, ty_threshold);
            } else if (ty_family == "222") {
                report = sample_222_typical(ty_samples, ty_seed, ty_threshold);
            } else {
                throw InputError("typical: family must be binary or 222");
            }
            json config{{"command", "typical"},
                        {"family", ty_family},
                        {"d", ty_d},
                        {"samples", ty_samples},
                        {"threshold", ty_threshold}};
            json doc;
            doc["header"] = make_header(config, ty_seed);
            doc["report"] = json::parse(typical_report_to_json(report));
            emit(out, ty_out, doc);
            return 0;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace xrank
