// Command-line front end for the coxdp library. Exit codes: 0 = success
// or all checks pass, 1 = a mathematical check failed, 2 = invalid input.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxdp/acceptance.hpp"
#include "coxdp/coxring.hpp"
#include "coxdp/errors.hpp"
#include "coxdp/nagata.hpp"
#include "coxdp/picard.hpp"

namespace {

using coxdp::PicClass;
using coxdp::PointConfiguration;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

std::size_t orbit_cap_from_env()
{
    const char* raw = std::getenv("COXDP_WEYL_ORBIT_CAP");
    if (raw == nullptr || *raw == '\0') return coxdp::kDefaultOrbitCap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0)
        throw coxdp::input_error("COXDP_WEYL_ORBIT_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
}

json class_to_json(const PicClass& d)
{
    json a = json::array();
    for (int i = 0; i <= d.r(); ++i) a.push_back(d[i]);
    return a;
}

// Parses the wire form and cross-checks the optional --r flag.
PicClass parse_class(const std::string& text, int r_flag)
{
    PicClass d = PicClass::parse(text);
    if (r_flag > 0 && d.r() != r_flag)
        throw coxdp::input_error("--class has " + std::to_string(d.size()) +
                                 " entries, --r " + std::to_string(r_flag) + " needs " +
                                 std::to_string(r_flag + 1));
    return d;
}

// Shared --points / --seed resolution. File-based configurations are
// revalidated; a degenerate file is invalid input here, not a negative
// verdict (see `points validate` for the verdict form).
PointConfiguration load_config(const std::string& points_file,
                               std::optional<std::uint64_t> seed, bool random_prefix,
                               int r_flag)
{
    if (!points_file.empty() && seed)
        throw coxdp::input_error("give either --points or --seed, not both");
    if (!points_file.empty()) {
        PointConfiguration cfg = coxdp::read_points_file(points_file);
        if (r_flag > 0 && cfg.r != r_flag)
            throw coxdp::input_error("points file has r = " + std::to_string(cfg.r) +
                                     ", flags ask for r = " + std::to_string(r_flag));
        if (auto v = coxdp::validate_general_position(cfg))
            throw coxdp::input_error("points file fails general position: " + v->message);
        return cfg;
    }
    if (!seed) throw coxdp::input_error("need --points FILE or --seed N");
    if (r_flag <= 0) throw coxdp::input_error("--seed needs --r");
    return coxdp::sample_points(r_flag, *seed, !random_prefix);
}

void emit(const json& obj, bool json_out)
{
    if (json_out) {
        std::cout << obj.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : obj.items()) {
        if (value.is_array() && !value.empty() && value.front().is_array()) {
            // list of classes: one row per class
            for (const auto& row : value) {
                std::cout << key;
                std::string sep = "\t";
                std::string line;
                for (const auto& x : row) {
                    line += sep + x.dump();
                    sep = ",";
                }
                std::cout << line << "\n";
            }
        } else if (value.is_array()) {
            std::cout << key << "\t";
            std::string sep;
            for (const auto& x : value) {
                std::cout << sep << x.dump();
                sep = ",";
            }
            std::cout << "\n";
        } else if (value.is_string()) {
            std::cout << key << "\t" << value.get<std::string>() << "\n";
        } else {
            std::cout << key << "\t" << value.dump() << "\n";
        }
    }
}

struct Flags {
    int r = 0;
    std::string cls;
    std::string cls2;
    std::string points_file;
    std::optional<std::uint64_t> seed;
    bool random_prefix = false;
    std::string method = "brute";
    std::string format = "tsv";
    std::string out_file;
    int degree = 0;
    int max_degree = 2;
    int max_k = 3;
    int max_factor_degree = 3;
    bool allow_r7 = false;
    bool allow_large = false;
    bool skip_r7 = false;

    bool json() const { return format == "json"; }
};

int cmd_exceptional(const Flags& f)
{
    std::vector<PicClass> classes;
    if (f.method == "brute") {
        classes = coxdp::exceptional_curves_bruteforce(f.r);
    } else {
        coxdp::DelPezzoLattice lat(f.r);
        classes = lat.weyl_orbit(PicClass::basis(f.r, f.r), orbit_cap_from_env());
    }
    json out;
    out["r"] = f.r;
    out["method"] = f.method;
    out["count"] = classes.size();
    json arr = json::array();
    for (const auto& e : classes) arr.push_back(class_to_json(e));
    out["class"] = std::move(arr);
    emit(out, f.json());
    return kExitOk;
}

int cmd_h0(const Flags& f)
{
    PicClass d = parse_class(f.cls, f.r);
    coxdp::DelPezzoLattice lat(d.r());
    json out;
    out["r"] = d.r();
    out["class"] = class_to_json(d);
    out["h0"] = lat.h0(d);
    emit(out, f.json());
    return kExitOk;
}

int cmd_oracle_h0(const Flags& f)
{
    PicClass d = parse_class(f.cls, f.r);
    PointConfiguration cfg = load_config(f.points_file, f.seed, f.random_prefix, d.r());
    json out;
    out["r"] = d.r();
    out["class"] = class_to_json(d);
    out["oracle_h0"] = coxdp::component_dimension(cfg, d);
    emit(out, f.json());
    return kExitOk;
}

int cmd_effective(const Flags& f)
{
    coxdp::DelPezzoLattice lat(f.r);
    auto classes = coxdp::effective_classes_of_degree(lat, f.degree);
    std::int64_t dim = 0;
    for (const auto& d : classes) dim += lat.h0(d);
    json out;
    out["r"] = f.r;
    out["degree"] = f.degree;
    out["count"] = classes.size();
    out["dimension"] = dim;
    json arr = json::array();
    for (const auto& d : classes) arr.push_back(class_to_json(d));
    out["class"] = std::move(arr);
    emit(out, f.json());
    return kExitOk;
}

int cmd_hilbert(const Flags& f)
{
    coxdp::DelPezzoLattice lat(f.r);
    coxdp::HilbertData h = coxdp::hilbert_numerator(lat, f.allow_r7);
    json out;
    out["r"] = f.r;
    out["krull_dim"] = h.krull_dim;
    out["numerator"] = h.numerator;
    out["a_invariant"] = h.a_invariant;
    emit(out, f.json());
    return kExitOk;
}

int cmd_gorenstein(const Flags& f)
{
    coxdp::DelPezzoLattice lat(f.r);
    coxdp::HilbertData h = coxdp::hilbert_numerator(lat, f.allow_r7);
    bool palin = coxdp::gorenstein_palindrome_check(h);
    bool a_ok = coxdp::a_invariant_check(h);
    json out;
    out["numerator"] = h.numerator;
    out["a_invariant"] = h.a_invariant;
    out["palindromic"] = palin;
    emit(out, f.json());
    return palin && a_ok ? kExitOk : kExitCheckFailed;
}

int cmd_points_sample(const Flags& f)
{
    PointConfiguration cfg = coxdp::sample_points(f.r, f.seed.value_or(1), !f.random_prefix);
    std::string text = coxdp::points_to_json(cfg);
    if (!f.out_file.empty()) coxdp::write_points_file(f.out_file, cfg);
    std::cout << text << "\n";
    return kExitOk;
}

int cmd_points_validate(const Flags& f)
{
    PointConfiguration cfg = coxdp::read_points_file(f.points_file);
    auto v = coxdp::validate_general_position(cfg);
    json out;
    out["valid"] = !v.has_value();
    if (v) {
        switch (v->kind) {
        case coxdp::Violation::Kind::collinear: out["kind"] = "collinear"; break;
        case coxdp::Violation::Kind::conic: out["kind"] = "conic"; break;
        case coxdp::Violation::Kind::cubic_double_point: out["kind"] = "cubic_double_point"; break;
        }
        out["witness"] = v->witness;
        out["message"] = v->message;
    }
    emit(out, f.json());
    return v ? kExitCheckFailed : kExitOk;
}

int cmd_nagata_verify(const Flags& f)
{
    PointConfiguration cfg = load_config(f.points_file, f.seed, f.random_prefix, f.r);
    int r = cfg.r;
    auto basis = coxdp::u_constraint_basis(cfg);
    bool ok = static_cast<int>(basis.size()) == r - 3;

    auto w = coxdp::w_forms(cfg);
    for (const auto& u : basis)
        for (const auto& wi : w)
            ok = ok && coxdp::u_action_formal(wi, u, cfg) == wi.extended(coxdp::nagata_nvars(r) + 1);

    coxdp::DelPezzoLattice lat(r);
    std::size_t classes_checked = 0;
    std::size_t elements_checked = 0;
    for (int n = 0; n <= f.max_degree && ok; ++n)
        for (const auto& d : coxdp::effective_classes_of_degree(lat, n)) {
            coxdp::SectionSpace ss = coxdp::section_basis(cfg, d);
            ok = ok && static_cast<std::int64_t>(ss.basis.size()) == lat.h0(d);
            for (const auto& p : ss.basis) {
                coxdp::MultiPoly ext = p.extended(coxdp::nagata_nvars(r) + 1);
                for (const auto& u : basis)
                    ok = ok && coxdp::u_action_formal(p, u, cfg) == ext;
                ++elements_checked;
            }
            ++classes_checked;
            if (!ok) break;
        }

    json out;
    out["r"] = r;
    out["constraint_dim"] = basis.size();
    out["classes_checked"] = classes_checked;
    out["basis_elements_checked"] = elements_checked;
    out["all_invariant"] = ok;
    emit(out, f.json());
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_relations(const Flags& f)
{
    PointConfiguration cfg = load_config(f.points_file, f.seed, f.random_prefix, f.r);
    coxdp::DelPezzoLattice lat(cfg.r);
    std::int64_t gens = coxdp::generator_count(lat);
    std::int64_t rel = coxdp::quadratic_relation_count(cfg, f.allow_large);
    json out;
    out["r"] = cfg.r;
    out["generators"] = gens;
    out["symmetric_products"] = gens * (gens + 1) / 2;
    out["relations"] = rel;
    emit(out, f.json());
    return kExitOk;
}

int cmd_chart_check(const Flags& f)
{
    PicClass e = parse_class(f.cls, f.r);
    PicClass d2 = PicClass::parse(f.cls2);
    if (d2.r() != e.r() - 1)
        throw coxdp::input_error("--d2 must have one entry fewer than --e");
    coxdp::DelPezzoLattice lat(e.r());
    coxdp::DelPezzoLattice sublat(e.r() - 1);
    bool ok = coxdp::chart_check(lat, sublat, e, d2, f.max_k);
    json out;
    out["r"] = e.r();
    out["e"] = class_to_json(e);
    out["d2"] = class_to_json(d2);
    out["max_k"] = f.max_k;
    out["chart_ok"] = ok;
    emit(out, f.json());
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_gap_probe(const Flags& f)
{
    PicClass d = parse_class(f.cls, 8);
    PointConfiguration cfg = load_config(f.points_file, f.seed, f.random_prefix, 8);
    coxdp::GapProbeResult res = coxdp::gap_probe(cfg, d, f.max_factor_degree);
    json out;
    out["class"] = class_to_json(d);
    out["subring_dim"] = res.subring_dim;
    out["full_dim"] = res.full_dim;
    out["spanned"] = res.subring_dim == res.full_dim;
    emit(out, f.json());
    return kExitOk;
}

int cmd_acceptance(const Flags& f)
{
    coxdp::AcceptanceOptions opt;
    opt.include_r7_hilbert = !f.skip_r7;
    auto results = coxdp::run_acceptance(opt);
    coxdp::print_acceptance(results, std::cout, false);
    bool ok = coxdp::acceptance_passed(results);
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Cox-ring computations for del Pezzo surfaces"};
    app.require_subcommand(1);
    Flags f;
    int rc = kExitOk;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", f.format, "Output format")
            ->check(CLI::IsMember({"tsv", "json"}))
            ->capture_default_str();
    };
    auto add_r = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--r", f.r, "Number of blown-up points (3..8)")
                        ->check(CLI::Range(3, 8));
        if (required) opt->required();
    };
    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--points", f.points_file, "Points file (JSON)");
        cmd->add_option("--seed", f.seed, "Sample a validated configuration from this seed");
        cmd->add_flag("--random-prefix", f.random_prefix,
                      "Sample all points randomly instead of starting from the standard square");
    };
    auto wire = [&](CLI::App* cmd, int (*fn)(const Flags&)) {
        cmd->callback([&f, &rc, fn] { rc = fn(f); });
    };

    auto* exceptional = app.add_subcommand("exceptional", "Enumerate exceptional curve classes");
    add_r(exceptional, true);
    exceptional->add_option("--method", f.method, "Enumeration method")
        ->check(CLI::IsMember({"brute", "weyl"}))
        ->capture_default_str();
    add_format(exceptional);
    wire(exceptional, cmd_exceptional);

    auto* h0 = app.add_subcommand("h0", "Section-space dimension from the lattice engine");
    add_r(h0, false);
    h0->add_option("--class", f.cls, "Divisor class a_0,...,a_r")->required();
    add_format(h0);
    wire(h0, cmd_h0);

    auto* oracle = app.add_subcommand("oracle-h0", "Section-space dimension from fat-point interpolation");
    add_r(oracle, false);
    oracle->add_option("--class", f.cls, "Divisor class a_0,...,a_r")->required();
    add_source(oracle);
    add_format(oracle);
    wire(oracle, cmd_oracle_h0);

    auto* effective = app.add_subcommand("effective", "Effective classes of one degree and the graded dimension");
    add_r(effective, true);
    effective->add_option("--degree", f.degree, "Degree of the graded piece")
        ->check(CLI::NonNegativeNumber)
        ->required();
    add_format(effective);
    wire(effective, cmd_effective);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert-series numerator of the Cox ring");
    add_r(hilbert, true);
    hilbert->add_flag("--allow-r7", f.allow_r7, "Permit the r=7 computation (about a minute)");
    add_format(hilbert);
    wire(hilbert, cmd_hilbert);

    auto* gorenstein = app.add_subcommand("gorenstein", "Numerator palindromy and a-invariant verdict");
    add_r(gorenstein, true);
    gorenstein->add_flag("--allow-r7", f.allow_r7, "Permit the r=7 computation (about a minute)");
    add_format(gorenstein);
    wire(gorenstein, cmd_gorenstein);

    auto* points = app.add_subcommand("points", "Point-configuration utilities");
    points->require_subcommand(1);
    auto* sample = points->add_subcommand("sample", "Sample a validated configuration");
    add_r(sample, true);
    sample->add_option("--seed", f.seed, "Sampling seed")->required();
    sample->add_flag("--random-prefix", f.random_prefix,
                     "Sample all points randomly instead of starting from the standard square");
    sample->add_option("--out", f.out_file, "Also write the configuration to this file");
    wire(sample, cmd_points_sample);
    auto* validate = points->add_subcommand("validate", "General-position verdict for a points file");
    validate->add_option("--points", f.points_file, "Points file (JSON)")->required();
    add_format(validate);
    wire(validate, cmd_points_validate);

    auto* nagata = app.add_subcommand("nagata-verify",
                                      "Invariance of the w forms and section bases under the unipotent action");
    add_r(nagata, false);
    add_source(nagata);
    nagata->add_option("--max-degree", f.max_degree, "Largest degree whose classes are checked")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    add_format(nagata);
    wire(nagata, cmd_nagata_verify);

    auto* relations = app.add_subcommand("relations", "Quadratic relation count among the degree-1 generators");
    add_r(relations, false);
    add_source(relations);
    relations->add_flag("--allow-large", f.allow_large, "Permit r=6 and above (slow)");
    add_format(relations);
    wire(relations, cmd_relations);

    auto* chart = app.add_subcommand("chart-check", "Blow-down pullback and saturation identities");
    add_r(chart, false);
    chart->add_option("--e", f.cls, "Exceptional class a_0,...,a_r")->required();
    chart->add_option("--d2", f.cls2, "Class a_0,...,a_{r-1} on the blown-down surface")->required();
    chart->add_option("--max-k", f.max_k, "Saturation depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(chart);
    wire(chart, cmd_chart_check);

    auto* gap = app.add_subcommand("gap-probe", "Span of exceptional-section products at r=8");
    gap->add_option("--class", f.cls, "Target class a_0,...,a_8")->required();
    add_source(gap);
    gap->add_option("--max-factor-degree", f.max_factor_degree,
                    "Cap on the degree of the probed factorizations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(gap);
    wire(gap, cmd_gap_probe);

    auto* acceptance = app.add_subcommand("acceptance", "Run the full acceptance suite");
    acceptance->add_flag("--skip-r7", f.skip_r7, "Skip the r=7 Hilbert numerator (about a minute)");
    wire(acceptance, cmd_acceptance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    } catch (const coxdp::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const coxdp::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const coxdp::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return rc;
}
