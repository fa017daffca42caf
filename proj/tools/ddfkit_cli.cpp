// ddfkit command-line front end.
//
// Subcommands: construct | analyze | correlate | closure | equiv | primitive
// | verify-paper. Inputs and outputs use the JSON wire formats of
// ddfkit/json_io.hpp; positions in cycle notation are 1-indexed at this
// boundary (0-indexed inside the library).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ddfkit/ddf.hpp"
#include "ddfkit/fhs.hpp"
#include "ddfkit/geometry.hpp"
#include "ddfkit/json_io.hpp"
#include "ddfkit/lfsr.hpp"
#include "ddfkit/numbers.hpp"
#include "ddfkit/poly.hpp"
#include "ddfkit/verify.hpp"

using ddfkit::io::json;

namespace {

struct Options {
    bool json_output = false;
    long long seed = 0; // reserved; all algorithms are deterministic
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) ddfkit::fail(ddfkit::ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit_report(const Options& opt, const json& data, const std::vector<std::string>& notes) {
    json report{{"ok", true}, {"data", data}, {"notes", notes}};
    if (opt.json_output) {
        std::cout << report.dump() << "\n";
        return;
    }
    std::cout << report.dump(2) << "\n";
}

int emit_error(const Options& opt, const std::string& kind, const std::string& message) {
    json report{{"ok", false}, {"error", {{"kind", kind}, {"message", message}}}, {"notes", json::array()}};
    if (opt.json_output)
        std::cout << report.dump() << "\n";
    else
        std::cerr << report.dump(2) << "\n";
    return 2;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            ddfkit::fail(ddfkit::ErrorKind::ParseError, what + ": bad integer \"" + tok + "\"");
        }
    }
    if (out.empty()) ddfkit::fail(ddfkit::ErrorKind::ParseError, what + " is empty");
    return out;
}

ddfkit::Poly parse_poly_arg(const ddfkit::Field& field, const std::string& text) {
    if (text.find('x') != std::string::npos || text.find('X') != std::string::npos)
        return ddfkit::Poly::from_string(field, text);
    auto coeffs = parse_int_list(text, "polynomial");
    long long q = field.size();
    for (int& c : coeffs) c = static_cast<int>(((c % q) + q) % q);
    return ddfkit::Poly(field, coeffs);
}

// "r00,r01,...;r10,r11,..." row-major square matrix
ddfkit::Matrix parse_matrix_arg(const ddfkit::Field& field, const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_int_list(row, "matrix row"));
    if (rows.empty()) ddfkit::fail(ddfkit::ErrorKind::ParseError, "matrix is empty");
    ddfkit::Matrix m(field, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            ddfkit::fail(ddfkit::ErrorKind::ParseError, "matrix must be square");
        for (size_t j = 0; j < rows[i].size(); ++j) {
            int v = rows[i][j];
            long long q = field.size();
            m.set(static_cast<int>(i), static_cast<int>(j), static_cast<int>(((v % q) + q) % q));
        }
    }
    return m;
}

struct ConstructArgs {
    int p = 0;
    int m = 1;
    int n = 0;
    int k = 0;
    std::string taps;
    std::string poly;
    std::string base;
    std::string frame;
    std::string tau;
    std::string request; // JSON request file overriding the flags
};

void apply_request(ConstructArgs& a, bool geometry) {
    json req = ddfkit::io::parse(read_input(a.request));
    if (!req.is_object()) ddfkit::fail(ddfkit::ErrorKind::ParseError, "request must be a JSON object");
    auto set_int = [&](const char* key, int& slot) {
        if (req.contains(key)) slot = req[key].get<int>();
    };
    set_int("p", a.p);
    set_int("m", a.m);
    set_int("n", a.n);
    set_int("k", a.k);
    auto list_to_csv = [](const json& j) {
        std::string s;
        for (const auto& x : j) s += (s.empty() ? "" : ",") + std::to_string(x.get<int>());
        return s;
    };
    if (req.contains("taps")) a.taps = list_to_csv(req["taps"]);
    const char* poly_key = geometry ? "f" : "poly";
    if (req.contains(poly_key))
        a.poly = req[poly_key].is_string() ? req[poly_key].get<std::string>() : list_to_csv(req[poly_key]);
    if (req.contains("base")) a.base = list_to_csv(req["base"]);
    if (req.contains("frame")) a.frame = list_to_csv(req["frame"]);
}

int run_construct_lg(const Options& opt, ConstructArgs a) {
    if (!a.request.empty()) apply_request(a, false);
    ddfkit::Field field(a.p, a.m);
    std::optional<ddfkit::Poly> poly;
    if (!a.taps.empty()) {
        auto taps = parse_int_list(a.taps, "taps");
        poly = ddfkit::characteristic_poly(ddfkit::LfsrSpec(field, taps));
    } else if (!a.poly.empty()) {
        poly = parse_poly_arg(field, a.poly);
    }
    auto lg = ddfkit::lg_construct(field, a.n, a.k, poly);
    json data{{"field", ddfkit::io::field_to_json(field)},
              {"n", a.n},
              {"k", a.k},
              {"poly", ddfkit::io::poly_to_json(lg.poly)},
              {"taps", ddfkit::lfsr_from_poly(lg.poly).taps},
              {"sequence", ddfkit::io::hop_to_json(lg.sequence)},
              {"family", ddfkit::io::family_to_json(lg.family)},
              {"symbol_map", lg.symbol_map},
              {"max_auto", ddfkit::max_auto(lg.sequence)}};
    emit_report(opt, data, {});
    return 0;
}

int run_construct_geometry(const Options& opt, ConstructArgs a) {
    if (!a.request.empty()) apply_request(a, true);
    ddfkit::Field field(a.p, a.m);
    ddfkit::Poly poly = !a.poly.empty() ? parse_poly_arg(field, a.poly) : [&] {
        auto prims = ddfkit::enumerate_primitive(field, a.n);
        if (prims.empty())
            ddfkit::fail(ddfkit::ErrorKind::NotPrimitive, "no primitive polynomial of this degree");
        return prims.front();
    }();
    ddfkit::ProjPoint base = !a.base.empty()
                                 ? ddfkit::ProjPoint(field, parse_int_list(a.base, "base"))
                                 : ddfkit::impulse_base_point(field, a.n);
    std::optional<ddfkit::Projectivity> frame;
    if (!a.frame.empty())
        frame = ddfkit::coordinate_frame(field, parse_int_list(a.frame, "frame"));
    std::optional<ddfkit::Projectivity> tau;
    if (!a.tau.empty()) tau = ddfkit::Projectivity(parse_matrix_arg(field, a.tau));

    ddfkit::DifferenceFamily family =
        tau ? ddfkit::fmm_construct(*tau, a.k, base, frame)
            : ddfkit::fmm_construct(field, a.n, a.k, poly, base, frame);
    json data{{"field", ddfkit::io::field_to_json(field)},
              {"n", a.n},
              {"k", a.k},
              {"poly", ddfkit::io::poly_to_json(poly)},
              {"base", base.coords()},
              {"family", ddfkit::io::family_to_json(family)}};
    if (!a.frame.empty()) data["frame"] = parse_int_list(a.frame, "frame");
    std::vector<std::string> notes;
    if (tau.has_value())
        notes.push_back("projectivity supplied explicitly; poly field reports the default polynomial");
    emit_report(opt, data, notes);
    return 0;
}

int run_analyze(const Options& opt, const std::string& input) {
    auto family = ddfkit::io::family_from_json(ddfkit::io::parse(read_input(input)));
    auto spec = ddfkit::spectrum(family);
    json data{{"family", ddfkit::io::family_to_json(family)},
              {"class_sizes", family.class_sizes()},
              {"classification", ddfkit::io::classification_to_json(ddfkit::classify(family))},
              {"predicates", ddfkit::io::predicates_to_json(ddfkit::application_predicates(family))},
              {"spectrum", ddfkit::io::spectrum_to_json(family, spec)}};
    emit_report(opt, data, {});
    return 0;
}

int run_correlate(const Options& opt, const std::string& input) {
    auto scheme = ddfkit::io::scheme_from_json(ddfkit::io::parse(read_input(input)));
    json tables = json::array();
    const auto& ws = scheme.words();
    for (size_t i = 0; i < ws.size(); ++i)
        for (size_t j = i; j < ws.size(); ++j) {
            std::vector<int> values;
            for (int t = 0; t < scheme.length(); ++t)
                values.push_back(ddfkit::hamming_correlation(ws[i], ws[j], t));
            tables.push_back(json{{"x", i}, {"y", j}, {"H", values}});
        }
    json autos = json::array();
    for (const auto& w : ws) autos.push_back(ddfkit::max_auto(w));
    json data{{"scheme", ddfkit::io::scheme_to_json(scheme)},
              {"tables", tables},
              {"max_auto", autos},
              {"max_correlation", ddfkit::max_correlation(scheme)}};
    emit_report(opt, data, {});
    return 0;
}

int run_closure(const Options& opt, const std::string& input) {
    auto scheme = ddfkit::io::scheme_from_json(ddfkit::io::parse(read_input(input)));
    auto closure = ddfkit::rotational_closure(scheme);
    std::vector<std::string> notes;
    for (size_t i = 0; i < scheme.words().size(); ++i)
        if (ddfkit::rotational_closure(scheme.words()[i]).size() < scheme.length())
            notes.push_back("word " + std::to_string(i) + " satisfies |rot(w)| < n, so H(w) = n");
    json data{{"scheme", ddfkit::io::scheme_to_json(scheme)},
              {"closure", ddfkit::io::scheme_to_json(closure)},
              {"size", closure.size()},
              {"rotationally_closed_input", ddfkit::is_rotationally_closed(scheme)}};
    if (closure.size() >= 2)
        data["min_distance"] = ddfkit::min_distance(closure);
    else
        data["min_distance"] = nullptr;
    emit_report(opt, data, notes);
    return 0;
}

int run_equiv_ddf(const Options& opt, const std::string& path1, const std::string& path2) {
    auto f1 = ddfkit::io::family_from_json(ddfkit::io::parse(read_input(path1)));
    auto f2 = ddfkit::io::family_from_json(ddfkit::io::parse(read_input(path2)));
    auto witness = ddfkit::ddf_equivalent(f1, f2);
    json data{{"equivalent", witness.has_value()}};
    if (witness) {
        data["a"] = witness->a;
        data["b"] = witness->b;
    }
    emit_report(opt, data, {});
    return 0;
}

int run_equiv_fhs(const Options& opt, const std::string& path1, const std::string& path2) {
    auto f1 = ddfkit::io::scheme_from_json(ddfkit::io::parse(read_input(path1)));
    auto f2 = ddfkit::io::scheme_from_json(ddfkit::io::parse(read_input(path2)));
    auto witness = ddfkit::fhs_equivalent(f1, f2);
    json data{{"equivalent", witness.has_value()}};
    if (witness) {
        data["symbol_perm"] = witness->symbol_perm;
        data["coord_perm"] = json{{"n", witness->coord_perm.n},
                                  {"a", witness->coord_perm.a},
                                  {"b", witness->coord_perm.b}};
        data["coord_cycles"] = witness->coord_perm.to_permutation().to_cycles();
    }
    emit_report(opt, data, {});
    return 0;
}

int run_equiv_perm(const Options& opt, int n, const std::string& text) {
    ddfkit::Permutation gamma = text.find('(') != std::string::npos
                                    ? ddfkit::Permutation::from_cycles(n, text)
                                    : ddfkit::io::permutation_from_json(n, ddfkit::io::parse(text));
    json data{{"n", n},
              {"permutation", ddfkit::io::permutation_to_json(gamma)},
              {"member", ddfkit::is_in_normalizer(gamma)}};
    std::vector<std::string> notes{"positions are 1-indexed in cycle notation"};
    if (ddfkit::is_in_normalizer(gamma)) {
        auto e = ddfkit::rotation_conjugate_exponent(gamma);
        auto phi = ddfkit::phi_gamma(gamma);
        data["conjugate_exponent"] = *e; // gamma rho gamma^-1 = rho^e
        data["phi"] = json{{"a", phi.a}, {"b", phi.b}};
    }
    emit_report(opt, data, notes);
    return 0;
}

int run_primitive(const Options& opt, int p, int m, int n) {
    ddfkit::Field field(p, m);
    auto polys = ddfkit::enumerate_primitive(field, n);
    json list = json::array(), strings = json::array();
    for (const auto& f : polys) {
        list.push_back(ddfkit::io::poly_to_json(f));
        strings.push_back(f.to_string());
    }
    long long v = 1;
    for (int i = 0; i < n; ++i) v *= field.size();
    json data{{"field", ddfkit::io::field_to_json(field)},
              {"n", n},
              {"count", polys.size()},
              {"expected_count", ddfkit::euler_phi(v - 1) / n},
              {"polynomials", list},
              {"strings", strings}};
    emit_report(opt, data, {});
    return 0;
}

int run_verify_paper(const Options& opt) {
    auto results = ddfkit::run_reference_checks();
    json checks = json::array();
    std::vector<std::string> notes;
    for (const auto& r : results) {
        checks.push_back(json{{"id", r.id}, {"ok", r.ok}, {"detail", r.detail}});
        if (!r.ok) notes.push_back("failed: " + r.id);
    }
    bool ok = ddfkit::all_ok(results);
    json report{{"ok", ok}, {"data", {{"checks", checks}}}, {"notes", notes}};
    if (opt.json_output) {
        std::cout << report.dump() << "\n";
    } else {
        for (const auto& r : results)
            std::cout << (r.ok ? "ok   " : "FAIL ") << r.id
                      << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
        std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"disjoint difference families and frequency-hopping sequences"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json_output, "machine-readable single-line JSON output");
    app.add_option("--seed", opt.seed, "reserved; all algorithms are deterministic")
        ->default_val(0);

    // construct
    auto* construct = app.add_subcommand("construct", "run a sequence/family construction");
    construct->require_subcommand(1);
    ConstructArgs lg_args, geo_args;
    auto add_common = [](CLI::App* cmd, ConstructArgs& a) {
        cmd->add_option("--p", a.p, "field characteristic (prime)");
        cmd->add_option("--m", a.m, "extension degree")->default_val(1);
        cmd->add_option("--n", a.n, "register/projective order");
        cmd->add_option("--k", a.k, "window length / flat parameter");
        cmd->add_option("--request", a.request, "JSON request file ('-' for stdin)");
    };
    auto* lg = construct->add_subcommand("lg", "m-sequence window construction");
    add_common(lg, lg_args);
    lg->add_option("--taps", lg_args.taps, "feedback taps c_0,...,c_{n-1}");
    lg->add_option("--poly", lg_args.poly, "characteristic polynomial (string or coefficient list)");
    auto* geo = construct->add_subcommand("geometry", "projective parallel-class construction");
    add_common(geo, geo_args);
    geo->add_option("--poly", geo_args.poly, "primitive polynomial (string or coefficient list)");
    geo->add_option("--base", geo_args.base, "base point coordinates x_0,...,x_n");
    geo->add_option("--frame", geo_args.frame, "coordinate permutation selecting the parallel class");
    geo->add_option("--tau", geo_args.tau, "explicit projectivity matrix rows 'r00,r01,..;r10,..'");

    // analyze / correlate / closure
    std::string analyze_input = "-", correlate_input = "-", closure_input = "-";
    app.add_subcommand("analyze", "spectra, classification and application predicates of a family")
        ->add_option("input", analyze_input, "family JSON file ('-' for stdin)");
    app.add_subcommand("correlate", "Hamming correlation tables of a scheme")
        ->add_option("input", correlate_input, "scheme JSON file ('-' for stdin)");
    app.add_subcommand("closure", "rotational closure and minimum distance")
        ->add_option("input", closure_input, "scheme JSON file ('-' for stdin)");

    // equiv
    auto* equiv = app.add_subcommand("equiv", "equivalence tests");
    equiv->require_subcommand(1);
    std::string equiv_a, equiv_b, perm_text;
    int perm_n = 0;
    auto* equiv_ddf = equiv->add_subcommand("ddf", "difference-family equivalence");
    equiv_ddf->add_option("first", equiv_a, "family JSON file")->required();
    equiv_ddf->add_option("second", equiv_b, "family JSON file")->required();
    auto* equiv_fhs = equiv->add_subcommand("fhs", "scheme equivalence");
    equiv_fhs->add_option("first", equiv_a, "scheme JSON file")->required();
    equiv_fhs->add_option("second", equiv_b, "scheme JSON file")->required();
    auto* equiv_perm = equiv->add_subcommand("perm", "normalizer membership and induced map");
    equiv_perm->add_option("--n", perm_n, "degree")->required();
    equiv_perm->add_option("cycles", perm_text, "cycle notation, e.g. \"(2 5 3)(4 6 7)\"")->required();

    // primitive
    int prim_p = 0, prim_m = 1, prim_n = 0;
    auto* primitive = app.add_subcommand("primitive", "list primitive polynomials");
    primitive->add_option("--p", prim_p, "field characteristic")->required();
    primitive->add_option("--m", prim_m, "extension degree")->default_val(1);
    primitive->add_option("--n", prim_n, "degree")->required();

    auto* verify = app.add_subcommand("verify-paper", "re-derive the built-in golden vectors");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (lg->parsed()) return run_construct_lg(opt, lg_args);
        if (geo->parsed()) return run_construct_geometry(opt, geo_args);
        if (app.get_subcommand("analyze")->parsed()) return run_analyze(opt, analyze_input);
        if (app.get_subcommand("correlate")->parsed()) return run_correlate(opt, correlate_input);
        if (app.get_subcommand("closure")->parsed()) return run_closure(opt, closure_input);
        if (equiv_ddf->parsed()) return run_equiv_ddf(opt, equiv_a, equiv_b);
        if (equiv_fhs->parsed()) return run_equiv_fhs(opt, equiv_a, equiv_b);
        if (equiv_perm->parsed()) return run_equiv_perm(opt, perm_n, perm_text);
        if (primitive->parsed()) return run_primitive(opt, prim_p, prim_m, prim_n);
        if (verify->parsed()) return run_verify_paper(opt);
    } catch (const ddfkit::Error& e) {
        return emit_error(opt, std::string(ddfkit::error_kind_name(e.kind())), e.what());
    } catch (const std::exception& e) {
        return emit_error(opt, "InternalError", e.what());
    }
    return 2;
}
