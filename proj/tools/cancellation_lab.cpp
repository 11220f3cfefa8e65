// cancellation-lab: small cancellation toolkit command line.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "canclab/action.hpp"
#include "canclab/complex_io.hpp"
#include "canclab/corpus.hpp"
#include "canclab/diagram_io.hpp"
#include "canclab/quadric.hpp"
#include "canclab/report.hpp"
#include "canclab/search.hpp"
#include "canclab/smallcancel.hpp"
#include "canclab/suite.hpp"

using namespace canclab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string tok;
        if (ls >> tok) return tok == "gens:";
    }
    return false;
}

std::uint64_t env_seed(std::uint64_t fallback) {
    if (const char* s = std::getenv("CANCELLATION_LAB_SEED")) {
        return std::strtoull(s, nullptr, 10);
    }
    return fallback;
}

void emit(const Report& rep, bool json) {
    if (json) {
        rep.render_json(std::cout);
    } else {
        rep.render_kv(std::cout);
    }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_check(const std::string& path, int p, int q, int oracle_area, bool json, bool thicken) {
    std::string text = slurp(path);
    Report rep;
    rep.input_digest = fnv1a64_hex(text);

    TwoComplex complex{0, {}, {}};
    if (looks_like_presentation(text)) {
        auto pres = Presentation::parse(text);
        rep.add("input-kind", "presentation " + pres.str());
        complex = build_presentation_complex(pres);
    } else {
        rep.add("input-kind", "complex");
        complex = parse_complex(text);
    }
    auto validation = validate_complex(complex);
    if (!validation.ok()) {
        rep.add("valid", "no", {validation.issues[0].code + ": " + validation.issues[0].detail});
        emit(rep, json);
        return kExitCheckFailed;
    }
    rep.add("valid", "yes");

    auto run_checks = [&](const TwoComplex& c, const std::string& prefix) {
        auto pieces = compute_pieces(c);
        auto cp = check_Cp(c, pieces, p);
        std::vector<std::string> cpw;
        for (const auto& w : cp.witnesses) {
            cpw.push_back("face " + c.face_name(w.face) + " covered by " +
                          std::to_string(w.cover) + " pieces");
        }
        rep.add(prefix + "C(" + std::to_string(p) + ")", yes_no(cp.holds), cpw);

        auto tq = check_Tq_link(c, q);
        std::vector<std::string> tqw;
        for (const auto& w : tq.witnesses) {
            tqw.push_back("vertex " + c.vertex_name(w.vertex) + " link cycle of length " +
                          std::to_string(w.cycle_nodes.size()));
        }
        rep.add(prefix + "T(" + std::to_string(q) + ")", yes_no(tq.holds), tqw);

        auto cls = classify(c);
        rep.add(prefix + "max-p",
                std::to_string(cls.max_p) +
                    (cls.max_p_vacuous ? " (no face has a piece cover)" : ""));
        rep.add(prefix + "max-q", cls.max_q ? std::to_string(*cls.max_q) : "unbounded");

        auto witness = falsify_Tq_by_diagrams(c, q, oracle_area);
        rep.add(prefix + "T(" + std::to_string(q) + ")-diagram-oracle",
                witness ? "witness of internal valence " + std::to_string(witness->internal_valence)
                        : "none found up to area " + std::to_string(oracle_area));
        if (tq.holds && witness.has_value()) {
            rep.add(prefix + "Tq-oracle-disagreement", "yes",
                    {"link criterion holds but a reduced diagram witness exists"});
        }

        int betti = first_betti_mod2(c);
        rep.add(prefix + "first-betti-mod2", std::to_string(betti));

        long pairs = 0, disconnected = 0;
        for (FaceId f1 = 0; f1 < static_cast<int>(c.face_count()); ++f1) {
            for (FaceId f2 = f1 + 1; f2 < static_cast<int>(c.face_count()); ++f2) {
                auto inter = face_intersection(c, f1, f2);
                if (inter.is_empty) continue;
                ++pairs;
                if (!inter.is_connected) ++disconnected;
            }
        }
        rep.add(prefix + "intersections-connected",
                std::to_string(pairs - disconnected) + "/" + std::to_string(pairs) +
                    (betti ? " (not simply connected: informative only)" : ""));
        auto helly = strong_helly_check(c);
        std::vector<std::string> hw;
        for (const auto& v : helly.violations) {
            hw.push_back("faces " + c.face_name(v.faces[0]) + "," + c.face_name(v.faces[1]) + "," +
                         c.face_name(v.faces[2]));
        }
        rep.add(prefix + "strong-helly",
                yes_no(helly.ok()) + " (" + std::to_string(helly.triples_checked) + " triples)" +
                    (betti ? " (not simply connected: informative only)" : ""),
                hw);
        bool intersection_props_ok = betti != 0 || (disconnected == 0 && helly.ok());
        return cp.holds && tq.holds && intersection_props_ok;
    };

    bool pass = run_checks(complex, "");
    if (thicken) {
        auto thick = thicken_free_edges(complex);
        rep.add("thickened", std::to_string(thick.face_count() - complex.face_count()) +
                                 " free edges thickened");
        run_checks(thick, "thickened-");
    }
    emit(rep, json);
    return pass ? kExitPass : kExitCheckFailed;
}

int cmd_torsion(const std::string& path, bool json) {
    std::string text = slurp(path);
    Report rep;
    rep.input_digest = fnv1a64_hex(text);
    auto pres = Presentation::parse(text);
    rep.add("presentation", pres.str());

    auto complex = build_presentation_complex(pres);
    auto cls = classify(complex);
    bool hypotheses = cls.c4 && cls.t4;
    rep.add("C(4)-T(4)", yes_no(hypotheses));
    if (hypotheses) {
        rep.add("asphericity", "assumed (small cancellation presentation)");
    } else {
        rep.add("banner", "hypotheses not verified: catalog is formal");
    }

    auto catalog = torsion_catalog(pres);
    if (catalog.empty()) {
        rep.add("torsion", hypotheses ? "torsion-free (assuming aspherical presentation)"
                                      : "no proper power relators");
    } else {
        for (const auto& entry : catalog) {
            std::string orders;
            for (std::size_t i = 0; i < entry.candidate_orders.size(); ++i) {
                orders += (i ? "," : "") + std::to_string(entry.candidate_orders[i]);
            }
            rep.add("relator-" + std::to_string(entry.relator_index),
                    "root " + entry.root.str() + " exponent " + std::to_string(entry.exponent) +
                        " candidate-orders {" + orders + "}");
        }
    }
    rep.add("note", "catalog is per-presentation, not per-group");
    emit(rep, json);
    return kExitPass;
}

int cmd_quadrize(const std::string& path, int find_dlwc_len, const std::string& out_path) {
    std::string text = slurp(path);
    auto complex = parse_complex(text);
    auto y = quadrize(complex);

    std::ostringstream out;
    out << "# quadrization-of: " << fnv1a64_hex(text) << "\n";
    write_complex(out, y.as_complex());

    auto cls = classify(complex);
    if (cls.c4 && cls.t4) {
        auto rep = verify_square_piece_correspondence(complex, y);
        out << "# square-piece-correspondence: " << (rep.ok() ? "ok" : "violated") << "\n";
        for (const auto& issue : rep.issues) out << "#   " << issue << "\n";
    }
    if (find_dlwc_len > 0) {
        auto found = find_dlwc(y, find_dlwc_len);
        out << "# double-ladders-with-cap: " << found.size() << "\n";
        for (const auto& l : found) {
            auto res = dlwc_resolve(y, l);
            out << "# dlwc length " << l.length() << " cap " << y.as_complex().vertex_name(l.cap)
                << " case " << res.case_id << (res.case_id == 0 ? " (violation)" : "") << "\n";
        }
    }
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path);
        f << out.str();
    }
    return kExitPass;
}

int cmd_diagram_audit(const std::string& path, const std::string& complex_path, bool json) {
    std::string text = slurp(path);
    Report rep;
    rep.input_digest = fnv1a64_hex(text);

    std::optional<TwoComplex> target;
    if (!complex_path.empty()) target = parse_complex(slurp(complex_path));
    auto d = parse_diagram(text, target ? &*target : nullptr);

    auto validation = validate_diagram(d);
    rep.add("valid", yes_no(validation.ok()), validation.issues);
    if (!validation.ok()) {
        emit(rep, json);
        return kExitCheckFailed;
    }
    rep.add("area", std::to_string(d.area()));
    rep.add("boundary-length", std::to_string(boundary_cycle(d).size()));

    auto audit = gauss_bonnet_audit(d);
    rep.add("curvature-total", std::to_string(audit.total.value) + " half-pi");
    rep.add("boundary-curvature-total", std::to_string(audit.boundary_total.value) + " half-pi");
    rep.add("interior-cat0", yes_no(audit.interior_cat0));
    rep.add("gauss-bonnet", yes_no(audit.pass));

    auto cuts = cut_and_singular_vertices(d);
    rep.add("cut-vertices", std::to_string(cuts.cut.size()));
    rep.add("singular-vertices", std::to_string(cuts.singular.size()));
    auto tree = modified_cut_tree(d);
    rep.add("modified-cut-tree",
            std::to_string(tree.singular.size()) + "+" + std::to_string(tree.component_count) +
                " nodes, tree: " + yes_no(tree.is_tree));
    auto singular = singular_identity_check(d);
    rep.add("singular-identity", yes_no(singular.ok()));
    auto sng = sng_check(d);
    rep.add("sng-hypothesis", yes_no(sng.hypothesis_holds));
    if (sng.hypothesis_holds) {
        rep.add("sng-conclusion", yes_no(sng.conclusion_holds),
                {"boundary total " + std::to_string(sng.boundary_total.value) + " half-pi"});
    }
    if (target && d.labeled()) {
        auto labels = validate_labels(d, *target);
        rep.add("labels", yes_no(labels.ok()), labels.issues);
        if (labels.ok()) {
            auto red = is_reduced(d, *target);
            rep.add("reduced", yes_no(red.reduced));
        }
    }
    emit(rep, json);
    bool pass = audit.pass && singular.ok();
    return pass ? kExitPass : kExitCheckFailed;
}

int cmd_diagram_search(const std::string& complex_path, const std::string& word,
                       int area_bound, const std::string& emit_path, bool json) {
    std::string ctext = slurp(complex_path);
    auto complex = parse_complex(ctext);
    std::vector<std::string> tokens;
    {
        std::istringstream ws(word);
        std::string tok;
        while (ws >> tok) tokens.push_back(tok);
    }
    if (tokens.empty()) throw ParseError("empty boundary word", 0, 0);
    std::vector<SignedEdge> w;
    for (const auto& tok : tokens) {
        if (tok.empty()) throw Error("empty word token");
        bool rev = tok[0] == '-';
        std::string name = (tok[0] == '+' || tok[0] == '-') ? tok.substr(1) : tok;
        auto e = complex.find_edge(name);
        if (!e) throw Error("unknown edge '" + name + "' in word");
        w.push_back({*e, rev});
    }
    Report rep;
    rep.input_digest = fnv1a64_hex(ctext);
    auto result = search_minimal_diagram(complex, w, area_bound);
    if (!result.found) {
        rep.add("minimal-area", "none up to bound " + std::to_string(area_bound));
        emit(rep, json);
        return kExitCheckFailed;
    }
    rep.add("minimal-area", std::to_string(result.area));
    rep.add("certificate", "search exhausted every smaller area");
    if (!emit_path.empty()) {
        std::ofstream f(emit_path);
        write_diagram(f, *result.diagram, &complex);
        rep.add("diagram-written", emit_path);
    }
    emit(rep, json);
    return kExitPass;
}

int cmd_action(const std::string& complex_path, const std::string& action_path, bool json,
               std::size_t closure_bound) {
    std::string ctext = slurp(complex_path);
    auto complex = parse_complex(ctext);
    std::ifstream in(action_path);
    if (!in) throw Error("cannot open '" + action_path + "'");
    auto generators = read_action_file(in, complex);
    if (generators.empty()) throw Error("action file defines no automorphisms");

    Report rep;
    rep.input_digest = fnv1a64_hex(ctext);
    for (const auto& [name, aut] : generators) {
        auto v = validate_automorphism(complex, aut);
        if (!v.ok()) {
            rep.add("automorphism-" + name, "invalid", {v.issues[0].detail});
            emit(rep, json);
            return kExitCheckFailed;
        }
        rep.add("automorphism-" + name, "valid");
    }

    GroupAction action(complex, generators, closure_bound);
    rep.add("closure", std::to_string(action.size()) +
                           (action.complete() ? " elements" : " elements (truncated)"));
    if (!action.complete()) {
        rep.add("verdict", "closure truncated: global checks refused");
        emit(rep, json);
        return kExitCheckFailed;
    }

    auto freeness = free_on_1_skeleton(action);
    rep.add("free-on-1-skeleton", yes_no(freeness.free),
            freeness.free ? std::vector<std::string>{}
                          : std::vector<std::string>{
                                "element " + action.word_of(*freeness.witness_element) +
                                " fixes " + freeness.witness_cell});
    auto elliptic = locally_elliptic_check(action);
    std::vector<std::string> ew;
    for (auto i : elliptic.witnesses) {
        ew.push_back("element " + action.word_of(i) + " fixes no cell");
    }
    for (auto i : elliptic.inversion_only) {
        ew.push_back("element " + action.word_of(i) + " fixes only a mid-edge point");
    }
    rep.add("locally-elliptic", yes_no(elliptic.locally_elliptic), ew);

    bool pass = true;
    auto cls = classify(complex);
    rep.add("base-C(4)-T(4)", yes_no(cls.c4 && cls.t4));
    if (freeness.free && elliptic.locally_elliptic && cls.c4 && cls.t4) {
        auto y = quadrize(complex);
        auto uniq = fix_uniqueness_check(complex, y, action);
        rep.add("fix-uniqueness", yes_no(uniq.ok));
        pass = pass && uniq.ok;

        std::optional<FaceId> global;
        for (FaceId f = 0; f < static_cast<int>(complex.face_count()) && !global; ++f) {
            bool all = true;
            for (std::size_t i = 0; i < action.size() && all; ++i) {
                if (action.element(i).face_map[f] != f) all = false;
            }
            if (all) global = f;
        }
        rep.add("global-fixed-face", global ? complex.face_name(*global) : "none");
        pass = pass && global.has_value();

        for (std::size_t i = 1; i < action.size() && i <= 3; ++i) {
            auto fixed = fixed_sets(complex, y, action.element(i));
            if (fixed.y_nodes.size() == 1) {
                auto sep = separation_exponent(y, action.element(i), fixed.y_nodes[0], 16);
                rep.add("separation-exponent-" + action.word_of(i),
                        sep.exponent ? std::to_string(*sep.exponent) +
                                           (sep.corkv_ok ? "" : " (link distance check failed)")
                                     : "none up to 16");
            }
        }
    }
    emit(rep, json);
    return pass ? kExitPass : kExitCheckFailed;
}

int cmd_generate(const std::string& family, std::vector<int> params, std::uint64_t seed,
                 const std::string& out_path, const std::string& action_out) {
    auto param = [&](std::size_t i, int fallback) {
        return i < params.size() ? params[i] : fallback;
    };
    TwoComplex c{0, {}, {}};
    std::vector<std::pair<std::string, Automorphism>> auts;
    if (family == "grid") {
        c = make_grid(param(0, 3), param(1, 3));
    } else if (family == "strip") {
        c = make_strip(param(0, 4));
    } else if (family == "ngon") {
        int n = param(0, 6);
        c = make_ngon(n);
        auts.emplace_back("r", ngon_rotation(c, n, 1));
    } else if (family == "torus") {
        c = make_torus_presentation_complex();
    } else if (family == "torus-grid") {
        int m = param(0, 3), n = param(1, 3);
        c = make_torus_grid(m, n);
        auts.emplace_back("t", torus_grid_translation(c, m, n));
    } else if (family == "genus") {
        c = make_genus_surface_presentation_complex(param(0, 2));
    } else if (family == "cube-corner") {
        c = make_cube_corner();
    } else if (family == "random-grid-subcomplex") {
        c = make_random_grid_subcomplex(param(0, 3), param(1, 4), seed);
    } else if (family == "fin") {
        c = make_fin(param(0, 12));
    } else if (family == "pinwheel") {
        int m = param(0, 4);
        c = make_pinwheel(m);
        auts.emplace_back("r", pinwheel_rotation(c, m));
    } else if (family == "domino") {
        c = make_domino();
        auts.emplace_back("s", domino_swap(c));
    } else {
        std::cerr << "unknown family '" << family << "'\n";
        return kExitUsage;
    }

    std::ostringstream out;
    out << "# family: " << family;
    for (int prm : params) out << " " << prm;
    out << " seed " << seed << "\n";
    write_complex(out, c);
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path);
        f << out.str();
    }
    if (!auts.empty() && !action_out.empty()) {
        std::ofstream f(action_out);
        write_action_file(f, c, auts);
    }
    return kExitPass;
}

int cmd_suite(const std::string& name, bool json) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::cerr << "unknown suite '" << name << "'; available:";
        for (const auto& n : names) std::cerr << " " << n;
        std::cerr << "\n";
        return kExitUsage;
    }
    auto seed = env_seed(20240501);
    Report rep;
    rep.has_seed = true;
    rep.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    auto result = run_suite(name, seed);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    rep.add("suite", result.name);
    rep.add("instances", std::to_string(result.instances));
    rep.add("failures", std::to_string(result.failures), result.failure_details);
    emit(rep, json);
    std::cerr << "suite " << name << " took " << elapsed << " ms\n";
    return result.ok() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small cancellation toolkit: presentations, 2-complexes, pieces, "
                 "disc diagrams, quadrizations and group actions"};
    app.require_subcommand(1);

    std::string input, complex_path, action_path, out_path, action_out, emit_path, suite_name,
        family, word;
    std::vector<int> params;
    int p = 4, q = 4, oracle_area = 6, area_bound = 6, dlwc_len = 0;
    std::uint64_t seed = 1;
    std::size_t closure_bound = 10000;
    bool json = false, thicken = false;

    auto* check = app.add_subcommand("check", "classify a presentation or complex");
    check->add_option("input", input)->required();
    check->add_option("--p", p, "C(p) to check");
    check->add_option("--q", q, "T(q) to check");
    check->add_option("--oracle-area", oracle_area, "area bound for the diagram oracle");
    check->add_flag("--json", json);
    check->add_flag("--thicken", thicken, "also classify with free edges thickened");

    auto* torsion = app.add_subcommand("torsion", "torsion catalog of a presentation");
    torsion->add_option("input", input)->required();
    torsion->add_flag("--json", json);

    auto* quad = app.add_subcommand("quadrize", "emit the quadrization of a complex");
    quad->add_option("input", input)->required();
    quad->add_option("--find-dlwc", dlwc_len, "search double ladders with cap up to this length");
    quad->add_option("--out", out_path);

    auto* diagram = app.add_subcommand("diagram", "disc diagram tools");
    diagram->require_subcommand(1);
    auto* audit = diagram->add_subcommand("audit", "validate and audit a diagram file");
    audit->add_option("input", input)->required();
    audit->add_option("--complex", complex_path, "target complex for labels");
    audit->add_flag("--json", json);
    auto* search = diagram->add_subcommand("search", "minimal-area diagram for a boundary word");
    search->add_option("complex", complex_path)->required();
    search->add_option("--word", word, "signed edge names in one string, e.g. '+h0_0 -u0_1'")
        ->required();
    search->add_option("--area-bound", area_bound);
    search->add_option("--emit-diagram", emit_path);
    search->add_flag("--json", json);

    auto* action = app.add_subcommand("action", "verify a group action on a complex");
    action->add_option("complex", complex_path)->required();
    action->add_option("action-file", action_path)->required();
    action->add_option("--closure-bound", closure_bound);
    action->add_flag("--json", json);

    auto* generate = app.add_subcommand("generate", "emit a corpus complex");
    generate->add_option("family", family)->required();
    generate->add_option("params", params, "family parameters");
    generate->add_option("--seed", seed);
    generate->add_option("--out", out_path);
    generate->add_option("--action-out", action_out);

    auto* suite = app.add_subcommand("suite", "run a property suite");
    suite->add_option("name", suite_name)->required();
    suite->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*check) return cmd_check(input, p, q, oracle_area, json, thicken);
        if (*torsion) return cmd_torsion(input, json);
        if (*quad) return cmd_quadrize(input, dlwc_len, out_path);
        if (*audit) return cmd_diagram_audit(input, complex_path, json);
        if (*search) return cmd_diagram_search(complex_path, word, area_bound, emit_path, json);
        if (*action) return cmd_action(complex_path, action_path, json, closure_bound);
        if (*generate) return cmd_generate(family, params, seed, out_path, action_out);
        if (*suite) return cmd_suite(suite_name, json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
