#include "canclab/suite.hpp"

#include <algorithm>

#include "canclab/corpus.hpp"
#include "canclab/diagram_builder.hpp"
#include "canclab/error.hpp"
#include "canclab/quadric.hpp"
#include "canclab/smallcancel.hpp"

namespace canclab {

std::vector<std::pair<std::string, TwoComplex>> standard_corpus() {
    std::vector<std::pair<std::string, TwoComplex>> out;
    out.emplace_back("torus", make_torus_presentation_complex());
    out.emplace_back("genus2", make_genus_surface_presentation_complex(2));
    out.emplace_back("grid2x2", make_grid(2, 2));
    out.emplace_back("grid3x3", make_grid(3, 3));
    out.emplace_back("grid2x4", make_grid(2, 4));
    out.emplace_back("strip4", make_strip(4));
    out.emplace_back("ngon5", make_ngon(5));
    out.emplace_back("ngon6", make_ngon(6));
    out.emplace_back("fin12", make_fin(12));
    out.emplace_back("fin14", make_fin(14));
    out.emplace_back("pinwheel3", make_pinwheel(3));
    out.emplace_back("pinwheel4", make_pinwheel(4));
    out.emplace_back("cube-corner", make_cube_corner());
    out.emplace_back("torus-grid3x3", make_torus_grid(3, 3));
    out.emplace_back("torus-grid4x3", make_torus_grid(4, 3));
    out.emplace_back("domino", make_domino());
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        out.emplace_back("grid-sub" + std::to_string(seed),
                         make_random_grid_subcomplex(3, 4, seed));
    }
    return out;
}

SuiteResult suite_gauss_bonnet(std::uint64_t seed, int count) {
    SuiteResult r{"gauss-bonnet"};
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        int area = i % 31;
        auto d = random_square_diagram(rng.next(), area);
        ++r.instances;
        if (!validate_diagram(d).ok()) {
            r.fail("instance " + std::to_string(i) + ": invalid diagram");
            continue;
        }
        if (gauss_bonnet_audit(d).total.value != 4) {
            r.fail("instance " + std::to_string(i) + ": curvature total is not 4");
        }
    }
    return r;
}

SuiteResult suite_singular(std::uint64_t seed, int count) {
    SuiteResult r{"singular"};
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        int area = i % 31;
        auto d = random_square_diagram(rng.next(), area);
        ++r.instances;
        auto rep = singular_identity_check(d);
        auto tree = modified_cut_tree(d);
        if (!rep.ok()) {
            r.fail("instance " + std::to_string(i) + ": singular vertex identity fails");
        }
        if (!tree.is_tree) {
            r.fail("instance " + std::to_string(i) + ": modified cut graph is not a tree");
        }
    }
    return r;
}

namespace {

std::vector<SignedEdge> boundary_labels(const DiscDiagram& d) {
    std::vector<SignedEdge> out;
    for (DartId dart : boundary_cycle(d)) out.push_back(d.dart_label(dart));
    return out;
}

// the fin instances that make rules A and B fire
std::vector<DiscDiagram> constructed_quadric_instances(const Quadrization& y,
                                                       const TwoComplex& fin) {
    const auto& yc = y.as_complex();
    auto node_v = [&](const char* name) { return y.node_of_vertex(*fin.find_vertex(name)); };
    auto node_f = [&](const char* name) { return y.node_of_face(*fin.find_face(name)); };
    int v0 = node_v("x0"), v1 = node_v("x1"), v2 = node_v("x2"), v10 = node_v("x10");
    int nP = node_f("P"), nF = node_f("F"), nR = node_f("R");

    auto anchor_from = [&](FaceId f, int from, int to) {
        for (bool rev : {false, true}) {
            for (int off = 0; off < 4; ++off) {
                BoundaryAnchor a{f, off, rev};
                if (yc.tail_of(anchor_read(yc, a, 0)) == from &&
                    yc.head_of(anchor_read(yc, a, 0)) == to) {
                    return a;
                }
            }
        }
        throw Error("suite: corner not found");
    };
    auto attach = [&](DiagramBuilder& b, int pos, int t_len, const BoundaryAnchor& a) {
        std::vector<SignedEdge> exposed;
        std::vector<VertexId> chain;
        for (int j = 0; j < 4 - t_len; ++j) exposed.push_back(anchor_read(yc, a, 3 - j).inverse());
        for (std::size_t j = 0; j + 1 < exposed.size(); ++j) chain.push_back(yc.head_of(exposed[j]));
        b.attach_face(pos, t_len, exposed, chain, a.face);
    };

    std::vector<DiscDiagram> out;
    {
        // valence-2 interior vertex: rule A fires once
        auto s1 = *y.square_index(v0, nP, v1, nF);
        auto s2 = *y.square_index(v0, nP, v1, nR);
        DiagramBuilder b(yc.tail_of(anchor_read(yc, anchor_from(s1, v0, nP), 0)));
        attach(b, 0, 0, anchor_from(s1, v0, nP));
        int pos = -1;
        for (int i = 0; i < 4; ++i) {
            if (b.boundary_vertex_label((i + 1) % 4) == nP) pos = i;
        }
        bool attached = false;
        for (bool rev : {false, true}) {
            for (int off = 0; off < 4 && !attached; ++off) {
                BoundaryAnchor cand{s2, off, rev};
                if (anchor_read(yc, cand, 0) == b.boundary_label(pos) &&
                    anchor_read(yc, cand, 1) == b.boundary_label((pos + 1) % 4)) {
                    attach(b, pos, 2, cand);
                    attached = true;
                }
            }
        }
        if (!attached) throw Error("suite: rule A instance not constructible");
        out.push_back(b.build());
    }
    {
        // valence-3 interior vertex: rule B fires once
        auto s1 = *y.square_index(v0, nP, v1, nF);
        auto s2 = *y.square_index(v0, nF, v10, nR);
        auto s3 = *y.square_index(v0, nR, v2, nP);
        DiagramBuilder b(v0);
        attach(b, 0, 0, anchor_from(s1, v0, nP));
        attach(b, 0, 1, anchor_from(s2, v0, nF));
        attach(b, 5, 2, anchor_from(s3, nP, v0));
        out.push_back(b.build());
    }
    return out;
}

}  // namespace

SuiteResult suite_prop_quad(std::uint64_t seed, int count) {
    SuiteResult r{"prop-quad"};
    Rng rng(seed);

    std::vector<Quadrization> bases;
    bases.push_back(quadrize(make_grid(2, 2)));
    bases.push_back(quadrize(make_grid(3, 3)));
    bases.push_back(quadrize(make_grid(2, 4)));
    for (std::uint64_t s = 1; s <= 3; ++s) {
        auto sub = make_random_grid_subcomplex(3, 3, s);
        auto y = quadrize(sub);
        if (!y.squares().empty()) bases.push_back(std::move(y));
    }

    auto run_one = [&](const Quadrization& y, const DiscDiagram& d, long index) {
        ++r.instances;
        auto before = boundary_labels(d);
        try {
            auto m = minimize_diagram(y, d);
            if (!cat0_square_check(m).ok) {
                r.fail("instance " + std::to_string(index) + ": output not CAT(0)");
            } else if (boundary_labels(m) != before) {
                r.fail("instance " + std::to_string(index) + ": boundary changed");
            } else if (!validate_labels(m, y.as_complex()).ok()) {
                r.fail("instance " + std::to_string(index) + ": labels broken");
            }
        } catch (const Error& e) {
            r.fail("instance " + std::to_string(index) + ": " + e.what());
        }
    };

    for (int i = 0; i < count; ++i) {
        const auto& y = bases[i % bases.size()];
        auto d = random_quadric_diagram(y, rng.next(), 2 + i % 12);
        run_one(y, d, i);
    }
    // constructed instances over the fin quadrization exercise both rules
    auto fin = make_fin(12);
    auto yfin = quadrize(fin);
    for (const auto& d : constructed_quadric_instances(yfin, fin)) {
        run_one(yfin, d, r.instances);
    }
    return r;
}

SuiteResult suite_dlwc(int max_len) {
    SuiteResult r{"dlwc"};
    for (const auto& [name, c] : standard_corpus()) {
        auto cls = classify(c);
        if (!cls.c4 || !cls.t4) continue;
        auto y = quadrize(c);
        auto found = find_dlwc(y, max_len);
        for (const auto& l : found) {
            ++r.instances;
            auto res = dlwc_resolve(y, l);
            if (res.case_id < 1 || res.case_id > 5) {
                r.fail(name + ": configuration of length " + std::to_string(l.length()) +
                       " resolves to no case");
            }
        }
    }

    // negative control: the bare scaffold without diagonals must violate
    std::vector<std::pair<int, int>> edges = {{0, 4}, {1, 5}, {2, 6}, {0, 5}, {1, 4},
                                              {2, 5}, {1, 6}, {3, 4}, {3, 6}};
    std::vector<std::array<int, 4>> squares = {{0, 4, 1, 5}, {1, 5, 2, 6}, {3, 4, 1, 6}};
    auto control = Quadrization::from_parts(4, 4, edges, squares);
    bool violation_seen = false;
    for (const auto& l : find_dlwc(control, 2)) {
        ++r.instances;
        if (dlwc_resolve(control, l).case_id == 0) violation_seen = true;
    }
    if (!violation_seen) r.fail("negative control produced no violation verdict");
    return r;
}

SuiteResult suite_sng(std::uint64_t seed, int count) {
    SuiteResult r{"sng"};
    // the hypothesis family: chains of folded blocks
    for (int m = 1; m <= 40; ++m) {
        ++r.instances;
        auto d = make_pita_chain(m);
        auto rep = sng_check(d);
        if (!rep.hypothesis_holds) {
            r.fail("chain " + std::to_string(m) + ": hypothesis does not hold");
        } else if (rep.boundary_total.value > 0) {
            r.fail("chain " + std::to_string(m) + ": boundary total positive");
        }
    }
    // no diagram that is CAT(0) in the interior satisfies the hypothesis
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        auto d = random_square_diagram(rng.next(), i % 31);
        ++r.instances;
        auto audit = gauss_bonnet_audit(d);
        auto rep = sng_check(d);
        if (rep.hypothesis_holds && rep.boundary_total.value > 0) {
            r.fail("instance " + std::to_string(i) + ": hypothesis with positive boundary total");
        }
        if (audit.interior_cat0 && d.area() > 0 && rep.hypothesis_holds) {
            r.fail("instance " + std::to_string(i) + ": CAT(0) diagram satisfies the hypothesis");
        }
    }
    for (auto [rows, cols] : {std::pair{1, 1}, {2, 2}, {3, 3}, {2, 5}}) {
        ++r.instances;
        if (sng_check(make_grid_diagram(rows, cols)).hypothesis_holds) {
            r.fail("grid diagram satisfies the hypothesis");
        }
    }
    return r;
}

SuiteResult suite_helly() {
    SuiteResult r{"helly"};
    for (const auto& [name, c] : standard_corpus()) {
        auto cls = classify(c);
        if (!cls.c4 || !cls.t4) continue;
        // the intersection propositions hold for simply connected complexes;
        // surface quotients are out of hypothesis
        if (first_betti_mod2(c) != 0) continue;
        ++r.instances;
        if (!strong_helly_check(c).ok()) {
            r.fail(name + ": strong Helly violation");
        }
        // every intersecting pair of faces meets in a connected set
        const int nf = static_cast<int>(c.face_count());
        for (FaceId f1 = 0; f1 < nf; ++f1) {
            for (FaceId f2 = f1 + 1; f2 < nf; ++f2) {
                auto inter = face_intersection(c, f1, f2);
                if (!inter.is_empty && !inter.is_connected) {
                    r.fail(name + ": disconnected intersection of " + c.face_name(f1) + "," +
                           c.face_name(f2));
                }
            }
        }
    }
    return r;
}

SuiteResult suite_torsion() {
    SuiteResult r{"torsion"};
    auto expect = [&](const char* text, std::vector<std::tuple<std::string, int, std::vector<int>>> want) {
        ++r.instances;
        auto cat = torsion_catalog(Presentation::parse(text));
        if (cat.size() != want.size()) {
            r.fail(std::string(text) + ": wrong catalog size");
            return;
        }
        for (std::size_t i = 0; i < cat.size(); ++i) {
            auto& [root, q, orders] = want[i];
            if (cat[i].root.str() != root || cat[i].exponent != q ||
                cat[i].candidate_orders != orders) {
                r.fail(std::string(text) + ": wrong catalog entry");
            }
        }
    };
    expect("gens: a b\nrels: abAB", {});
    expect("gens: a b\nrels: abab", {{"ab", 2, {2}}});
    expect("gens: a\nrels: aaaaaa", {{"a", 6, {2, 3, 6}}});
    expect("gens: a b c\nrels: abcabcabc", {{"abc", 3, {3}}});
    expect("gens: a b\nrels: abab aaaa", {{"ab", 2, {2}}, {"a", 4, {2, 4}}});
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"gauss-bonnet", "prop-quad", "dlwc", "singular",
                                                "sng", "helly", "torsion"};
    return names;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
    if (name == "gauss-bonnet") return suite_gauss_bonnet(seed);
    if (name == "prop-quad") return suite_prop_quad(seed);
    if (name == "dlwc") return suite_dlwc();
    if (name == "singular") return suite_singular(seed);
    if (name == "sng") return suite_sng(seed);
    if (name == "helly") return suite_helly();
    if (name == "torsion") return suite_torsion();
    throw Error("unknown suite '" + std::string(name) + "'");
}

}  // namespace canclab
