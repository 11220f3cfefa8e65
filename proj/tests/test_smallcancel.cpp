#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "canclab/corpus.hpp"
#include "canclab/smallcancel.hpp"

using namespace canclab;

namespace {

// Definition-based piece oracle, written against reading strings rather than
// anchors. An occurrence is a (face, offset, dir) whose reading starts with
// the path; two occurrences are identified iff their full boundary readings
// coincide letter for letter.
std::string reading(const TwoComplex& c, FaceId f, int off, bool rev, int len) {
    std::string out;
    for (int t = 0; t < len; ++t) {
        SignedEdge s = rev ? c.boundary_at(f, off - t).inverse() : c.boundary_at(f, off + t);
        out += std::to_string(s.edge) + (s.reversed ? "-" : "+") + ",";
    }
    return out;
}

bool oracle_is_piece(const TwoComplex& c, FaceId f, int off, int len) {
    std::string path = reading(c, f, off, false, len);
    struct Occ {
        FaceId f;
        int off;
        bool rev;
    };
    std::vector<Occ> occs;
    for (FaceId g = 0; g < static_cast<int>(c.face_count()); ++g) {
        for (int o = 0; o < c.face_size(g); ++o) {
            for (bool rev : {false, true}) {
                if (c.face_size(g) >= len && reading(c, g, o, rev, len) == path) {
                    occs.push_back({g, o, rev});
                }
            }
        }
    }
    // count classes under full-reading equality
    std::set<std::string> classes;
    for (const auto& occ : occs) {
        classes.insert(reading(c, occ.f, occ.off, occ.rev, c.face_size(occ.f)));
    }
    return classes.size() >= 2;
}

int oracle_max_len(const TwoComplex& c, FaceId f, int off) {
    int best = 0;
    for (int len = 1; len <= c.face_size(f); ++len) {
        if (oracle_is_piece(c, f, off, len)) best = len;
    }
    return best;
}

}  // namespace

TEST_CASE("torus pieces are exactly the single edges") {
    auto torus = make_torus_presentation_complex();
    auto cat = compute_pieces(torus);
    for (int off = 0; off < 4; ++off) {
        CHECK(cat.max_len[0][off] == 1);
    }
    CHECK(cat.maximal.size() == 4);
    auto cover = min_piece_cover(torus, cat, 0);
    CHECK(cover.coverable);
    CHECK(cover.count == 4);
}

TEST_CASE("piece tables match the definition oracle") {
    for (const TwoComplex& c : {make_torus_presentation_complex(), make_grid(2, 2),
                                make_genus_surface_presentation_complex(2), make_fin(12),
                                make_cube_corner(), make_strip(3)}) {
        auto cat = compute_pieces(c);
        for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
            for (int off = 0; off < c.face_size(f); ++off) {
                CAPTURE(f);
                CAPTURE(off);
                CHECK(cat.max_len[f][off] == oracle_max_len(c, f, off));
            }
        }
    }
}

TEST_CASE("grid pieces are single interior edges") {
    auto grid = make_grid(3, 3);
    auto cat = compute_pieces(grid);
    for (FaceId f = 0; f < static_cast<int>(grid.face_count()); ++f) {
        for (int off = 0; off < 4; ++off) {
            CHECK(cat.max_len[f][off] <= 1);  // no 2-edge piece exists
            bool shared = grid.faces_of_edge(grid.boundary_at(f, off).edge).size() == 2;
            CHECK(cat.max_len[f][off] == (shared ? 1 : 0));
        }
    }
    // center face is fully covered by pieces
    auto cover = min_piece_cover(grid, cat, *grid.find_face("c1_1"));
    CHECK(cover.coverable);
    CHECK(cover.count == 4);
    // corner face has uncovered boundary edges
    auto corner = min_piece_cover(grid, cat, *grid.find_face("c0_0"));
    CHECK_FALSE(corner.coverable);
}

TEST_CASE("period symmetry kills the abab self-overlaps") {
    auto c = build_presentation_complex(Presentation::parse("gens: a b\nrels: abab"));
    auto cat = compute_pieces(c);
    for (int off = 0; off < 4; ++off) CHECK(cat.max_len[0][off] == 0);
    CHECK_FALSE(min_piece_cover(c, cat, 0).coverable);
}

TEST_CASE("C(p) on the golden complexes") {
    auto torus = make_torus_presentation_complex();
    auto cat = compute_pieces(torus);
    CHECK(check_Cp(torus, cat, 4).holds);
    auto five = check_Cp(torus, cat, 5);
    CHECK_FALSE(five.holds);
    REQUIRE(five.witnesses.size() == 1);
    CHECK(five.witnesses[0].cover == 4);

    auto genus2 = make_genus_surface_presentation_complex(2);
    auto cat2 = compute_pieces(genus2);
    auto cover = min_piece_cover(genus2, cat2, 0);
    CHECK(cover.coverable);
    CHECK(cover.count == 8);
    CHECK(check_Cp(genus2, cat2, 8).holds);
    CHECK_FALSE(check_Cp(genus2, cat2, 9).holds);
}

TEST_CASE("piece witness symmetry") {
    auto torus = make_torus_presentation_complex();
    auto cat = compute_pieces(torus);
    for (const auto& mp : cat.maximal) {
        // the partner anchor reads the same path, from an inequivalent reading
        BoundaryAnchor self{mp.face, mp.offset, false};
        CHECK_FALSE(anchors_equivalent(torus, self, mp.partner));
        for (int t = 0; t < mp.length; ++t) {
            CHECK(anchor_read(torus, mp.partner, t) == mp.path[t]);
        }
    }
}

TEST_CASE("T(q) by links") {
    CHECK(check_Tq_link(make_grid(3, 3), 4).holds);
    CHECK(check_Tq_link(make_torus_presentation_complex(), 4).holds);

    auto cube = make_cube_corner();
    auto rep = check_Tq_link(cube, 4);
    REQUIRE_FALSE(rep.holds);
    REQUIRE(rep.witnesses.size() >= 1);
    CHECK(rep.witnesses[0].cycle_nodes.size() == 3);

    // monotonicity: T(q) implies T(q') for q' <= q
    for (const TwoComplex& c : {make_grid(2, 3), make_fin(12), make_cube_corner()}) {
        bool prev = true;
        for (int q = 3; q <= 6; ++q) {
            bool now = check_Tq_link(c, q).holds;
            if (!prev) CHECK_FALSE(now);
            prev = now;
        }
    }
}

TEST_CASE("diagram-based T(q) falsifier") {
    auto cube = make_cube_corner();
    auto witness = falsify_Tq_by_diagrams(cube, 4, 3);
    REQUIRE(witness.has_value());
    CHECK(witness->internal_valence == 3);
    CHECK(witness->diagram.area() == 3);
    CHECK(validate_diagram(witness->diagram).ok());
    CHECK(validate_labels(witness->diagram, cube).ok());
    CHECK(is_reduced(witness->diagram, cube).reduced);
    // the hub is interior with the reported valence
    bool found_hub = false;
    for (VertexId v = 0; v < witness->diagram.vertex_count(); ++v) {
        if (witness->diagram.interior(v)) {
            CHECK(witness->diagram.valence(v) == 3);
            found_hub = true;
        }
    }
    CHECK(found_hub);

    CHECK_FALSE(falsify_Tq_by_diagrams(make_grid(3, 3), 4, 6).has_value());
    CHECK_FALSE(falsify_Tq_by_diagrams(cube, 4, 2).has_value());
    CHECK_FALSE(falsify_Tq_by_diagrams(make_torus_presentation_complex(), 4, 6).has_value());
}

TEST_CASE("classification golden set") {
    auto torus = classify(make_torus_presentation_complex());
    CHECK(torus.c4);
    CHECK(torus.t4);
    CHECK(torus.max_p == 4);
    CHECK(torus.max_q == 4);

    auto genus2 = classify(make_genus_surface_presentation_complex(2));
    CHECK(genus2.c4);
    CHECK(genus2.t4);
    CHECK(genus2.max_p == 8);
    CHECK(genus2.max_q == 8);

    auto cube = classify(make_cube_corner());
    CHECK_FALSE(cube.t4);

    auto grid = classify(make_grid(3, 3));
    CHECK(grid.c4);
    CHECK(grid.t4);
    CHECK(grid.max_p == 4);
    CHECK(grid.max_q == 4);

    auto fin = classify(make_fin(12));
    CHECK(fin.c4);
    CHECK(fin.t4);
    CHECK(fin.max_p_vacuous);

    auto pin = classify(make_pinwheel(4));
    CHECK(pin.c4);
    CHECK(pin.t4);
}

TEST_CASE("C(p) monotonicity") {
    for (const TwoComplex& c :
         {make_torus_presentation_complex(), make_genus_surface_presentation_complex(2),
          make_grid(2, 2)}) {
        auto cat = compute_pieces(c);
        bool prev = true;
        for (int p = 12; p >= 1; --p) {
            bool now = check_Cp(c, cat, p).holds;
            if (prev) {
                // nothing: holds can switch on as p decreases
            }
            if (now) CHECK(check_Cp(c, cat, std::max(1, p - 1)).holds);
            prev = now;
        }
    }
}
