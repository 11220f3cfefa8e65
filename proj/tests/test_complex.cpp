#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "canclab/complex.hpp"
#include "canclab/corpus.hpp"

using namespace canclab;

TEST_CASE("presentation complexes spell their relators back") {
    auto torus = build_presentation_complex(Presentation::parse("gens: a b\nrels: abAB"));
    CHECK(torus.vertex_count() == 1);
    CHECK(torus.edge_count() == 2);
    CHECK(torus.face_count() == 1);
    CHECK(torus.face(0).boundary ==
          std::vector<SignedEdge>{{0, false}, {1, false}, {0, true}, {1, true}});
    CHECK(validate_complex(torus).ok());

    auto a3 = build_presentation_complex(Presentation::parse("gens: a\nrels: aaa"));
    CHECK(a3.vertex_count() == 1);
    CHECK(a3.edge_count() == 1);
    CHECK(a3.face_size(0) == 3);

    auto genus2 = build_presentation_complex(Presentation::parse("gens: a b c d\nrels: abABcdCD"));
    CHECK(genus2.vertex_count() == 1);
    CHECK(genus2.edge_count() == 4);
    CHECK(genus2.face_size(0) == 8);

    // reading each face boundary spells the relator exactly
    auto p = Presentation::parse("gens: a b\nrels: abab aB");
    auto c = build_presentation_complex(p);
    for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
        const auto& r = p.relators()[ri];
        REQUIRE(c.face_size(static_cast<int>(ri)) == static_cast<int>(r.size()));
        for (std::size_t t = 0; t < r.size(); ++t) {
            auto s = c.boundary_at(static_cast<int>(ri), static_cast<int>(t));
            CHECK(s.edge == r.at(t).gen);
            CHECK(s.reversed == r.at(t).inv);
        }
    }
}

TEST_CASE("validation catches broken boundaries") {
    ComplexBuilder b;
    auto v0 = b.add_vertex();
    auto v1 = b.add_vertex();
    auto v2 = b.add_vertex();
    auto e0 = b.add_edge(v0, v1);
    auto e1 = b.add_edge(v2, v0);  // does not start at head of e0
    b.add_face({{e0, false}, {e1, false}});
    auto c = std::move(b).build();
    auto rep = validate_complex(c);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.issues[0].code == "boundary-not-closed");

    ComplexBuilder b2;
    auto u0 = b2.add_vertex();
    auto u1 = b2.add_vertex();
    auto f0 = b2.add_edge(u0, u1);
    b2.add_face({{f0, false}, {f0, true}});
    auto c2 = std::move(b2).build();
    auto rep2 = validate_complex(c2);
    REQUIRE_FALSE(rep2.ok());
    CHECK(rep2.issues[0].code == "not-immersed");

    CHECK(validate_complex(make_grid(2, 2)).ok());
    CHECK(validate_complex(make_ngon(4)).ok());
}

TEST_CASE("cayley complexes of finite realizations") {
    auto a3 = Presentation::parse("gens: a\nrels: aaa");
    PermRealization cyc3{3, {{1, 2, 0}}};
    auto tri = build_cayley_complex(a3, cyc3);
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.face_count() == 1);
    CHECK(tri.face_size(0) == 3);
    CHECK(validate_complex(tri).ok());

    auto torus = Presentation::parse("gens: a b\nrels: abAB");
    PermRealization trivial{1, {{0}, {0}}};
    auto base = build_cayley_complex(torus, trivial);
    CHECK(base.vertex_count() == 1);
    CHECK(base.edge_count() == 2);
    CHECK(base.face_count() == 1);

    auto a4 = Presentation::parse("gens: a\nrels: aaaa");
    PermRealization swap2{2, {{1, 0}}};
    auto doubled = build_cayley_complex(a4, swap2);
    CHECK(doubled.vertex_count() == 2);
    CHECK(doubled.edge_count() == 2);
    CHECK(doubled.face_count() == 1);
    CHECK(doubled.face_size(0) == 4);

    auto a2 = Presentation::parse("gens: a\nrels: aa");
    PermRealization not_satisfying{3, {{1, 2, 0}}};  // an order-3 cycle violates a^2
    CHECK_THROWS_AS(build_cayley_complex(a2, not_satisfying), Error);

    // vertex and edge counts: n and n * |gens|
    auto tg = make_torus_grid(3, 4);
    CHECK(tg.vertex_count() == 12);
    CHECK(tg.edge_count() == 24);
    CHECK(tg.face_count() == 12);
    CHECK(validate_complex(tg).ok());
}

TEST_CASE("links") {
    auto grid = make_grid(2, 2);
    VertexId center = *grid.find_vertex("x1_1");
    auto link = link_of(grid, center);
    CHECK(link.nodes.size() == 4);
    CHECK(link.arcs.size() == 4);
    // the four arcs form a single embedded 4-cycle: every node has degree 2
    std::map<int, int> deg;
    for (const auto& arc : link.arcs) {
        deg[arc.a]++;
        deg[arc.b]++;
    }
    for (auto& [node, d] : deg) CHECK(d == 2);

    ComplexBuilder b;
    auto v0 = b.add_vertex();
    auto v1 = b.add_vertex();
    b.add_edge(v0, v1);
    auto lone = std::move(b).build();
    auto tip = link_of(lone, v1);
    CHECK(tip.nodes.size() == 1);
    CHECK(tip.arcs.empty());

    auto torus = make_torus_presentation_complex();
    auto tl = link_of(torus, 0);
    CHECK(tl.nodes.size() == 4);
    CHECK(tl.arcs.size() == 4);
}

TEST_CASE("face intersections on the grid") {
    auto grid = make_grid(2, 2);
    FaceId c00 = *grid.find_face("c0_0");
    FaceId c01 = *grid.find_face("c0_1");
    FaceId c11 = *grid.find_face("c1_1");

    auto adjacent = face_intersection(grid, c00, c01);
    CHECK(adjacent.is_connected);
    CHECK(adjacent.is_interval);
    CHECK(adjacent.cells.edges.size() == 1);
    CHECK(adjacent.cells.vertices.size() == 2);

    auto corner = face_intersection(grid, c00, c11);
    CHECK(corner.is_connected);
    CHECK(corner.is_single_vertex);

    auto strip = make_strip(3);
    auto far = face_intersection(strip, *strip.find_face("c0_0"), *strip.find_face("c0_2"));
    CHECK(far.is_empty);

    // symmetry
    auto ab = face_intersection(grid, c00, c01);
    auto ba = face_intersection(grid, c01, c00);
    CHECK(ab.cells.vertices == ba.cells.vertices);
    CHECK(ab.cells.edges == ba.cells.edges);
}

TEST_CASE("strong Helly holds on grids and fails on the cube corner") {
    CHECK(strong_helly_check(make_grid(3, 3)).ok());
    CHECK(strong_helly_check(make_grid(2, 3)).ok());

    auto cube = make_cube_corner();
    auto rep = strong_helly_check(cube);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.size() == 1);

    CHECK(strong_helly_check(make_strip(2)).ok());  // two faces: vacuous
}

TEST_CASE("multi intersections") {
    auto grid = make_grid(2, 2);
    std::vector<FaceId> pair{*grid.find_face("c0_0"), *grid.find_face("c0_1")};
    CHECK(multi_intersection_check(grid, pair).kind == IntersectionKind::interval);

    std::vector<FaceId> quad{*grid.find_face("c0_0"), *grid.find_face("c0_1"),
                             *grid.find_face("c1_0"), *grid.find_face("c1_1")};
    CHECK(multi_intersection_check(grid, quad).kind == IntersectionKind::single_vertex);

    auto strip = make_strip(3);
    std::vector<FaceId> disjoint{*strip.find_face("c0_0"), *strip.find_face("c0_2")};
    CHECK_THROWS_AS(multi_intersection_check(strip, disjoint), Error);
    std::vector<FaceId> one{*strip.find_face("c0_0")};
    CHECK_THROWS_AS(multi_intersection_check(strip, one), Error);
}

TEST_CASE("thickening free edges") {
    ComplexBuilder b;
    auto v0 = b.add_vertex();
    auto v1 = b.add_vertex();
    auto v2 = b.add_vertex();
    b.add_edge(v0, v1);  // free
    b.add_edge(v1, v2);  // free
    auto loop = b.add_edge(v0, v0);
    b.add_face({{loop, false}});
    auto c = std::move(b).build();

    auto thick = thicken_free_edges(c);
    CHECK(thick.edge_count() == c.edge_count() + 2);
    CHECK(thick.face_count() == c.face_count() + 2);
    for (EdgeId e = 0; e < static_cast<int>(thick.edge_count()); ++e) {
        CHECK_FALSE(thick.faces_of_edge(e).empty());
    }
    CHECK(validate_complex(thick).ok());
}

TEST_CASE("anchor readings and equivalence") {
    auto torus = make_torus_presentation_complex();
    // the unique face read forward from 0: +a +b -a -b
    BoundaryAnchor fwd{0, 0, false};
    CHECK(anchor_read(torus, fwd, 0) == SignedEdge{0, false});
    CHECK(anchor_read(torus, fwd, 3) == SignedEdge{1, true});
    // reversed reading from slot 0 starts with the inverse of slot 0
    BoundaryAnchor rev{0, 0, true};
    CHECK(anchor_read(torus, rev, 0) == SignedEdge{0, true});
    CHECK(anchor_read(torus, rev, 1) == SignedEdge{1, false});

    CHECK(anchors_equivalent(torus, fwd, fwd));
    CHECK_FALSE(anchors_equivalent(torus, fwd, BoundaryAnchor{0, 1, false}));
    CHECK_FALSE(anchors_equivalent(torus, fwd, rev));

    // abab has period 2: rotation by 2 is equivalent
    auto sq = build_presentation_complex(Presentation::parse("gens: a b\nrels: abab"));
    CHECK(anchors_equivalent(sq, {0, 0, false}, {0, 2, false}));
    CHECK_FALSE(anchors_equivalent(sq, {0, 0, false}, {0, 1, false}));
}
