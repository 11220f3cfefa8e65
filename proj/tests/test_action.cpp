#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "canclab/action.hpp"
#include "canclab/corpus.hpp"

using namespace canclab;

TEST_CASE("automorphism validation") {
    auto hex = make_ngon(6);
    auto rot = ngon_rotation(hex, 6, 1);
    CHECK(validate_automorphism(hex, rot).ok());
    CHECK(validate_automorphism(hex, Automorphism::identity(hex)).ok());

    auto broken = rot;
    broken.vertex_map[0] = 3;
    broken.vertex_map[3] = 1;  // perm but endpoints now mismatch
    CHECK_FALSE(validate_automorphism(hex, broken).ok());
}

TEST_CASE("rotation groups on polygons") {
    auto hex = make_ngon(6);
    GroupAction g(hex, {{"r", ngon_rotation(hex, 6, 1)}});
    CHECK(g.complete());
    CHECK(g.size() == 6);
    CHECK(free_on_1_skeleton(g).free);
    CHECK(locally_elliptic_check(g).locally_elliptic);

    CHECK(element_order(g, "r", 10) == 6);
    CHECK(element_order(g, "", 10) == 1);
    CHECK(element_order(g, "rr", 10) == 3);
    CHECK(element_order(g, "rR", 10) == 1);
    GroupAction g2(hex, {{"s", ngon_rotation(hex, 6, 2)}});
    CHECK(g2.size() == 3);
    CHECK(element_order(g2, "s", 10) == 3);

    // element orders divide the group order
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto ord = element_order(g, g.word_of(i), 12);
        REQUIRE(ord.has_value());
        CHECK(6 % *ord == 0);
    }
}

TEST_CASE("fixed sets in the base and the quadrization") {
    auto hex = make_ngon(6);
    auto y = quadrize(hex);
    auto rot = ngon_rotation(hex, 6, 1);
    auto fixed = fixed_sets(hex, y, rot);
    CHECK(fixed.vertices.empty());
    CHECK(fixed.edges.empty());
    CHECK(fixed.faces == std::vector<FaceId>{0});
    CHECK(fixed.y_nodes == std::vector<int>{y.node_of_face(0)});

    auto all = fixed_sets(hex, y, Automorphism::identity(hex));
    CHECK(all.vertices.size() == 6);
    CHECK(all.faces.size() == 1);
    CHECK(all.y_nodes.size() == 7);
}

TEST_CASE("non-free and non-elliptic witnesses") {
    auto domino = make_domino();
    GroupAction g(domino, {{"s", domino_swap(domino)}});
    auto rep = free_on_1_skeleton(g);
    CHECK_FALSE(rep.free);
    CHECK_FALSE(rep.witness_cell.empty());  // the midline vertices and edge are all fixed

    auto torus = make_torus_grid(3, 3);
    GroupAction t(torus, {{"t", torus_grid_translation(torus, 3, 3)}});
    CHECK(t.complete());
    CHECK(t.size() == 3);
    CHECK(free_on_1_skeleton(t).free);
    auto ell = locally_elliptic_check(t);
    CHECK_FALSE(ell.locally_elliptic);

    GroupAction truncated(make_ngon(8), {{"r", ngon_rotation(make_ngon(8), 8, 1)}}, 3);
    CHECK_FALSE(truncated.complete());
    CHECK_THROWS_AS(locally_elliptic_check(truncated), Error);
    CHECK_THROWS_AS(free_on_1_skeleton(truncated), Error);
}

TEST_CASE("pinwheel rotation satisfies the fixed point theorems") {
    auto pin = make_pinwheel(4);
    auto y = quadrize(pin);
    auto rot = pinwheel_rotation(pin, 4);
    REQUIRE(validate_automorphism(pin, rot).ok());
    GroupAction g(pin, {{"r", rot}});
    CHECK(g.size() == 3);
    CHECK(free_on_1_skeleton(g).free);
    CHECK(locally_elliptic_check(g).locally_elliptic);

    auto uniq = fix_uniqueness_check(pin, y, g);
    CHECK(uniq.ok);
    REQUIRE(uniq.entries.size() == 2);
    for (const auto& e : uniq.entries) {
        CHECK(e.fixed_y_nodes == std::vector<int>{y.node_of_face(*pin.find_face("F"))});
    }

    // a globally fixed face exists
    FaceId big = *pin.find_face("F");
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g.element(i).face_map[big] == big);
    }

    // equivariance of fixed sets over the closure
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            auto h = g.element(j);
            auto conj = compose(compose(inverse(pin, h), g.element(i)), h);
            auto fa = fixed_sets(pin, y, g.element(i));
            auto fc = fixed_sets(pin, y, conj);
            CHECK(fa.y_nodes.size() == fc.y_nodes.size());
        }
    }
}

TEST_CASE("hypothesis failures are loud") {
    auto domino = make_domino();
    auto y = quadrize(domino);
    GroupAction g(domino, {{"s", domino_swap(domino)}});
    CHECK_THROWS_AS(fix_uniqueness_check(domino, y, g), Error);
}

TEST_CASE("separation exponents") {
    auto pin = make_pinwheel(4);
    auto y = quadrize(pin);
    auto rot = pinwheel_rotation(pin, 4);
    int v = y.node_of_face(*pin.find_face("F"));
    auto sep = separation_exponent(y, rot, v, 5);
    REQUIRE(sep.exponent.has_value());
    CHECK(*sep.exponent == 1);
    CHECK(sep.corkv_ok);

    auto id = separation_exponent(y, Automorphism::identity(pin), v, 5);
    CHECK_FALSE(id.exponent.has_value());

    // the fin reflection-free situation: an order-2 rotation on the hexagon
    auto hex = make_ngon(6);
    auto yh = quadrize(hex);
    auto r3 = ngon_rotation(hex, 6, 3);
    auto sh = separation_exponent(yh, r3, yh.node_of_face(0), 4);
    // no squares at all: the first nontrivial power separates vacuously
    REQUIRE(sh.exponent.has_value());
    CHECK(*sh.exponent == 1);

    CHECK_THROWS_AS(separation_exponent(y, rot, y.node_of_vertex(0), 3), Error);
}

TEST_CASE("setwise invariant face sets pin down a fixed cell") {
    auto domino = make_domino();
    auto y = quadrize(domino);
    auto swap = domino_swap(domino);
    std::vector<int> sigma{y.node_of_face(0), y.node_of_face(1)};
    auto rep = sim_check(domino, y, swap, sigma);
    CHECK(rep.kind == IntersectionKind::interval);
    CHECK(rep.sigma_invariant);
    CHECK(rep.dichotomy_witnessed);
    CHECK_FALSE(rep.fixed_cell.empty());  // a fixed vertex or edge inside the interval

    std::vector<int> single{y.node_of_face(0)};
    auto vac = sim_check(domino, y, Automorphism::identity(domino), single);
    CHECK(vac.dichotomy_witnessed);

    auto idrep = sim_check(domino, y, Automorphism::identity(domino), sigma);
    CHECK(idrep.dichotomy_witnessed);
}

TEST_CASE("action files round trip") {
    auto hex = make_ngon(6);
    std::vector<std::pair<std::string, Automorphism>> auts{{"r", ngon_rotation(hex, 6, 1)}};
    std::ostringstream out;
    write_action_file(out, hex, auts);
    std::istringstream in(out.str());
    auto back = read_action_file(in, hex);
    REQUIRE(back.size() == 1);
    CHECK(back[0].first == "r");
    CHECK(back[0].second == auts[0].second);
}
