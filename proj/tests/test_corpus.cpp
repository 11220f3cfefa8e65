#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "canclab/complex_io.hpp"
#include "canclab/corpus.hpp"
#include "canclab/smallcancel.hpp"

using namespace canclab;

TEST_CASE("grid family counts") {
    auto g = make_grid(3, 3);
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 24);
    CHECK(g.face_count() == 9);
    CHECK(validate_complex(g).ok());

    auto s = make_strip(4);
    CHECK(s.face_count() == 4);
    CHECK(validate_complex(make_ngon(6)).ok());
    CHECK(validate_complex(make_fin(12)).ok());
    CHECK(validate_complex(make_pinwheel(3)).ok());
    CHECK(validate_complex(make_cube_corner()).ok());
}

TEST_CASE("generation is a pure function of the seed") {
    for (std::uint64_t seed : {7ULL, 42ULL, 12345ULL}) {
        auto a = make_random_grid_subcomplex(4, 4, seed);
        auto b = make_random_grid_subcomplex(4, 4, seed);
        std::ostringstream sa, sb;
        write_complex(sa, a);
        write_complex(sb, b);
        CHECK(sa.str() == sb.str());
    }
    auto x = make_random_grid_subcomplex(4, 4, 1);
    auto z = make_random_grid_subcomplex(4, 4, 2);
    std::ostringstream sx, sz;
    write_complex(sx, x);
    write_complex(sz, z);
    CHECK(sx.str() != sz.str());
}

TEST_CASE("grid subcomplexes satisfy the small cancellation conditions") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto c = make_random_grid_subcomplex(3, 4, seed);
        CHECK(validate_complex(c).ok());
        auto cls = classify(c);
        CAPTURE(seed);
        CHECK(cls.c4);
        CHECK(cls.t4);
    }
}

TEST_CASE("random square diagrams are valid at every area") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int area = trial % 31;
        auto d = random_square_diagram(rng.next(), area);
        CAPTURE(trial);
        REQUIRE(validate_diagram(d).ok());
        CHECK(d.area() == area);
        for (FaceId f = 0; f < d.face_count(); ++f) {
            if (d.is_inner(f)) CHECK(d.face_cycle(f).size() == 4);
        }
    }
    // determinism
    auto a = random_square_diagram(11, 9);
    auto b = random_square_diagram(11, 9);
    CHECK(a.raw().dart_origin == b.raw().dart_origin);
    CHECK(a.raw().rotation == b.raw().rotation);
}

TEST_CASE("pita chains satisfy the hypothesis family contract") {
    for (int m = 1; m <= 6; ++m) {
        auto d = make_pita_chain(m);
        REQUIRE(validate_diagram(d).ok());
        CHECK(d.area() == 3 * m);
        auto rep = sng_check(d);
        CHECK(rep.hypothesis_holds);
        CHECK(rep.boundary_total.value <= 0);
    }
}

TEST_CASE("grid diagrams are CAT(0)") {
    for (auto [r, c] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 3}}) {
        auto d = make_grid_diagram(r, c);
        REQUIRE(validate_diagram(d).ok());
        CHECK(d.area() == r * c);
        CHECK(gauss_bonnet_audit(d).pass);
        CHECK(gauss_bonnet_audit(d).interior_cat0);
    }
}

TEST_CASE("torus grids") {
    auto t = make_torus_grid(3, 3);
    CHECK(t.vertex_count() == 9);
    CHECK(t.edge_count() == 18);
    CHECK(t.face_count() == 9);
    auto cls = classify(t);
    CHECK(cls.c4);
    CHECK(cls.t4);
}

TEST_CASE("random quadric diagrams stay labeled and valid") {
    auto y = quadrize(make_grid(3, 3));
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        auto d = random_quadric_diagram(y, rng.next(), 2 + trial % 10);
        REQUIRE(validate_diagram(d).ok());
        REQUIRE(validate_labels(d, y.as_complex()).ok());
        CHECK(is_reduced(d, y.as_complex()).reduced);
    }
}
