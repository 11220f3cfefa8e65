#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "canclab/complex_io.hpp"
#include "canclab/corpus.hpp"
#include "canclab/diagram_io.hpp"

using namespace canclab;

TEST_CASE("complex files round trip") {
    for (const TwoComplex& c : {make_grid(2, 3), make_fin(12), make_cube_corner(),
                                make_torus_presentation_complex()}) {
        std::ostringstream first;
        write_complex(first, c);
        auto back = parse_complex(first.str());
        std::ostringstream second;
        write_complex(second, back);
        CHECK(first.str() == second.str());
        CHECK(back.vertex_count() == c.vertex_count());
        CHECK(back.edge_count() == c.edge_count());
        CHECK(back.face_count() == c.face_count());
    }
}

TEST_CASE("complex file errors carry locations") {
    CHECK_THROWS_AS(parse_complex("e e0 a b"), ParseError);
    CHECK_THROWS_AS(parse_complex("v a\nv a"), ParseError);
    CHECK_THROWS_AS(parse_complex("v a\nv b\ne e0 a b\nf F +missing"), ParseError);
    CHECK_THROWS_AS(parse_complex("junk"), ParseError);
    try {
        parse_complex("v a\nbad line");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("diagram files round trip with labels") {
    auto grid = make_grid(2, 2);
    auto y = quadrize(grid);
    auto d = random_quadric_diagram(y, 4, 5);
    const auto& yc = y.as_complex();

    std::ostringstream first;
    write_diagram(first, d, &yc);
    auto back = parse_diagram(first.str(), &yc);
    CHECK(validate_diagram(back).ok());
    CHECK(validate_labels(back, yc).ok());
    std::ostringstream second;
    write_diagram(second, back, &yc);
    CHECK(first.str() == second.str());

    // unlabeled round trip
    auto plain = random_square_diagram(3, 7);
    std::ostringstream p1;
    write_diagram(p1, plain);
    auto pback = parse_diagram(p1.str());
    CHECK(validate_diagram(pback).ok());
    CHECK(pback.area() == plain.area());
}

TEST_CASE("diagram file errors") {
    CHECK_THROWS(parse_diagram("d 0 1 0\nrot 0 0 1\nouter 0"));  // twin asymmetric
    CHECK_THROWS(parse_diagram("d 0 1 0\nd 1 0 1\nrot 0 0\nrot 1 1"));  // missing outer
    CHECK_THROWS(parse_diagram("lab v0 x"));  // labels without a target complex
}
