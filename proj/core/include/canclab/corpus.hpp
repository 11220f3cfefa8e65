#pragma once

#include <cstdint>
#include <vector>

#include "canclab/action.hpp"
#include "canclab/complex.hpp"
#include "canclab/diagram.hpp"
#include "canclab/quadric.hpp"

namespace canclab {

/// Deterministic generator (splitmix64). Identical seeds give identical
/// streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }

private:
    std::uint64_t state_;
};

// Complex families. All outputs are valid complexes; the grid family and its
// subcomplexes satisfy C(4)-T(4).
TwoComplex make_grid(int rows, int cols);
TwoComplex make_strip(int cols);
TwoComplex make_ngon(int n);
TwoComplex make_torus_presentation_complex();
TwoComplex make_genus_surface_presentation_complex(int genus);
TwoComplex make_cube_corner();
TwoComplex make_random_grid_subcomplex(int rows, int cols, std::uint64_t seed);
/// A large polygon with three smaller faces glued along short overlapping
/// arcs near one corner. C(4)-T(4) with long pieces, so its quadrization
/// contains double ladders with cap.
TwoComplex make_fin(int perimeter);
/// A 3m-gon with three fins spaced rotation-symmetrically, plus the order-3
/// rotation as an automorphism. Free on the 1-skeleton and locally elliptic.
TwoComplex make_pinwheel(int m);
Automorphism pinwheel_rotation(const TwoComplex& pinwheel, int m);
/// Rotation of make_ngon(n) by k steps.
Automorphism ngon_rotation(const TwoComplex& ngon, int n, int k);
/// Two squares sharing an edge, plus the reflection swapping them.
TwoComplex make_domino();
Automorphism domino_swap(const TwoComplex& domino);
/// Quotient torus grid: the Cayley complex of <a,b | abAB> on Z/m x Z/n.
TwoComplex make_torus_grid(int m, int n);
/// Translation by one step in the first coordinate on make_torus_grid.
Automorphism torus_grid_translation(const TwoComplex& torus, int m, int n);

// Diagram families.
/// Random square disc diagram, unlabeled, mixing spurs, wedges and runs of
/// squares. Always valid; areas from 0 up.
DiscDiagram random_square_diagram(std::uint64_t seed, int target_area);
/// Chain of m folded square pairs wedged corner to corner. For m >= 2 the
/// boundary satisfies the negative-curvature hypothesis of the boundary sum
/// lemma: curvature +1 vertices alternate with -2 cut vertices.
DiscDiagram make_pita_chain(int m);
/// Plain r x c block of squares as a diagram (a CAT(0) instance).
DiscDiagram make_grid_diagram(int rows, int cols);
/// Random labeled diagram in a quadrization, grown by gluing squares of y
/// along 1..3 boundary edges, never creating a mirror pair.
DiscDiagram random_quadric_diagram(const Quadrization& y, std::uint64_t seed, int target_area);
/// The ladder of squares over two node rows of equal length (>= 2), labeled
/// into y. Square i spans {top[i], top[i+1], bottom[i+1], bottom[i]}.
DiscDiagram strip_diagram_in_quadrization(const Quadrization& y, std::span<const int> top,
                                          std::span<const int> bottom);

}  // namespace canclab
