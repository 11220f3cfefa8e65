#pragma once

#include <optional>
#include <vector>

#include "canclab/complex.hpp"
#include "canclab/diagram.hpp"

namespace canclab {

/// Maximal pieces per face boundary. max_len[f][i] is the length of the
/// longest piece read forward from slot i of face f (0 if that edge lies in
/// no piece); partner[f][i] is an inequivalent reading witnessing it.
struct PieceCatalog {
    std::vector<std::vector<int>> max_len;
    std::vector<std::vector<BoundaryAnchor>> partner;

    struct MaxPiece {
        FaceId face;
        int offset;
        int length;
        BoundaryAnchor partner;
        std::vector<SignedEdge> path;
    };
    std::vector<MaxPiece> maximal;  // entries not contained in an earlier run
};

/// Enumerates pieces as common boundary readings of face pairs (a face
/// against itself at another offset or orientation included), modulo
/// readings carried to each other by attaching-map symmetries.
PieceCatalog compute_pieces(const TwoComplex& c);

struct CoverResult {
    bool coverable = false;
    int count = 0;  // minimal number of pieces concatenating to the boundary
    int start = 0;  // witness start offset of an optimal partition
};

/// Exact minimal cover of the boundary cycle of f by pieces, by greedy
/// maximal-arc extension from every start offset.
CoverResult min_piece_cover(const TwoComplex& c, const PieceCatalog& pieces, FaceId f);

struct CpReport {
    int p = 0;
    bool holds = false;
    struct Witness {
        FaceId face;
        int cover;
    };
    std::vector<Witness> witnesses;  // faces with a cover of fewer than p pieces
};

CpReport check_Cp(const TwoComplex& c, const PieceCatalog& pieces, int p);

struct TqReport {
    int q = 0;
    bool holds = false;
    struct Witness {
        VertexId vertex;
        std::vector<int> cycle_nodes;  // node indices in the link of `vertex`
    };
    std::vector<Witness> witnesses;
};

/// Link formulation: no vertex link may contain an embedded cycle of length
/// n with 2 < n < q.
TqReport check_Tq_link(const TwoComplex& c, int q);

struct TqDiagramWitness {
    VertexId vertex;         // image of the internal vertex
    int internal_valence;
    DiscDiagram diagram;     // reduced wheel realizing it
};

/// Bounded independent oracle: searches reduced disc diagrams of area at most
/// area_bound for an internal vertex of valence strictly between 2 and q.
std::optional<TqDiagramWitness> falsify_Tq_by_diagrams(const TwoComplex& c, int q,
                                                       int area_bound);

struct Classification {
    bool c4 = false;
    bool t4 = false;
    int max_p = 0;               // largest p with C(p), capped by longest boundary
    bool max_p_vacuous = false;  // no face has a finite piece cover
    std::optional<int> max_q;    // largest q with T(q); nullopt when unbounded
    CpReport c4_report;
    TqReport t4_report;
};

Classification classify(const TwoComplex& c);

}  // namespace canclab
