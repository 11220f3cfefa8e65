#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canclab/presentation.hpp"
#include "canclab/word.hpp"

namespace canclab {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

/// An edge with a traversal direction. Forward runs tail -> head.
struct SignedEdge {
    EdgeId edge = -1;
    bool reversed = false;

    SignedEdge inverse() const { return {edge, !reversed}; }

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
    friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// A finite combinatorial 2-complex. Faces store their attaching maps as
/// closed signed edge paths, so multi-edges and loops are unambiguous.
/// Immutable after construction.
class TwoComplex {
public:
    struct EdgeRec {
        VertexId tail;
        VertexId head;
    };
    struct FaceRec {
        std::vector<SignedEdge> boundary;
    };

    TwoComplex(std::size_t vertex_count, std::vector<EdgeRec> edges, std::vector<FaceRec> faces,
               std::vector<std::string> vertex_names = {}, std::vector<std::string> edge_names = {},
               std::vector<std::string> face_names = {});

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t face_count() const { return faces_.size(); }

    const EdgeRec& edge(EdgeId e) const { return edges_[e]; }
    const FaceRec& face(FaceId f) const { return faces_[f]; }

    VertexId tail_of(SignedEdge s) const { return s.reversed ? edges_[s.edge].head : edges_[s.edge].tail; }
    VertexId head_of(SignedEdge s) const { return s.reversed ? edges_[s.edge].tail : edges_[s.edge].head; }

    int face_size(FaceId f) const { return static_cast<int>(faces_[f].boundary.size()); }
    /// Signed edge at cyclic boundary position `slot`.
    SignedEdge boundary_at(FaceId f, int slot) const;
    /// Vertex the boundary walk stands at before traversing `slot`.
    VertexId boundary_vertex(FaceId f, int slot) const { return tail_of(boundary_at(f, slot)); }

    const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
    const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
    const std::string& face_name(FaceId f) const { return face_names_[f]; }

    std::optional<VertexId> find_vertex(const std::string& name) const;
    std::optional<EdgeId> find_edge(const std::string& name) const;
    std::optional<FaceId> find_face(const std::string& name) const;

    /// Edges incident to v (loops listed once).
    std::span<const EdgeId> edges_at(VertexId v) const { return incident_edges_[v]; }
    /// Faces whose closed cell contains v.
    std::span<const FaceId> faces_at(VertexId v) const { return incident_faces_[v]; }
    /// Faces whose boundary traverses e.
    std::span<const FaceId> faces_of_edge(EdgeId e) const { return edge_faces_[e]; }

    std::string signed_edge_str(SignedEdge s) const {
        return (s.reversed ? "-" : "+") + edge_names_[s.edge];
    }

private:
    std::size_t vertex_count_;
    std::vector<EdgeRec> edges_;
    std::vector<FaceRec> faces_;
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<std::string> face_names_;
    std::vector<std::vector<EdgeId>> incident_edges_;
    std::vector<std::vector<FaceId>> incident_faces_;
    std::vector<std::vector<FaceId>> edge_faces_;
};

/// Incremental construction with names. Ids are dense and in insertion order.
class ComplexBuilder {
public:
    VertexId add_vertex(std::string name = "");
    EdgeId add_edge(VertexId tail, VertexId head, std::string name = "");
    FaceId add_face(std::vector<SignedEdge> boundary, std::string name = "");
    TwoComplex build() &&;

private:
    std::size_t vertices_ = 0;
    std::vector<TwoComplex::EdgeRec> edges_;
    std::vector<TwoComplex::FaceRec> faces_;
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;
    std::vector<std::string> face_names_;
};

struct ValidationIssue {
    std::string code;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks closed face boundaries, nonempty boundaries and immersed attaching
/// maps (no immediate backtrack in a face boundary).
ValidationReport validate_complex(const TwoComplex& c);

/// One vertex, a loop per generator, a face per relator spelling it.
TwoComplex build_presentation_complex(const Presentation& p);

/// A finite permutation realization of a presentation: each generator acts
/// on {0..degree-1} and every relator acts as the identity.
struct PermRealization {
    int degree;
    std::vector<std::vector<int>> perms;  // one per generator, images 0-based

    /// Throws Error if the permutations are not bijections or a relator
    /// does not act trivially.
    void validate(const Presentation& p) const;
};

/// Vertices {0..n-1}, an edge g -> g.x per generator, one face per distinct
/// relator translate loop (loops equal up to rotation or reversal are one).
TwoComplex build_cayley_complex(const Presentation& p, const PermRealization& r);

/// The link of a vertex: nodes are edge ends at the vertex, arcs are face
/// corners. Multigraph with possible parallel arcs.
struct LinkGraph {
    struct Node {
        EdgeId edge;
        bool at_head;

        friend bool operator==(const Node&, const Node&) = default;
    };
    struct Arc {
        int a;
        int b;
        FaceId face;
        int slot;  // corner position in the face boundary
    };

    std::vector<Node> nodes;
    std::vector<Arc> arcs;

    int node_index(EdgeId e, bool at_head) const;
};

LinkGraph link_of(const TwoComplex& c, VertexId v);

/// A subcomplex of the 1-skeleton.
struct Subcomplex1 {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    bool empty() const { return vertices.empty() && edges.empty(); }
};

struct FaceIntersection {
    Subcomplex1 cells;
    bool is_empty;
    bool is_connected;
    bool is_single_vertex;
    bool is_interval;  // a subdivided interval with at least one edge
};

/// Intersection of the closed cells of two distinct faces.
FaceIntersection face_intersection(const TwoComplex& c, FaceId f1, FaceId f2);

struct HellyReport {
    struct Violation {
        std::array<FaceId, 3> faces;
    };
    long triples_checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// For every triple of pairwise intersecting faces, checks that some pair
/// intersection is contained in the remaining face.
HellyReport strong_helly_check(const TwoComplex& c);

enum class IntersectionKind { interval, single_vertex, other };

struct MultiIntersection {
    Subcomplex1 cells;
    IntersectionKind kind;
};

/// Intersection of all listed faces, classified. Requires at least two
/// pairwise distinct, pairwise intersecting faces.
MultiIntersection multi_intersection_check(const TwoComplex& c, std::span<const FaceId> faces);

/// Adds, for every edge lying on no face, a parallel edge and a 2-gon face.
TwoComplex thicken_free_edges(const TwoComplex& c);

/// First Betti number over Z/2: dim ker d1 - rank d2. Zero for the simply
/// connected corpus complexes; positive for surface quotients, whose
/// intersection and Helly properties are out of hypothesis.
int first_betti_mod2(const TwoComplex& c);

/// Vertices all connected through edges.
bool is_connected(const TwoComplex& c);

/// A reading of a face attaching word: start slot plus direction. Reversed
/// readings traverse edges inversely.
struct BoundaryAnchor {
    FaceId face = -1;
    int offset = 0;
    bool reversed = false;

    friend bool operator==(const BoundaryAnchor&, const BoundaryAnchor&) = default;
    friend auto operator<=>(const BoundaryAnchor&, const BoundaryAnchor&) = default;
};

/// t-th signed edge of the reading (t may be any integer).
SignedEdge anchor_read(const TwoComplex& c, const BoundaryAnchor& a, int t);

/// The reading advanced by `steps` positions.
BoundaryAnchor anchor_advanced(const TwoComplex& c, const BoundaryAnchor& a, int steps);

/// Same start, opposite direction.
inline BoundaryAnchor anchor_flipped(const BoundaryAnchor& a) {
    return {a.face, a.offset, !a.reversed};
}

/// True iff the two full boundary readings coincide, i.e. a homeomorphism of
/// attaching polygons commuting with the attaching maps carries one anchor to
/// the other. Equivalent anchors never witness a piece.
bool anchors_equivalent(const TwoComplex& c, const BoundaryAnchor& a, const BoundaryAnchor& b);

}  // namespace canclab
