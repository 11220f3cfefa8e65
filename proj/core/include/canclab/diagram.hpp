#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "canclab/complex.hpp"

namespace canclab {

using DartId = int;

/// Raw storage of a combinatorial planar map. Darts come in twin pairs
/// (2k, 2k+1) forming edge k. Faces are orbits of
/// next(d) = rotation-successor of twin(d).
struct DiagramRaw {
    int vertex_count = 0;
    std::vector<VertexId> dart_origin;
    std::vector<std::vector<DartId>> rotation;  // per vertex, cyclic order of outgoing darts
    DartId outer_dart = -1;                     // a dart on the outer face; -1 only for the trivial diagram

    // Labeling into a target complex. Empty vectors mean unlabeled.
    std::vector<VertexId> vertex_label;
    std::vector<SignedEdge> dart_label;
    std::vector<FaceId> face_label_by_dart;  // per dart, target face of its diagram face (-1 on outer)
};

/// A disc diagram: a connected planar map with a distinguished outer face,
/// optionally labeled into a 2-complex. Immutable.
class DiscDiagram {
public:
    static DiscDiagram trivial(VertexId base_label = -1);
    static DiscDiagram from_raw(DiagramRaw raw);

    bool well_formed() const { return well_formed_; }
    const std::string& defect() const { return defect_; }

    int dart_count() const { return static_cast<int>(raw_.dart_origin.size()); }
    int vertex_count() const { return raw_.vertex_count; }
    int edge_count() const { return dart_count() / 2; }

    DartId twin(DartId d) const { return d ^ 1; }
    VertexId origin(DartId d) const { return raw_.dart_origin[d]; }
    VertexId target(DartId d) const { return raw_.dart_origin[d ^ 1]; }
    std::span<const DartId> rotation(VertexId v) const { return raw_.rotation[v]; }

    DartId next_in_face(DartId d) const;

    int face_count() const { return static_cast<int>(face_cycles_.size()); }
    FaceId face_of(DartId d) const { return face_of_dart_[d]; }
    std::span<const DartId> face_cycle(FaceId f) const { return face_cycles_[f]; }
    FaceId outer_face() const { return outer_face_; }
    bool is_inner(FaceId f) const { return f != outer_face_; }
    int face_slot(DartId d) const { return face_slot_[d]; }
    int area() const { return face_count() - 1; }

    /// Valence: number of dart ends at v.
    int valence(VertexId v) const { return static_cast<int>(raw_.rotation[v].size()); }
    /// Number of inner face corners at v.
    int inner_corners(VertexId v) const;
    bool interior(VertexId v) const;
    bool on_boundary(VertexId v) const { return !interior(v); }

    bool labeled() const { return !raw_.dart_label.empty() || dart_count() == 0; }
    VertexId vertex_label(VertexId v) const { return raw_.vertex_label.empty() ? -1 : raw_.vertex_label[v]; }
    SignedEdge dart_label(DartId d) const { return raw_.dart_label[d]; }
    FaceId face_label(FaceId f) const;

    const DiagramRaw& raw() const { return raw_; }

private:
    DiscDiagram() = default;
    void derive();

    DiagramRaw raw_;
    bool well_formed_ = false;
    std::string defect_;
    std::vector<int> rot_pos_;  // position of each dart in its origin's rotation
    std::vector<std::vector<DartId>> face_cycles_;
    std::vector<FaceId> face_of_dart_;
    std::vector<int> face_slot_;
    FaceId outer_face_ = -1;
};

struct DiagramValidation {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

/// Involution and rotation well-formedness, Euler formula V - E + F = 2,
/// connectivity, and a coherent outer face.
DiagramValidation validate_diagram(const DiscDiagram& d);

/// Checks that each labeled cell maps combinatorially: dart labels compose
/// along edges, endpoints match, and every inner face reads a rotation or
/// reflection of its target face's attaching word.
DiagramValidation validate_labels(const DiscDiagram& d, const TwoComplex& target);

/// The closed walk around the outer face. Empty for the trivial diagram.
std::span<const DartId> boundary_cycle(const DiscDiagram& d);

/// True iff position w lies strictly between positions u and v when walking
/// the boundary from u in the given orientation (+1 forward, -1 backward).
bool between(const DiscDiagram& d, int orientation, int u, int w, int v);

/// Curvature as an exact integer multiple of pi/2.
struct CurvatureHalfPi {
    int value = 0;

    friend bool operator==(const CurvatureHalfPi&, const CurvatureHalfPi&) = default;
    friend auto operator<=>(const CurvatureHalfPi&, const CurvatureHalfPi&) = default;
};

/// kappa(v) = 4 - 2 delta(v) + rho(v) in units of pi/2.
CurvatureHalfPi curvature(const DiscDiagram& d, VertexId v);

struct GaussBonnetAudit {
    CurvatureHalfPi total;
    CurvatureHalfPi boundary_total;
    bool interior_cat0;  // every interior vertex has valence >= 4
    bool pass;           // total == 4, and boundary_total >= 4 when interior_cat0
};

GaussBonnetAudit gauss_bonnet_audit(const DiscDiagram& d);

struct CutSets {
    std::vector<VertexId> cut;
    std::vector<VertexId> singular;  // cut vertices incident to an inner face
};

CutSets cut_and_singular_vertices(const DiscDiagram& d);

/// Bipartite tree on singular vertices and the components of their complement.
struct ModifiedCutTree {
    std::vector<VertexId> singular;              // V_T
    int component_count = 0;                     // |S_T|
    std::vector<std::pair<int, int>> edges;      // (singular index, component id)
    bool is_tree = false;

    int degree_of_singular(int i) const;
};

ModifiedCutTree modified_cut_tree(const DiscDiagram& d);

struct SingularIdentityReport {
    struct Entry {
        VertexId v;
        int delta;
        int rho;
        int tree_degree;
        CurvatureHalfPi kappa;
        bool identity_ok;  // delta == rho + tree_degree
        bool kappa_ok;     // kappa <= -1
    };
    std::vector<Entry> entries;
    bool ok() const;
};

SingularIdentityReport singular_identity_check(const DiscDiagram& d);

struct GeodesicBoundaryReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Curvature conditions a boundary subwalk must satisfy to be geodesic:
/// no internal vertex of curvature pi, and a vertex of curvature <= -pi/2
/// between consecutive internal vertices of curvature pi/2.
GeodesicBoundaryReport geodesic_boundary_check(const DiscDiagram& d, int start, int length);

struct SngReport {
    bool hypothesis_holds = false;
    CurvatureHalfPi boundary_total;
    bool conclusion_holds = false;  // boundary_total <= 0, when hypothesis holds
};

/// Hypothesis: every boundary vertex has curvature <= pi/2 and every cyclic
/// gap between consecutive curvature pi/2 boundary vertices contains a vertex
/// of curvature <= -pi/2. Under it the boundary curvature total is <= 0.
SngReport sng_check(const DiscDiagram& d);

struct ReducednessResult {
    bool reduced = true;
    std::optional<std::pair<FaceId, FaceId>> witness;  // cancellable pair
    std::optional<DartId> witness_dart;
};

/// Cancellable-pair test: two distinct inner faces meeting along an edge as
/// mirror images (their readings from the edge are carried to each other by a
/// homeomorphism commuting with the attaching maps).
ReducednessResult is_reduced(const DiscDiagram& d, const TwoComplex& target);

/// The reading of the target face matching inner face f from slot 0 of its
/// cycle, if the labels are coherent.
std::optional<BoundaryAnchor> face_label_anchor(const DiscDiagram& d, const TwoComplex& target,
                                                FaceId f);

}  // namespace canclab
