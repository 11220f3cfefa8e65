#pragma once

#include <span>
#include <vector>

#include "canclab/diagram.hpp"

namespace canclab {

/// Grows a disc diagram from a single vertex by boundary operations, keeping
/// the outer walk explicit. Positions index the current boundary dart list.
/// Labels may be omitted (pass negative ids) for abstract diagrams.
class DiagramBuilder {
public:
    explicit DiagramBuilder(VertexId base_label = -1);

    int boundary_length() const { return static_cast<int>(boundary_.size()); }
    const std::vector<DartId>& boundary() const { return boundary_; }
    SignedEdge boundary_label(int pos) const { return dart_label_[boundary_[pos]]; }
    /// Vertex the walk stands at before traversing position pos.
    VertexId boundary_vertex(int pos) const;
    VertexId boundary_vertex_label(int pos) const { return vertex_label_[boundary_vertex(pos)]; }
    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int area() const { return area_; }

    /// Reindexes the boundary: new position j holds old position (j + k) mod L.
    void rotate_boundary(int k);

    /// Grows a spur before position pos: the walk gains (label, inverse label).
    void insert_leaf(int pos, SignedEdge label, VertexId leaf_label);

    /// Attaches a polygon over boundary darts [pos, pos + t_len), exposing
    /// `exposed` new edges (at least one). The new boundary starts with the
    /// exposed darts followed by the remaining walk from pos + t_len.
    /// t_len = 0 wedges the polygon at the vertex at position pos.
    void attach_face(int pos, int t_len, std::span<const SignedEdge> exposed,
                     std::span<const VertexId> new_vertex_labels, FaceId target_face);

    DiscDiagram build() const;

private:
    DartId new_dart_pair(VertexId from, VertexId to, SignedEdge label);
    VertexId new_vertex(VertexId label);
    void rot_insert_before(VertexId v, DartId anchor, DartId d);
    void rot_insert_after(VertexId v, DartId anchor, DartId d);

    std::vector<VertexId> dart_origin_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<VertexId> vertex_label_;
    std::vector<SignedEdge> dart_label_;
    std::vector<FaceId> dart_face_label_;
    std::vector<DartId> boundary_;
    int area_ = 0;
};

}  // namespace canclab
