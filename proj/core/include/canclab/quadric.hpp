#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "canclab/complex.hpp"
#include "canclab/diagram.hpp"
#include "canclab/smallcancel.hpp"

namespace canclab {

/// The square complex on the vertex/face incidence graph of a base complex,
/// with a square spanned on every 4-cycle through four distinct nodes.
/// Nodes [0, nv) are vertex nodes, [nv, nv + nf) are face nodes.
class Quadrization {
public:
    struct Square {
        // cycle order: vertex node, face node, vertex node, face node
        std::array<int, 4> cycle;
    };

    static Quadrization of(const TwoComplex& base);

    /// Synthetic square complex in quadrization shape, for tests and
    /// negative controls. Edges must join a vertex node to a face node.
    static Quadrization from_parts(int vertex_nodes, int face_nodes,
                                   std::vector<std::pair<int, int>> edges,
                                   std::vector<std::array<int, 4>> squares);

    int node_count() const { return nv_ + nf_; }
    int vertex_node_count() const { return nv_; }
    int face_node_count() const { return nf_; }
    bool is_face_node(int node) const { return node >= nv_; }

    int node_of_vertex(VertexId v) const { return v; }
    int node_of_face(FaceId f) const { return nv_ + f; }
    VertexId base_vertex(int node) const { return node; }
    FaceId base_face(int node) const { return node - nv_; }

    bool adjacent(int a, int b) const;
    const std::vector<int>& neighbors(int node) const { return adj_[node]; }

    const std::vector<Square>& squares() const { return squares_; }
    const std::vector<int>& squares_at(int node) const { return squares_at_[node]; }
    /// Square on the unordered corner pairs {a, c} and {b, d}, if spanned.
    std::optional<int> square_index(int a, int b, int c, int d) const;
    bool has_square(int a, int b, int c, int d) const { return square_index(a, b, c, d).has_value(); }

    /// Graph distance between nodes; -1 if disconnected.
    int distance(int a, int b) const;

    /// Link of a node in the square complex: neighbor nodes, with an arc per
    /// square corner at the node.
    struct NodeLink {
        std::vector<int> nodes;                     // neighbor node ids
        std::vector<std::pair<int, int>> arcs;      // indices into nodes
        int index_of(int node) const;
    };
    NodeLink link(int node) const;
    /// Distance between two neighbors of `node` inside its link; -1 if apart.
    int link_distance(int node, int a, int b) const;

    /// The quadrization as a 2-complex whose face f is squares()[f].
    const TwoComplex& as_complex() const { return complex_; }
    /// Edge id of an incidence pair in as_complex().
    std::optional<EdgeId> complex_edge(int a, int b) const;

private:
    Quadrization() = default;
    void index();
    void rebuild_complex(const std::vector<std::string>& node_names);

    int nv_ = 0;
    int nf_ = 0;
    std::vector<std::pair<int, int>> edges_;  // (vertex node, face node)
    std::vector<Square> squares_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> squares_at_;
    std::map<std::array<int, 4>, int> square_by_key_;
    std::map<std::pair<int, int>, EdgeId> complex_edge_;
    TwoComplex complex_{0, {}, {}};
};

Quadrization quadrize(const TwoComplex& base);

struct QuadrizeReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

/// For a base classified C(4)-T(4): every square's opposite vertex-node pair
/// spans a piece contained in the intersection of its two faces. Duplicate
/// attaching maps are flagged, since they void the piece correspondence.
QuadrizeReport verify_square_piece_correspondence(const TwoComplex& base, const Quadrization& y);

struct Cat0SquareReport {
    bool ok = true;
    std::vector<VertexId> witnesses;  // internal vertices with fewer than 4 squares
};

/// Internal vertices of a square disc diagram must meet at least 4 squares.
Cat0SquareReport cat0_square_check(const DiscDiagram& d);

/// Replaces two faces whose union boundary is a 4-cycle by the spanned
/// square. Area drops by one, the boundary walk is untouched.
DiscDiagram rule_A_apply(const Quadrization& y, const DiscDiagram& d, FaceId f1, FaceId f2);

struct RuleBResult {
    DiscDiagram diagram;
    std::pair<int, int> diagonal;  // Y nodes of the inserted edge
};

/// Replaces three squares around an internal valence-3 vertex by two squares
/// across a diagonal of the bounding 6-cycle.
RuleBResult rule_B_apply(const Quadrization& y, const DiscDiagram& d, FaceId f1, FaceId f2,
                         FaceId f3);

/// Applies rules A and B until every internal vertex meets at least four
/// squares. Boundary preserved, area never increases.
DiscDiagram minimize_diagram(const Quadrization& y, const DiscDiagram& d);

/// Rows u, v, w of equal length n >= 2 plus a cap adjacent to the ends of the
/// u and w rows. All 3n + 1 nodes distinct.
struct DoubleLadderWithCap {
    std::vector<int> u;
    std::vector<int> v;
    std::vector<int> w;
    int cap;

    int length() const { return static_cast<int>(u.size()); }
};

/// Embedded double ladders with cap up to the length bound (at least 2; the
/// resolution conditions need indices down to v_{n-1} and u_2, w_2).
std::vector<DoubleLadderWithCap> find_dlwc(const Quadrization& y, int max_len,
                                           std::size_t max_count = 10000);

struct DlwcResolution {
    int case_id = 0;  // 1..5, or 0 for a violation verdict
    std::pair<int, int> witness_edge{-1, -1};
    int index = -1;  // the i of cases 2 and 3
};

DlwcResolution dlwc_resolve(const Quadrization& y, const DoubleLadderWithCap& l);

/// An automorphism of the quadrization, as a node permutation preserving
/// sides, adjacency and squares.
struct YAutomorphism {
    std::vector<int> node_map;

    int operator()(int node) const { return node_map[node]; }
};

ValidationReport validate_y_automorphism(const Quadrization& y, const YAutomorphism& h);

/// The tuple of the ladder configuration: rows of diagram vertices
///   u[0..n] with u[0] = x,  v[0..n+1] with v[0] = x,
///   ubar[0..n] with ubar[0] = xbar,  vbar[0..n+1] with vbar[0] = xbar.
/// The diagram must be labeled into y.as_complex().
struct LaddyConfig {
    std::vector<VertexId> u;
    std::vector<VertexId> v;
    std::vector<VertexId> ubar;
    std::vector<VertexId> vbar;
};

struct LaddyResolution {
    enum class Case { replace_squares, rail_shortcut, fixed_square };
    Case c;
    int s = -1;                                        // for cases i and ii
    std::array<std::array<int, 4>, 2> squares{};       // case i replacement squares (Y nodes)
    std::array<int, 4> fixed_square{};                 // case iii square P
    int dlwc_case = 0;
};

/// Checks the four hypotheses (h carries u-row to v-row, disagrees on the bar
/// rows, the rows form a ladder in d, and the transported rows form a double
/// ladder with cap in y), resolves the cap configuration and maps its case.
LaddyResolution laddy_resolve(const Quadrization& y, const DiscDiagram& d,
                              const LaddyConfig& config, const YAutomorphism& h);

}  // namespace canclab
