#include "canclab/quadric.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "canclab/error.hpp"

namespace canclab {

namespace {

std::array<int, 4> square_key(int a, int b, int c, int d) {
    // corners a, c opposite; b, d opposite; pair order canonical
    std::pair<int, int> p1{std::min(a, c), std::max(a, c)};
    std::pair<int, int> p2{std::min(b, d), std::max(b, d)};
    if (p2 < p1) std::swap(p1, p2);
    return {p1.first, p1.second, p2.first, p2.second};
}

}  // namespace

Quadrization Quadrization::of(const TwoComplex& base) {
    Quadrization y;
    y.nv_ = static_cast<int>(base.vertex_count());
    y.nf_ = static_cast<int>(base.face_count());

    std::vector<std::set<int>> face_verts(y.nf_);
    for (FaceId f = 0; f < y.nf_; ++f) {
        for (const auto& s : base.face(f).boundary) {
            face_verts[f].insert(base.tail_of(s));
            face_verts[f].insert(base.head_of(s));
        }
        for (int v : face_verts[f]) y.edges_.push_back({v, y.nv_ + f});
    }
    for (FaceId f1 = 0; f1 < y.nf_; ++f1) {
        for (FaceId f2 = f1 + 1; f2 < y.nf_; ++f2) {
            std::vector<int> common;
            std::set_intersection(face_verts[f1].begin(), face_verts[f1].end(),
                                  face_verts[f2].begin(), face_verts[f2].end(),
                                  std::back_inserter(common));
            for (std::size_t i = 0; i < common.size(); ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    y.squares_.push_back(
                        {{common[i], y.nv_ + f1, common[j], y.nv_ + f2}});
                }
            }
        }
    }
    y.index();

    // carry base cell names into the square complex view
    std::vector<std::string> names;
    for (VertexId v = 0; v < y.nv_; ++v) names.push_back("n0_" + base.vertex_name(v));
    for (FaceId f = 0; f < y.nf_; ++f) names.push_back("n2_" + base.face_name(f));
    y.rebuild_complex(names);
    return y;
}

Quadrization Quadrization::from_parts(int vertex_nodes, int face_nodes,
                                      std::vector<std::pair<int, int>> edges,
                                      std::vector<std::array<int, 4>> squares) {
    Quadrization y;
    y.nv_ = vertex_nodes;
    y.nf_ = face_nodes;
    for (auto [a, b] : edges) {
        if (a > b) std::swap(a, b);
        if (a < 0 || a >= y.nv_ || b < y.nv_ || b >= y.node_count()) {
            throw Error("from_parts: edge must join a vertex node to a face node");
        }
        y.edges_.push_back({a, b});
    }
    for (const auto& sq : squares) y.squares_.push_back({sq});
    y.index();
    std::vector<std::string> names;
    for (int i = 0; i < y.node_count(); ++i) {
        names.push_back((i < y.nv_ ? "p" : "q") + std::to_string(i < y.nv_ ? i : i - y.nv_));
    }
    y.rebuild_complex(names);
    return y;
}

void Quadrization::index() {
    adj_.assign(node_count(), {});
    for (const auto& [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& v : adj_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    squares_at_.assign(node_count(), {});
    square_by_key_.clear();
    for (std::size_t i = 0; i < squares_.size(); ++i) {
        const auto& cy = squares_[i].cycle;
        for (int k = 0; k < 4; ++k) {
            if (!adjacent(cy[k], cy[(k + 1) % 4])) {
                throw Error("square cycle is not a closed 4-cycle in the graph");
            }
            squares_at_[cy[k]].push_back(static_cast<int>(i));
        }
        square_by_key_[square_key(cy[0], cy[1], cy[2], cy[3])] = static_cast<int>(i);
    }
}

void Quadrization::rebuild_complex(const std::vector<std::string>& node_names) {
    ComplexBuilder b;
    for (int i = 0; i < node_count(); ++i) b.add_vertex(node_names[i]);
    std::map<std::pair<int, int>, EdgeId> edge_id;
    for (const auto& [a, c] : edges_) {
        edge_id[{a, c}] = b.add_edge(a, c, "i" + std::to_string(edge_id.size()));
    }
    complex_edge_ = edge_id;
    for (std::size_t i = 0; i < squares_.size(); ++i) {
        const auto& cy = squares_[i].cycle;
        std::vector<SignedEdge> boundary;
        for (int k = 0; k < 4; ++k) {
            int from = cy[k], to = cy[(k + 1) % 4];
            bool rev = from > to;  // canonical direction: vertex node -> face node
            auto it = edge_id.find(rev ? std::make_pair(to, from) : std::make_pair(from, to));
            if (it == edge_id.end()) throw Error("square references missing incidence edge");
            boundary.push_back({it->second, rev});
        }
        b.add_face(std::move(boundary), "q" + std::to_string(i));
    }
    complex_ = std::move(b).build();
}

bool Quadrization::adjacent(int a, int b) const {
    const auto& n = adj_[a];
    return std::binary_search(n.begin(), n.end(), b);
}

std::optional<int> Quadrization::square_index(int a, int b, int c, int d) const {
    auto it = square_by_key_.find(square_key(a, b, c, d));
    if (it == square_by_key_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeId> Quadrization::complex_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = complex_edge_.find({a, b});
    if (it == complex_edge_.end()) return std::nullopt;
    return it->second;
}

int Quadrization::distance(int a, int b) const {
    if (a == b) return 0;
    std::vector<int> dist(node_count(), -1);
    std::deque<int> queue{a};
    dist[a] = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int nb : adj_[cur]) {
            if (dist[nb] != -1) continue;
            dist[nb] = dist[cur] + 1;
            if (nb == b) return dist[nb];
            queue.push_back(nb);
        }
    }
    return -1;
}

int Quadrization::NodeLink::index_of(int node) const {
    auto it = std::find(nodes.begin(), nodes.end(), node);
    return it == nodes.end() ? -1 : static_cast<int>(it - nodes.begin());
}

Quadrization::NodeLink Quadrization::link(int node) const {
    NodeLink l;
    l.nodes = adj_[node];
    for (int si : squares_at_[node]) {
        const auto& cy = squares_[si].cycle;
        int k = static_cast<int>(std::find(cy.begin(), cy.end(), node) - cy.begin());
        int a = l.index_of(cy[(k + 1) % 4]);
        int b = l.index_of(cy[(k + 3) % 4]);
        l.arcs.push_back({a, b});
    }
    return l;
}

int Quadrization::link_distance(int node, int a, int b) const {
    auto l = link(node);
    int ia = l.index_of(a), ib = l.index_of(b);
    if (ia < 0 || ib < 0) throw Error("link_distance: not neighbors of the node");
    if (ia == ib) return 0;
    std::vector<std::vector<int>> adj(l.nodes.size());
    for (auto& [x, yx] : l.arcs) {
        adj[x].push_back(yx);
        adj[yx].push_back(x);
    }
    std::vector<int> dist(l.nodes.size(), -1);
    std::deque<int> q{ia};
    dist[ia] = 0;
    while (!q.empty()) {
        int cur = q.front();
        q.pop_front();
        for (int nb : adj[cur]) {
            if (dist[nb] != -1) continue;
            dist[nb] = dist[cur] + 1;
            if (nb == ib) return dist[nb];
            q.push_back(nb);
        }
    }
    return -1;
}

Quadrization quadrize(const TwoComplex& base) { return Quadrization::of(base); }

namespace {

// Occurrence anchor of a signed edge path in a face boundary, if any.
std::optional<BoundaryAnchor> find_path_anchor(const TwoComplex& c, FaceId f,
                                               const std::vector<SignedEdge>& path) {
    const int n = c.face_size(f);
    for (bool rev : {false, true}) {
        for (int off = 0; off < n; ++off) {
            BoundaryAnchor a{f, off, rev};
            bool ok = true;
            for (std::size_t t = 0; t < path.size() && ok; ++t) {
                if (anchor_read(c, a, static_cast<int>(t)) != path[t]) ok = false;
            }
            if (ok) return a;
        }
    }
    return std::nullopt;
}

}  // namespace

QuadrizeReport verify_square_piece_correspondence(const TwoComplex& base, const Quadrization& y) {
    QuadrizeReport rep;
    // duplicate attaching maps void the correspondence
    for (FaceId f1 = 0; f1 < static_cast<int>(base.face_count()); ++f1) {
        for (FaceId f2 = f1 + 1; f2 < static_cast<int>(base.face_count()); ++f2) {
            bool dup = false;
            for (bool rev : {false, true}) {
                for (int off = 0; off < base.face_size(f2) && !dup; ++off) {
                    if (anchors_equivalent(base, {f1, 0, false}, {f2, off, rev})) dup = true;
                }
            }
            if (dup) {
                rep.issues.push_back("faces " + base.face_name(f1) + " and " + base.face_name(f2) +
                                     " have identical attaching maps");
            }
        }
    }

    for (const auto& sq : y.squares()) {
        VertexId v1 = y.base_vertex(sq.cycle[0]);
        VertexId v2 = y.base_vertex(sq.cycle[2]);
        FaceId f1 = y.base_face(sq.cycle[1]);
        FaceId f2 = y.base_face(sq.cycle[3]);
        auto inter = face_intersection(base, f1, f2);
        if (!inter.is_connected) {
            rep.issues.push_back("square on faces " + base.face_name(f1) + "," +
                                 base.face_name(f2) + ": intersection disconnected");
            continue;
        }
        // path from v1 to v2 inside the intersection
        std::map<VertexId, SignedEdge> back;
        std::set<VertexId> inter_v(inter.cells.vertices.begin(), inter.cells.vertices.end());
        std::deque<VertexId> q{v1};
        std::set<VertexId> seen{v1};
        while (!q.empty() && !seen.count(v2)) {
            VertexId cur = q.front();
            q.pop_front();
            for (EdgeId e : inter.cells.edges) {
                VertexId other = -1;
                bool rev = false;
                if (base.edge(e).tail == cur) {
                    other = base.edge(e).head;
                } else if (base.edge(e).head == cur) {
                    other = base.edge(e).tail;
                    rev = true;
                } else {
                    continue;
                }
                if (seen.count(other)) continue;
                seen.insert(other);
                back[other] = {e, rev};
                q.push_back(other);
            }
        }
        if (!seen.count(v2)) {
            rep.issues.push_back("square corners not joined inside the face intersection");
            continue;
        }
        std::vector<SignedEdge> path;
        for (VertexId at = v2; at != v1;) {
            auto s = back.at(at);
            path.push_back(s);
            at = base.tail_of(s);
        }
        std::reverse(path.begin(), path.end());
        if (path.empty()) continue;  // v1 == v2 cannot happen for a square
        auto a1 = find_path_anchor(base, f1, path);
        auto a2 = find_path_anchor(base, f2, path);
        if (!a1 || !a2) {
            rep.issues.push_back("shared path is not readable in both face boundaries");
            continue;
        }
        if (anchors_equivalent(base, *a1, *a2)) {
            rep.issues.push_back("square on faces " + base.face_name(f1) + "," +
                                 base.face_name(f2) + ": shared path is not a piece");
        }
    }
    return rep;
}

Cat0SquareReport cat0_square_check(const DiscDiagram& d) {
    for (FaceId f = 0; f < d.face_count(); ++f) {
        if (d.is_inner(f) && d.face_cycle(f).size() != 4) {
            throw Error("cat0_square_check: inner face is not a 4-gon");
        }
    }
    Cat0SquareReport rep;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (d.interior(v) && d.inner_corners(v) < 4) {
            rep.ok = false;
            rep.witnesses.push_back(v);
        }
    }
    return rep;
}

namespace {

// Removes an interior vertex and its incident edges, merging the surrounding
// faces into one orbit. Dart/vertex ids are compacted; dart_map_out records
// the renumbering (-1 for removed darts).
DiscDiagram delete_interior_vertex(const DiscDiagram& d, VertexId v,
                                   std::vector<int>* dart_map_out) {
    if (!d.interior(v)) throw Error("delete_interior_vertex: vertex is not interior");
    const auto& raw = d.raw();
    std::set<DartId> dead;
    for (DartId dart : d.rotation(v)) {
        if (d.target(dart) == v) throw Error("delete_interior_vertex: loop edge at vertex");
        dead.insert(dart);
        dead.insert(d.twin(dart));
    }

    std::vector<int> dart_map(d.dart_count(), -1);
    DiagramRaw out;
    for (DartId dart = 0; dart < d.dart_count(); dart += 2) {
        if (dead.count(dart)) continue;
        dart_map[dart] = static_cast<int>(out.dart_origin.size());
        dart_map[dart + 1] = dart_map[dart] + 1;
        out.dart_origin.push_back(0);
        out.dart_origin.push_back(0);
    }
    std::vector<int> vertex_map(d.vertex_count(), -1);
    int nv = 0;
    for (VertexId u = 0; u < d.vertex_count(); ++u) {
        if (u != v) vertex_map[u] = nv++;
    }
    out.vertex_count = nv;
    out.rotation.resize(nv);
    for (VertexId u = 0; u < d.vertex_count(); ++u) {
        if (u == v) continue;
        for (DartId dart : d.rotation(u)) {
            if (dead.count(dart)) continue;
            out.rotation[vertex_map[u]].push_back(dart_map[dart]);
        }
    }
    for (DartId dart = 0; dart < d.dart_count(); ++dart) {
        if (dart_map[dart] >= 0) out.dart_origin[dart_map[dart]] = vertex_map[d.origin(dart)];
    }
    out.outer_dart = dart_map[raw.outer_dart];
    if (out.outer_dart < 0) throw Error("delete_interior_vertex: outer dart removed");

    if (!raw.dart_label.empty()) {
        out.dart_label.resize(out.dart_origin.size());
        out.face_label_by_dart.assign(out.dart_origin.size(), -1);
        for (DartId dart = 0; dart < d.dart_count(); ++dart) {
            if (dart_map[dart] >= 0) {
                out.dart_label[dart_map[dart]] = raw.dart_label[dart];
                out.face_label_by_dart[dart_map[dart]] = raw.face_label_by_dart[dart];
            }
        }
        out.vertex_label.resize(nv);
        for (VertexId u = 0; u < d.vertex_count(); ++u) {
            if (u != v) out.vertex_label[vertex_map[u]] = raw.vertex_label[u];
        }
    }
    if (dart_map_out) *dart_map_out = dart_map;
    return DiscDiagram::from_raw(std::move(out));
}

// Relabels one face of the diagram (by any dart on it).
DiscDiagram relabel_face(const DiscDiagram& d, DartId on_face, FaceId new_label) {
    DiagramRaw raw = d.raw();
    for (DartId dart : d.face_cycle(d.face_of(on_face))) raw.face_label_by_dart[dart] = new_label;
    return DiscDiagram::from_raw(std::move(raw));
}

// Splits a face by a new edge between the vertices at two of its cycle
// positions.
DiscDiagram split_face(const DiscDiagram& d, FaceId f, int slot_a, int slot_b,
                       SignedEdge diagonal_label) {
    auto cycle = d.face_cycle(f);
    DartId da = cycle[slot_a], db = cycle[slot_b];
    VertexId va = d.origin(da), vb = d.origin(db);

    DiagramRaw raw = d.raw();
    DartId g = static_cast<DartId>(raw.dart_origin.size());
    raw.dart_origin.push_back(va);
    raw.dart_origin.push_back(vb);
    if (!raw.dart_label.empty()) {
        raw.dart_label.push_back(diagonal_label);
        raw.dart_label.push_back(diagonal_label.inverse());
        raw.face_label_by_dart.push_back(-1);
        raw.face_label_by_dart.push_back(-1);
    }
    auto insert_before = [&](VertexId v, DartId anchor, DartId nd) {
        auto& rot = raw.rotation[v];
        auto it = std::find(rot.begin(), rot.end(), anchor);
        rot.insert(it, nd);
    };
    insert_before(va, da, g);
    insert_before(vb, db, g + 1);
    return DiscDiagram::from_raw(std::move(raw));
}

// Shared edges between two inner faces, as darts on the first face.
std::vector<DartId> shared_darts(const DiscDiagram& d, FaceId f1, FaceId f2) {
    std::vector<DartId> out;
    for (DartId dart : d.face_cycle(f1)) {
        if (d.face_of(d.twin(dart)) == f2) out.push_back(dart);
    }
    return out;
}

}  // namespace

DiscDiagram rule_A_apply(const Quadrization& y, const DiscDiagram& d, FaceId f1, FaceId f2) {
    if (f1 == f2 || !d.is_inner(f1) || !d.is_inner(f2)) {
        throw Error("rule A: need two distinct inner faces");
    }
    auto shared = shared_darts(d, f1, f2);
    if (shared.size() != 2) throw Error("rule A: union boundary is not a 4-cycle");
    // the shared edges must meet at an interior valence-2 vertex
    VertexId v = -1;
    for (VertexId cand : {d.origin(shared[0]), d.target(shared[0])}) {
        if ((d.origin(shared[1]) == cand || d.target(shared[1]) == cand) && d.valence(cand) == 2 &&
            d.interior(cand)) {
            v = cand;
        }
    }
    if (v < 0) throw Error("rule A: union boundary is not a 4-cycle");

    DartId keep = -1;
    for (DartId dart : d.face_cycle(f1)) {
        if (d.origin(dart) != v && d.target(dart) != v) keep = dart;
    }
    if (keep < 0) throw Error("rule A: face has no dart away from the merge vertex");
    std::vector<int> dart_map;
    auto merged = delete_interior_vertex(d, v, &dart_map);

    FaceId mf = merged.face_of(dart_map[keep]);
    auto cycle = merged.face_cycle(mf);
    if (cycle.size() != 4) throw Error("rule A: merged region is not a 4-gon");
    std::array<int, 4> corners;
    for (int k = 0; k < 4; ++k) corners[k] = merged.vertex_label(merged.origin(cycle[k]));
    for (int k = 0; k < 4; ++k) {
        for (int l = k + 1; l < 4; ++l) {
            if (corners[k] == corners[l]) {
                throw Error("rule A: union boundary is not an embedded 4-cycle");
            }
        }
    }
    auto sq = y.square_index(corners[0], corners[1], corners[2], corners[3]);
    if (!sq) throw Error("rule A: spanned square missing from the quadrization");
    return relabel_face(merged, cycle[0], *sq);
}

RuleBResult rule_B_apply(const Quadrization& y, const DiscDiagram& d, FaceId f1, FaceId f2,
                         FaceId f3) {
    std::set<FaceId> fs{f1, f2, f3};
    if (fs.size() != 3) throw Error("rule B: need three distinct faces");
    for (FaceId f : fs) {
        if (!d.is_inner(f)) throw Error("rule B: faces must be inner");
    }
    // the common interior valence-3 vertex
    VertexId v = -1;
    for (VertexId cand = 0; cand < d.vertex_count(); ++cand) {
        if (!d.interior(cand) || d.valence(cand) != 3) continue;
        std::set<FaceId> around;
        for (DartId dart : d.rotation(cand)) around.insert(d.face_of(dart));
        if (around == fs) v = cand;
    }
    if (v < 0) throw Error("rule B: faces do not surround an interior valence-3 vertex");

    DartId keep = -1;
    for (DartId dart : d.face_cycle(f1)) {
        if (d.origin(dart) != v && d.target(dart) != v) keep = dart;
    }
    if (keep < 0) throw Error("rule B: face has no dart away from the merge vertex");
    std::vector<int> dart_map;
    auto merged = delete_interior_vertex(d, v, &dart_map);

    FaceId mf = merged.face_of(dart_map[keep]);
    auto cycle_span = merged.face_cycle(mf);
    std::vector<DartId> cycle(cycle_span.begin(), cycle_span.end());
    if (cycle.size() != 6) throw Error("rule B: merged region is not a 6-cycle");
    std::array<int, 6> hex;
    for (int k = 0; k < 6; ++k) hex[k] = merged.vertex_label(merged.origin(cycle[k]));
    for (int k = 0; k < 6; ++k) {
        for (int l = k + 1; l < 6; ++l) {
            if (hex[k] == hex[l]) {
                throw Error("rule B: union boundary is not an embedded 6-cycle");
            }
        }
    }

    for (int k = 0; k < 3; ++k) {
        int a = hex[k], b = hex[k + 3];
        if (!y.adjacent(a, b)) continue;
        auto sq1 = y.square_index(hex[k], hex[(k + 1) % 6], hex[(k + 2) % 6], hex[(k + 3) % 6]);
        auto sq2 = y.square_index(hex[(k + 3) % 6], hex[(k + 4) % 6], hex[(k + 5) % 6], hex[k]);
        if (!sq1 || !sq2) continue;
        auto eid = y.complex_edge(std::min(a, b), std::max(a, b));
        if (!eid) continue;
        bool rev = a > b;  // canonical direction: vertex node -> face node
        auto split = split_face(merged, mf, k, k + 3, SignedEdge{*eid, rev});
        // the new darts are the last pair; the face through g covers hex[k+3..k+5]
        DartId g = split.dart_count() - 2;
        split = relabel_face(split, g, *sq2);
        split = relabel_face(split, g + 1, *sq1);
        return {std::move(split), {a, b}};
    }
    throw Error("rule B: no diagonal spans two squares (quadrization violation)");
}

DiscDiagram minimize_diagram(const Quadrization& y, const DiscDiagram& d) {
    DiscDiagram cur = d;
    for (int guard = 0; guard <= d.area() + 1; ++guard) {
        VertexId v2 = -1, v3 = -1;
        for (VertexId v = 0; v < cur.vertex_count(); ++v) {
            if (!cur.interior(v)) continue;
            if (cur.valence(v) == 2 && v2 < 0) v2 = v;
            if (cur.valence(v) == 3 && v3 < 0) v3 = v;
        }
        if (v2 >= 0) {
            auto rot = cur.rotation(v2);
            cur = rule_A_apply(y, cur, cur.face_of(rot[0]), cur.face_of(rot[1]));
            continue;
        }
        if (v3 >= 0) {
            auto rot = cur.rotation(v3);
            cur = rule_B_apply(y, cur, cur.face_of(rot[0]), cur.face_of(rot[1]),
                               cur.face_of(rot[2]))
                      .diagram;
            continue;
        }
        return cur;
    }
    throw Error("minimize_diagram: did not terminate");
}

std::vector<DoubleLadderWithCap> find_dlwc(const Quadrization& y, int max_len,
                                           std::size_t max_count) {
    std::vector<DoubleLadderWithCap> out;
    if (max_len < 2) return out;

    const auto& squares = y.squares();
    for (const auto& sq : squares) {
        for (int rot = 0; rot < 4 && out.size() < max_count; ++rot) {
            int cap = sq.cycle[rot];
            int un = sq.cycle[(rot + 1) % 4];
            int vn = sq.cycle[(rot + 2) % 4];
            int wn = sq.cycle[(rot + 3) % 4];

            // extend rows downward; rows stored top index first, reversed at emit
            std::vector<int> us{un}, vs{vn}, ws{wn};
            std::set<int> used{cap, un, vn, wn};

            std::function<void(void)> extend = [&]() {
                const int depth = static_cast<int>(us.size());
                if (depth >= 2 && out.size() < max_count) {
                    DoubleLadderWithCap l;
                    l.u.assign(us.rbegin(), us.rend());
                    l.v.assign(vs.rbegin(), vs.rend());
                    l.w.assign(ws.rbegin(), ws.rend());
                    l.cap = cap;
                    out.push_back(std::move(l));
                }
                if (depth >= max_len || out.size() >= max_count) return;
                int cu = us.back(), cv = vs.back(), cw = ws.back();
                for (int nu : y.neighbors(cu)) {
                    if (used.count(nu)) continue;
                    for (int nv : y.neighbors(cv)) {
                        if (nv == nu || used.count(nv)) continue;
                        if (!y.adjacent(nu, nv)) continue;
                        // square with cycle <nu, cu, cv, nv>
                        if (!y.has_square(nu, cu, cv, nv)) continue;
                        for (int nw : y.neighbors(cw)) {
                            if (nw == nu || nw == nv || used.count(nw)) continue;
                            if (!y.adjacent(nv, nw)) continue;
                            if (!y.has_square(nv, cv, cw, nw)) continue;
                            us.push_back(nu);
                            vs.push_back(nv);
                            ws.push_back(nw);
                            used.insert(nu);
                            used.insert(nv);
                            used.insert(nw);
                            extend();
                            used.erase(nu);
                            used.erase(nv);
                            used.erase(nw);
                            us.pop_back();
                            vs.pop_back();
                            ws.pop_back();
                        }
                    }
                }
            };
            extend();
        }
    }
    return out;
}

DlwcResolution dlwc_resolve(const Quadrization& y, const DoubleLadderWithCap& l) {
    const int n = l.length();
    if (n < 2) throw Error("dlwc_resolve: length must be at least 2");
    DlwcResolution r;
    if (y.adjacent(l.cap, l.v[n - 2])) {
        r.case_id = 1;
        r.witness_edge = {l.cap, l.v[n - 2]};
        return r;
    }
    for (int i = 3; i <= n; ++i) {
        if (y.adjacent(l.u[i - 1], l.v[i - 3])) {
            r.case_id = 2;
            r.witness_edge = {l.u[i - 1], l.v[i - 3]};
            r.index = i;
            return r;
        }
    }
    for (int i = 3; i <= n; ++i) {
        if (y.adjacent(l.w[i - 1], l.v[i - 3])) {
            r.case_id = 3;
            r.witness_edge = {l.w[i - 1], l.v[i - 3]};
            r.index = i;
            return r;
        }
    }
    if (y.adjacent(l.u[1], l.w[0])) {
        r.case_id = 4;
        r.witness_edge = {l.u[1], l.w[0]};
        return r;
    }
    if (y.adjacent(l.u[0], l.w[1])) {
        r.case_id = 5;
        r.witness_edge = {l.u[0], l.w[1]};
        return r;
    }
    r.case_id = 0;
    return r;
}

ValidationReport validate_y_automorphism(const Quadrization& y, const YAutomorphism& h) {
    ValidationReport rep;
    const int n = y.node_count();
    if (static_cast<int>(h.node_map.size()) != n) {
        rep.issues.push_back({"size", "node map has wrong size"});
        return rep;
    }
    std::vector<bool> hit(n, false);
    for (int i = 0; i < n; ++i) {
        int img = h.node_map[i];
        if (img < 0 || img >= n || hit[img]) {
            rep.issues.push_back({"bijection", "node map is not a permutation"});
            return rep;
        }
        hit[img] = true;
        if (y.is_face_node(i) != y.is_face_node(img)) {
            rep.issues.push_back({"sides", "node map mixes vertex and face nodes"});
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b : y.neighbors(a)) {
            if (!y.adjacent(h.node_map[a], h.node_map[b])) {
                rep.issues.push_back({"adjacency", "image of an edge is not an edge"});
                return rep;
            }
        }
    }
    for (const auto& sq : y.squares()) {
        if (!y.square_index(h.node_map[sq.cycle[0]], h.node_map[sq.cycle[1]],
                            h.node_map[sq.cycle[2]], h.node_map[sq.cycle[3]])) {
            rep.issues.push_back({"squares", "image of a square is not a square"});
            return rep;
        }
    }
    return rep;
}

namespace {

bool diagram_adjacent(const DiscDiagram& d, VertexId a, VertexId b) {
    for (DartId dart : d.rotation(a)) {
        if (d.target(dart) == b) return true;
    }
    return false;
}

}  // namespace

LaddyResolution laddy_resolve(const Quadrization& y, const DiscDiagram& d,
                              const LaddyConfig& config, const YAutomorphism& h) {
    const int n = static_cast<int>(config.u.size()) - 1;
    auto fail = [](const std::string& what) { throw Error("laddy hypotheses: " + what); };

    if (n < 1) fail("need n >= 1");
    if (config.ubar.size() != config.u.size() || config.v.size() != config.u.size() + 1 ||
        config.vbar.size() != config.v.size()) {
        fail("row sizes must be n+1, n+2, n+1, n+2");
    }
    if (!d.labeled()) fail("diagram must be labeled into the quadrization");
    if (config.u[0] != config.v[0] || config.ubar[0] != config.vbar[0]) {
        fail("rows must share x and xbar");
    }

    auto lab = [&](VertexId dv) { return d.vertex_label(dv); };

    // 1) h carries the u-row to the v-row
    for (int i = 0; i <= n; ++i) {
        if (h(lab(config.u[i])) != lab(config.v[i])) fail("h u_i = v_i fails");
    }
    // 2) and disagrees on the bar rows
    for (int i = 0; i <= n; ++i) {
        if (h(lab(config.ubar[i])) == lab(config.vbar[i])) fail("h ubar_i != vbar_i fails");
    }
    // 3) the rows form a ladder in d
    std::vector<VertexId> top, bottom;
    for (int i = n; i >= 1; --i) top.push_back(config.u[i]);
    for (std::size_t i = 0; i < config.v.size(); ++i) top.push_back(config.v[i]);
    for (int i = n; i >= 1; --i) bottom.push_back(config.ubar[i]);
    for (std::size_t i = 0; i < config.vbar.size(); ++i) bottom.push_back(config.vbar[i]);
    for (std::size_t i = 0; i + 1 < top.size(); ++i) {
        if (!diagram_adjacent(d, top[i], top[i + 1])) fail("top rail missing in diagram");
        if (!diagram_adjacent(d, bottom[i], bottom[i + 1])) fail("bottom rail missing in diagram");
    }
    for (std::size_t i = 0; i < top.size(); ++i) {
        if (!diagram_adjacent(d, top[i], bottom[i])) fail("rung missing in diagram");
    }

    // 4) the transported rows form a double ladder with cap in y
    DoubleLadderWithCap l;
    l.u.push_back(h(lab(config.ubar[0])));
    for (int i = 1; i <= n; ++i) l.u.push_back(h(lab(config.ubar[i])));
    for (int i = 0; i <= n; ++i) l.v.push_back(lab(config.v[i]));
    for (int i = 0; i <= n; ++i) l.w.push_back(lab(config.vbar[i]));
    l.cap = lab(config.vbar[n + 1]);
    const int N = l.length();  // = n + 1
    {
        std::set<int> all(l.u.begin(), l.u.end());
        all.insert(l.v.begin(), l.v.end());
        all.insert(l.w.begin(), l.w.end());
        all.insert(l.cap);
        if (static_cast<int>(all.size()) != 3 * N + 1) fail("double ladder nodes not distinct");
    }
    for (int i = 0; i + 1 < N; ++i) {
        if (!y.adjacent(l.u[i], l.u[i + 1]) || !y.adjacent(l.v[i], l.v[i + 1]) ||
            !y.adjacent(l.w[i], l.w[i + 1])) {
            fail("double ladder rail missing in quadrization");
        }
        if (!y.has_square(l.u[i], l.u[i + 1], l.v[i + 1], l.v[i]) ||
            !y.has_square(l.v[i], l.v[i + 1], l.w[i + 1], l.w[i])) {
            fail("double ladder square missing in quadrization");
        }
    }
    for (int i = 0; i < N; ++i) {
        if (!y.adjacent(l.u[i], l.v[i]) || !y.adjacent(l.v[i], l.w[i])) {
            fail("double ladder rung missing in quadrization");
        }
    }
    if (!y.adjacent(l.cap, l.u[N - 1]) || !y.adjacent(l.cap, l.w[N - 1]) ||
        !y.square_index(l.cap, l.u[N - 1], l.v[N - 1], l.w[N - 1])) {
        fail("cap square missing in quadrization");
    }

    auto res = dlwc_resolve(y, l);
    LaddyResolution out;
    out.dlwc_case = res.case_id;

    auto ynode = [&](VertexId dv) { return lab(dv); };

    if (res.case_id == 1 || res.case_id == 3) {
        int s = res.case_id == 1 ? n + 1 : res.index - 1;
        out.c = LaddyResolution::Case::replace_squares;
        out.s = s;
        out.squares[0] = {ynode(config.vbar[s]), ynode(config.v[s - 2]), ynode(config.v[s - 1]),
                          ynode(config.v[s])};
        out.squares[1] = {ynode(config.vbar[s]), ynode(config.v[s - 2]), ynode(config.vbar[s - 2]),
                          ynode(config.vbar[s - 1])};
        for (const auto& sq : out.squares) {
            if (!y.has_square(sq[0], sq[1], sq[2], sq[3])) {
                throw Error("laddy: replacement square missing from quadrization");
            }
        }
        return out;
    }
    if (res.case_id == 2) {
        int s = res.index - 1;
        if (!y.adjacent(ynode(config.ubar[s]), ynode(config.u[s - 2]))) {
            throw Error("laddy: translated shortcut edge missing");
        }
        out.c = LaddyResolution::Case::rail_shortcut;
        out.s = s;
        return out;
    }
    if (res.case_id == 4 || res.case_id == 5) {
        out.c = LaddyResolution::Case::fixed_square;
        int x = ynode(config.u[0]);
        int xbar = ynode(config.ubar[0]);
        int last = res.case_id == 4 ? h(ynode(config.ubar[1])) : ynode(config.vbar[1]);
        out.fixed_square = {xbar, x, h(xbar), last};
        if (!y.square_index(xbar, x, h(xbar), last)) {
            throw Error("laddy: square P missing from quadrization");
        }
        return out;
    }
    throw Error("laddy: double ladder with cap resolved to no case");
}

}  // namespace canclab
