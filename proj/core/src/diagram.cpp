#include "canclab/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "canclab/error.hpp"

namespace canclab {

DiscDiagram DiscDiagram::trivial(VertexId base_label) {
    DiagramRaw raw;
    raw.vertex_count = 1;
    raw.rotation.resize(1);
    if (base_label >= 0) raw.vertex_label = {base_label};
    return from_raw(std::move(raw));
}

DiscDiagram DiscDiagram::from_raw(DiagramRaw raw) {
    DiscDiagram d;
    d.raw_ = std::move(raw);
    d.derive();
    return d;
}

void DiscDiagram::derive() {
    const int nd = dart_count();
    well_formed_ = true;
    defect_.clear();

    auto fail = [&](const std::string& why) {
        well_formed_ = false;
        if (defect_.empty()) defect_ = why;
    };

    if (nd % 2 != 0) fail("odd dart count");
    if (static_cast<int>(raw_.rotation.size()) != raw_.vertex_count) {
        fail("rotation table size mismatch");
    }
    for (DartId d = 0; d < nd && well_formed_; ++d) {
        if (raw_.dart_origin[d] < 0 || raw_.dart_origin[d] >= raw_.vertex_count) {
            fail("dart origin out of range");
        }
    }
    // rotation lists must partition darts, each at its origin
    if (well_formed_) {
        std::vector<int> seen(nd, 0);
        for (VertexId v = 0; v < raw_.vertex_count; ++v) {
            for (DartId d : raw_.rotation[v]) {
                if (d < 0 || d >= nd) {
                    fail("rotation references unknown dart");
                    break;
                }
                seen[d]++;
                if (raw_.dart_origin[d] != v) fail("dart listed at wrong vertex");
            }
        }
        for (DartId d = 0; d < nd && well_formed_; ++d) {
            if (seen[d] != 1) fail("rotation lists do not partition darts");
        }
    }
    if (nd > 0) {
        if (raw_.outer_dart < 0 || raw_.outer_dart >= nd) fail("missing outer dart");
    }
    if (!raw_.dart_label.empty() && static_cast<int>(raw_.dart_label.size()) != nd) {
        fail("dart label table size mismatch");
    }
    if (!raw_.vertex_label.empty() &&
        static_cast<int>(raw_.vertex_label.size()) != raw_.vertex_count) {
        fail("vertex label table size mismatch");
    }

    if (!well_formed_) return;

    // rotation position lookup for next_in_face
    rot_pos_.assign(nd, -1);
    for (VertexId v = 0; v < raw_.vertex_count; ++v) {
        for (std::size_t i = 0; i < raw_.rotation[v].size(); ++i) {
            rot_pos_[raw_.rotation[v][i]] = static_cast<int>(i);
        }
    }

    face_of_dart_.assign(nd, -1);
    face_slot_.assign(nd, -1);
    face_cycles_.clear();
    for (DartId start = 0; start < nd; ++start) {
        if (face_of_dart_[start] != -1) continue;
        FaceId f = static_cast<FaceId>(face_cycles_.size());
        std::vector<DartId> cycle;
        DartId d = start;
        do {
            face_of_dart_[d] = f;
            face_slot_[d] = static_cast<int>(cycle.size());
            cycle.push_back(d);
            d = next_in_face(d);
        } while (d != start && static_cast<int>(cycle.size()) <= nd);
        if (d != start) {
            fail("face orbit does not close");
            return;
        }
        face_cycles_.push_back(std::move(cycle));
    }
    if (nd == 0) {
        face_cycles_.push_back({});
        outer_face_ = 0;
    } else {
        outer_face_ = face_of_dart_[raw_.outer_dart];
    }
}

DartId DiscDiagram::next_in_face(DartId d) const {
    DartId t = d ^ 1;
    VertexId v = raw_.dart_origin[t];
    const auto& rot = raw_.rotation[v];
    int pos = rot_pos_[t];
    return rot[(pos + 1) % rot.size()];
}

int DiscDiagram::inner_corners(VertexId v) const {
    int rho = 0;
    for (DartId d : raw_.rotation[v]) {
        if (is_inner(face_of_dart_[d])) ++rho;
    }
    return rho;
}

bool DiscDiagram::interior(VertexId v) const {
    if (raw_.rotation[v].empty()) return false;  // isolated vertex sits on the boundary
    for (DartId d : raw_.rotation[v]) {
        if (!is_inner(face_of_dart_[d])) return false;
    }
    return true;
}

FaceId DiscDiagram::face_label(FaceId f) const {
    if (raw_.face_label_by_dart.empty() || face_cycles_[f].empty()) return -1;
    return raw_.face_label_by_dart[face_cycles_[f][0]];
}

DiagramValidation validate_diagram(const DiscDiagram& d) {
    DiagramValidation rep;
    if (!d.well_formed()) {
        rep.issues.push_back("structure: " + d.defect());
        return rep;
    }
    const int V = d.vertex_count();
    const int E = d.edge_count();
    const int F = d.face_count();
    if (V - E + F != 2) {
        rep.issues.push_back("euler: V - E + F = " + std::to_string(V - E + F) + ", expected 2");
    }
    // connectivity over vertices via edges
    if (V > 0) {
        std::vector<int> comp(V, -1);
        std::vector<VertexId> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (DartId dart : d.rotation(v)) {
                VertexId u = d.target(dart);
                if (comp[u] == -1) {
                    comp[u] = 0;
                    stack.push_back(u);
                }
            }
        }
        for (VertexId v = 0; v < V; ++v) {
            if (comp[v] == -1) {
                rep.issues.push_back("disconnected: vertex " + std::to_string(v) + " unreachable");
                break;
            }
        }
    }
    return rep;
}

std::optional<BoundaryAnchor> face_label_anchor(const DiscDiagram& d, const TwoComplex& target,
                                                FaceId f) {
    if (!d.is_inner(f)) return std::nullopt;
    auto cycle = d.face_cycle(f);
    FaceId tf = d.face_label(f);
    if (tf < 0 || tf >= static_cast<int>(target.face_count())) return std::nullopt;
    const int n = target.face_size(tf);
    if (n != static_cast<int>(cycle.size())) return std::nullopt;
    for (bool rev : {false, true}) {
        for (int off = 0; off < n; ++off) {
            BoundaryAnchor a{tf, off, rev};
            bool ok = true;
            for (int t = 0; t < n && ok; ++t) {
                if (anchor_read(target, a, t) != d.dart_label(cycle[t])) ok = false;
            }
            if (ok) return a;
        }
    }
    return std::nullopt;
}

DiagramValidation validate_labels(const DiscDiagram& d, const TwoComplex& target) {
    DiagramValidation rep;
    if (!d.well_formed()) {
        rep.issues.push_back("structure: " + d.defect());
        return rep;
    }
    if (!d.labeled()) {
        rep.issues.push_back("diagram is unlabeled");
        return rep;
    }
    for (DartId dart = 0; dart < d.dart_count(); ++dart) {
        SignedEdge s = d.dart_label(dart);
        if (s.edge < 0 || s.edge >= static_cast<int>(target.edge_count())) {
            rep.issues.push_back("dart " + std::to_string(dart) + " has no valid edge label");
            continue;
        }
        if (d.dart_label(d.twin(dart)) != s.inverse()) {
            rep.issues.push_back("dart " + std::to_string(dart) + " twin label is not inverse");
        }
        VertexId vl = d.vertex_label(d.origin(dart));
        if (vl != target.tail_of(s)) {
            rep.issues.push_back("dart " + std::to_string(dart) + " origin label mismatch");
        }
    }
    for (FaceId f = 0; f < d.face_count(); ++f) {
        if (!d.is_inner(f)) continue;
        if (!face_label_anchor(d, target, f)) {
            rep.issues.push_back("face " + std::to_string(f) +
                                 " does not read its target attaching word");
        }
    }
    return rep;
}

std::span<const DartId> boundary_cycle(const DiscDiagram& d) {
    return d.face_cycle(d.outer_face());
}

bool between(const DiscDiagram& d, int orientation, int u, int w, int v) {
    const int n = static_cast<int>(boundary_cycle(d).size());
    if (u < 0 || w < 0 || v < 0 || u >= n || w >= n || v >= n) {
        throw Error("between: boundary position out of range");
    }
    auto fwd = [&](int a, int b) { return ((b - a) % n + n) % n; };
    if (orientation >= 0) {
        int dw = fwd(u, w), dv = fwd(u, v);
        return dw > 0 && dv > 0 && dw < dv;
    }
    int dw = fwd(w, u), dv = fwd(v, u);
    return dw > 0 && dv > 0 && dw < dv;
}

CurvatureHalfPi curvature(const DiscDiagram& d, VertexId v) {
    return {4 - 2 * d.valence(v) + d.inner_corners(v)};
}

GaussBonnetAudit gauss_bonnet_audit(const DiscDiagram& d) {
    GaussBonnetAudit a;
    int total = 0, btotal = 0;
    bool cat0 = true;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        int k = curvature(d, v).value;
        total += k;
        if (d.on_boundary(v)) {
            btotal += k;
        } else if (d.valence(v) < 4) {
            cat0 = false;
        }
    }
    a.total = {total};
    a.boundary_total = {btotal};
    a.interior_cat0 = cat0;
    a.pass = total == 4 && (!cat0 || btotal >= 4);
    return a;
}

namespace {

// Union-find over the cells of the diagram minus a set of vertices.
// Cell indexing: vertices [0, V), edges [V, V+E), inner faces [V+E, ...).
struct CellComponents {
    int count = 0;
    std::vector<int> comp_of_cell;  // -1 for removed / outer

    static CellComponents compute(const DiscDiagram& d, const std::set<VertexId>& removed) {
        const int V = d.vertex_count();
        const int E = d.edge_count();
        const int F = d.face_count();
        const int total = V + E + F;
        std::vector<int> parent(total);
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<bool> present(total, false);

        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

        for (VertexId v = 0; v < V; ++v) present[v] = !removed.count(v);
        for (int e = 0; e < E; ++e) present[V + e] = true;
        for (FaceId f = 0; f < F; ++f) present[V + E + f] = d.is_inner(f);

        for (int e = 0; e < E; ++e) {
            VertexId t = d.origin(2 * e);
            VertexId h = d.origin(2 * e + 1);
            if (present[t]) unite(V + e, t);
            if (present[h]) unite(V + e, h);
        }
        for (FaceId f = 0; f < F; ++f) {
            if (!d.is_inner(f)) continue;
            for (DartId dart : d.face_cycle(f)) {
                unite(V + E + f, V + dart / 2);
                if (present[d.origin(dart)]) unite(V + E + f, d.origin(dart));
            }
        }

        CellComponents out;
        out.comp_of_cell.assign(total, -1);
        std::map<int, int> root_id;
        for (int cell = 0; cell < total; ++cell) {
            if (!present[cell]) continue;
            int r = find(cell);
            auto [it, fresh] = root_id.emplace(r, out.count);
            if (fresh) ++out.count;
            out.comp_of_cell[cell] = it->second;
        }
        return out;
    }
};

}  // namespace

CutSets cut_and_singular_vertices(const DiscDiagram& d) {
    CutSets out;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        auto comps = CellComponents::compute(d, {v});
        if (comps.count >= 2) {
            out.cut.push_back(v);
            if (d.inner_corners(v) >= 1) out.singular.push_back(v);
        }
    }
    return out;
}

ModifiedCutTree modified_cut_tree(const DiscDiagram& d) {
    ModifiedCutTree t;
    t.singular = cut_and_singular_vertices(d).singular;
    std::set<VertexId> removed(t.singular.begin(), t.singular.end());
    auto comps = CellComponents::compute(d, removed);
    t.component_count = comps.count;

    const int V = d.vertex_count();
    const int E = d.edge_count();
    std::set<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < t.singular.size(); ++i) {
        VertexId v = t.singular[i];
        // v is in the closure of a component through each incident edge or face
        for (DartId dart : d.rotation(v)) {
            int ec = comps.comp_of_cell[V + dart / 2];
            if (ec >= 0) edges.insert({static_cast<int>(i), ec});
            FaceId f = d.face_of(dart);
            if (d.is_inner(f)) {
                int fc = comps.comp_of_cell[V + E + f];
                if (fc >= 0) edges.insert({static_cast<int>(i), fc});
            }
        }
    }
    t.edges.assign(edges.begin(), edges.end());

    // tree check: connected and |edges| = |nodes| - 1 (for nonempty diagrams)
    const int nodes = static_cast<int>(t.singular.size()) + t.component_count;
    if (nodes == 0) {
        t.is_tree = true;
        return t;
    }
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    bool acyclic = true;
    for (auto& [si, ci] : t.edges) {
        int a = find(si);
        int b = find(static_cast<int>(t.singular.size()) + ci);
        if (a == b) {
            acyclic = false;
        } else {
            parent[a] = b;
            ++merges;
        }
    }
    t.is_tree = acyclic && merges == nodes - 1;
    return t;
}

int ModifiedCutTree::degree_of_singular(int i) const {
    int deg = 0;
    for (auto& [si, ci] : edges) {
        if (si == i) ++deg;
    }
    return deg;
}

SingularIdentityReport singular_identity_check(const DiscDiagram& d) {
    SingularIdentityReport rep;
    auto tree = modified_cut_tree(d);
    for (std::size_t i = 0; i < tree.singular.size(); ++i) {
        VertexId v = tree.singular[i];
        SingularIdentityReport::Entry e;
        e.v = v;
        e.delta = d.valence(v);
        e.rho = d.inner_corners(v);
        e.tree_degree = tree.degree_of_singular(static_cast<int>(i));
        e.kappa = curvature(d, v);
        e.identity_ok = e.delta == e.rho + e.tree_degree;
        e.kappa_ok = e.kappa.value <= -1;
        rep.entries.push_back(e);
    }
    return rep;
}

bool SingularIdentityReport::ok() const {
    for (const auto& e : entries) {
        if (!e.identity_ok || !e.kappa_ok) return false;
    }
    return true;
}

GeodesicBoundaryReport geodesic_boundary_check(const DiscDiagram& d, int start, int length) {
    GeodesicBoundaryReport rep;
    const int n = static_cast<int>(boundary_cycle(d).size());
    if (length < 0 || length > n || start < 0 || start >= n) {
        throw Error("geodesic_boundary_check: subwalk out of range");
    }
    auto vertex_at = [&](int pos) { return d.origin(boundary_cycle(d)[pos % n]); };
    int last_plus = -1;
    bool separator_seen = false;
    for (int i = 1; i < length; ++i) {
        VertexId v = vertex_at(start + i);
        int k = curvature(d, v).value;
        if (k >= 2) {
            rep.ok = false;
            rep.violations.push_back("internal vertex at offset " + std::to_string(i) +
                                     " has curvature pi");
        }
        if (k <= -1) separator_seen = true;
        if (k == 1) {
            if (last_plus >= 0 && !separator_seen) {
                rep.ok = false;
                rep.violations.push_back("curvature pi/2 vertices at offsets " +
                                         std::to_string(last_plus) + " and " + std::to_string(i) +
                                         " with no curvature <= -pi/2 between");
            }
            last_plus = i;
            separator_seen = false;
        }
    }
    return rep;
}

SngReport sng_check(const DiscDiagram& d) {
    SngReport rep;
    auto walk = boundary_cycle(d);
    const int n = static_cast<int>(walk.size());

    std::set<VertexId> boundary_vertices;
    if (n == 0) {
        for (VertexId v = 0; v < d.vertex_count(); ++v) boundary_vertices.insert(v);
    } else {
        for (DartId dart : walk) boundary_vertices.insert(d.origin(dart));
    }

    int btotal = 0;
    bool all_le_one = true;
    for (VertexId v : boundary_vertices) {
        int k = curvature(d, v).value;
        btotal += k;
        if (k > 1) all_le_one = false;
    }
    rep.boundary_total = {btotal};

    std::vector<int> plus_positions;
    for (int i = 0; i < n; ++i) {
        if (curvature(d, d.origin(walk[i])).value == 1) plus_positions.push_back(i);
    }
    bool gaps_ok = true;
    if (!plus_positions.empty()) {
        const int m = static_cast<int>(plus_positions.size());
        for (int i = 0; i < m; ++i) {
            int from = plus_positions[i];
            int to = plus_positions[(i + 1) % m];
            int span = ((to - from) % n + n) % n;
            if (span == 0) span = n;  // single positive vertex: the gap wraps the whole walk
            bool found = false;
            for (int s = 1; s < span && !found; ++s) {
                if (curvature(d, d.origin(walk[(from + s) % n])).value <= -1) found = true;
            }
            if (!found) gaps_ok = false;
        }
    }
    rep.hypothesis_holds = all_le_one && gaps_ok;
    rep.conclusion_holds = !rep.hypothesis_holds || btotal <= 0;
    return rep;
}

ReducednessResult is_reduced(const DiscDiagram& d, const TwoComplex& target) {
    ReducednessResult out;
    if (!d.labeled()) throw Error("is_reduced requires a labeled diagram");

    std::vector<std::optional<BoundaryAnchor>> anchors(d.face_count());
    for (FaceId f = 0; f < d.face_count(); ++f) {
        if (!d.is_inner(f)) continue;
        anchors[f] = face_label_anchor(d, target, f);
        if (!anchors[f]) throw Error("is_reduced: face labels are not coherent");
    }

    for (int e = 0; e < d.edge_count(); ++e) {
        DartId a = 2 * e, b = 2 * e + 1;
        FaceId fa = d.face_of(a), fb = d.face_of(b);
        if (fa == fb) continue;
        if (!d.is_inner(fa) || !d.is_inner(fb)) continue;
        BoundaryAnchor ra = anchor_advanced(target, *anchors[fa], d.face_slot(a));
        BoundaryAnchor rb = anchor_advanced(target, *anchors[fb], d.face_slot(b));
        if (anchors_equivalent(target, ra, anchor_flipped(rb))) {
            out.reduced = false;
            out.witness = {fa, fb};
            out.witness_dart = a;
            return out;
        }
    }
    return out;
}

}  // namespace canclab
