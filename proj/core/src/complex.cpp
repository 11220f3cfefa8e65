#include "canclab/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "canclab/error.hpp"

namespace canclab {

namespace {

std::vector<std::string> default_names(const char* prefix, std::size_t n,
                                       std::vector<std::string> given) {
    if (given.size() > n) throw Error("more names than cells");
    given.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (given[i].empty()) given[i] = prefix + std::to_string(i);
    }
    return given;
}

}  // namespace

TwoComplex::TwoComplex(std::size_t vertex_count, std::vector<EdgeRec> edges,
                       std::vector<FaceRec> faces, std::vector<std::string> vertex_names,
                       std::vector<std::string> edge_names, std::vector<std::string> face_names)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      faces_(std::move(faces)),
      vertex_names_(default_names("v", vertex_count, std::move(vertex_names))),
      edge_names_(default_names("e", edges_.size(), std::move(edge_names))),
      face_names_(default_names("f", faces_.size(), std::move(face_names))) {
    for (const auto& e : edges_) {
        if (e.tail < 0 || e.head < 0 || e.tail >= static_cast<int>(vertex_count_) ||
            e.head >= static_cast<int>(vertex_count_)) {
            throw Error("edge endpoint out of range");
        }
    }
    for (const auto& f : faces_) {
        for (const auto& s : f.boundary) {
            if (s.edge < 0 || s.edge >= static_cast<int>(edges_.size())) {
                throw Error("face boundary references unknown edge");
            }
        }
    }

    incident_edges_.resize(vertex_count_);
    for (EdgeId e = 0; e < static_cast<int>(edges_.size()); ++e) {
        incident_edges_[edges_[e].tail].push_back(e);
        if (edges_[e].head != edges_[e].tail) incident_edges_[edges_[e].head].push_back(e);
    }
    incident_faces_.resize(vertex_count_);
    edge_faces_.resize(edges_.size());
    for (FaceId f = 0; f < static_cast<int>(faces_.size()); ++f) {
        std::set<VertexId> vs;
        std::set<EdgeId> es;
        for (const auto& s : faces_[f].boundary) {
            vs.insert(tail_of(s));
            vs.insert(head_of(s));
            es.insert(s.edge);
        }
        for (VertexId v : vs) incident_faces_[v].push_back(f);
        for (EdgeId e : es) edge_faces_[e].push_back(f);
    }
}

SignedEdge TwoComplex::boundary_at(FaceId f, int slot) const {
    const auto& b = faces_[f].boundary;
    const int n = static_cast<int>(b.size());
    int i = slot % n;
    if (i < 0) i += n;
    return b[i];
}

std::optional<VertexId> TwoComplex::find_vertex(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
        if (vertex_names_[i] == name) return static_cast<VertexId>(i);
    }
    return std::nullopt;
}

std::optional<EdgeId> TwoComplex::find_edge(const std::string& name) const {
    for (std::size_t i = 0; i < edge_names_.size(); ++i) {
        if (edge_names_[i] == name) return static_cast<EdgeId>(i);
    }
    return std::nullopt;
}

std::optional<FaceId> TwoComplex::find_face(const std::string& name) const {
    for (std::size_t i = 0; i < face_names_.size(); ++i) {
        if (face_names_[i] == name) return static_cast<FaceId>(i);
    }
    return std::nullopt;
}

VertexId ComplexBuilder::add_vertex(std::string name) {
    vertex_names_.push_back(std::move(name));
    return static_cast<VertexId>(vertices_++);
}

EdgeId ComplexBuilder::add_edge(VertexId tail, VertexId head, std::string name) {
    if (tail < 0 || head < 0 || tail >= static_cast<int>(vertices_) ||
        head >= static_cast<int>(vertices_)) {
        throw Error("add_edge: endpoint out of range");
    }
    edges_.push_back({tail, head});
    edge_names_.push_back(std::move(name));
    return static_cast<EdgeId>(edges_.size() - 1);
}

FaceId ComplexBuilder::add_face(std::vector<SignedEdge> boundary, std::string name) {
    for (const auto& s : boundary) {
        if (s.edge < 0 || s.edge >= static_cast<int>(edges_.size())) {
            throw Error("add_face: boundary references unknown edge");
        }
    }
    faces_.push_back({std::move(boundary)});
    face_names_.push_back(std::move(name));
    return static_cast<FaceId>(faces_.size() - 1);
}

TwoComplex ComplexBuilder::build() && {
    return TwoComplex(vertices_, std::move(edges_), std::move(faces_), std::move(vertex_names_),
                      std::move(edge_names_), std::move(face_names_));
}

ValidationReport validate_complex(const TwoComplex& c) {
    ValidationReport rep;
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        const auto& b = c.face(f).boundary;
        if (b.empty()) {
            rep.issues.push_back({"empty-boundary", "face " + c.face_name(f) + " has empty boundary"});
            continue;
        }
        const int n = static_cast<int>(b.size());
        for (int i = 0; i < n; ++i) {
            if (c.head_of(b[i]) != c.tail_of(b[(i + 1) % n])) {
                rep.issues.push_back(
                    {"boundary-not-closed", "face " + c.face_name(f) + ": edge " +
                                                c.signed_edge_str(b[i]) + " does not meet " +
                                                c.signed_edge_str(b[(i + 1) % n])});
            }
        }
        if (n >= 2) {
            for (int i = 0; i < n; ++i) {
                if (b[(i + 1) % n] == b[i].inverse()) {
                    rep.issues.push_back({"not-immersed",
                                          "face " + c.face_name(f) +
                                              " backtracks at boundary position " +
                                              std::to_string(i)});
                }
            }
        }
    }
    return rep;
}

TwoComplex build_presentation_complex(const Presentation& p) {
    ComplexBuilder b;
    VertexId v = b.add_vertex("0");
    std::map<char, EdgeId> gen_edge;
    for (char g : p.generators()) {
        gen_edge[g] = b.add_edge(v, v, std::string(1, g));
    }
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        const auto& r = p.relators()[i];
        std::vector<SignedEdge> boundary;
        boundary.reserve(r.size());
        for (std::size_t t = 0; t < r.size(); ++t) {
            Letter l = r.at(t);
            boundary.push_back({gen_edge[static_cast<char>('a' + l.gen)], l.inv});
        }
        b.add_face(std::move(boundary), "r" + std::to_string(i));
    }
    return std::move(b).build();
}

void PermRealization::validate(const Presentation& p) const {
    if (degree <= 0) throw Error("realization degree must be positive");
    if (perms.size() != p.generators().size()) {
        throw Error("realization needs one permutation per generator");
    }
    for (const auto& perm : perms) {
        if (static_cast<int>(perm.size()) != degree) throw Error("permutation has wrong degree");
        std::vector<bool> hit(degree, false);
        for (int img : perm) {
            if (img < 0 || img >= degree || hit[img]) throw Error("not a permutation");
            hit[img] = true;
        }
    }
    for (const auto& r : p.relators()) {
        for (int g = 0; g < degree; ++g) {
            int cur = g;
            for (std::size_t t = 0; t < r.size(); ++t) {
                Letter l = r.at(t);
                const auto& perm = perms[l.gen];
                if (!l.inv) {
                    cur = perm[cur];
                } else {
                    cur = static_cast<int>(std::find(perm.begin(), perm.end(), cur) - perm.begin());
                }
            }
            if (cur != g) {
                throw Error("realization does not satisfy relator '" + r.str() + "'");
            }
        }
    }
}

namespace {

// Canonical form of a closed signed edge loop up to rotation and reversal.
std::vector<SignedEdge> canonical_loop(const std::vector<SignedEdge>& loop) {
    auto best = loop;
    const int n = static_cast<int>(loop.size());
    auto consider = [&](const std::vector<SignedEdge>& cand) {
        for (int k = 0; k < n; ++k) {
            std::vector<SignedEdge> rot(cand.begin() + k, cand.end());
            rot.insert(rot.end(), cand.begin(), cand.begin() + k);
            if (rot < best) best = rot;
        }
    };
    consider(loop);
    std::vector<SignedEdge> rev;
    rev.reserve(n);
    for (auto it = loop.rbegin(); it != loop.rend(); ++it) rev.push_back(it->inverse());
    consider(rev);
    return best;
}

}  // namespace

TwoComplex build_cayley_complex(const Presentation& p, const PermRealization& r) {
    r.validate(p);
    const int n = r.degree;
    const int ng = static_cast<int>(p.generators().size());

    ComplexBuilder b;
    for (int g = 0; g < n; ++g) b.add_vertex(std::to_string(g));
    // edge id = g * ng + gi
    for (int g = 0; g < n; ++g) {
        for (int gi = 0; gi < ng; ++gi) {
            b.add_edge(g, r.perms[gi][g],
                       std::string(1, p.generators()[gi]) + std::to_string(g));
        }
    }
    auto edge_of = [&](int g, int gi) { return g * ng + gi; };
    auto inv_image = [&](int gi, int v) {
        const auto& perm = r.perms[gi];
        return static_cast<int>(std::find(perm.begin(), perm.end(), v) - perm.begin());
    };

    int face_no = 0;
    for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
        const auto& rel = p.relators()[ri];
        std::set<std::vector<SignedEdge>> seen;
        for (int g = 0; g < n; ++g) {
            std::vector<SignedEdge> loop;
            int cur = g;
            for (std::size_t t = 0; t < rel.size(); ++t) {
                Letter l = rel.at(t);
                if (!l.inv) {
                    loop.push_back({edge_of(cur, l.gen), false});
                    cur = r.perms[l.gen][cur];
                } else {
                    int prev = inv_image(l.gen, cur);
                    loop.push_back({edge_of(prev, l.gen), true});
                    cur = prev;
                }
            }
            auto canon = canonical_loop(loop);
            if (seen.insert(canon).second) {
                b.add_face(canon, "r" + std::to_string(ri) + "x" + std::to_string(face_no++));
            }
        }
    }
    return std::move(b).build();
}

int LinkGraph::node_index(EdgeId e, bool at_head) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].edge == e && nodes[i].at_head == at_head) return static_cast<int>(i);
    }
    return -1;
}

LinkGraph link_of(const TwoComplex& c, VertexId v) {
    LinkGraph g;
    for (EdgeId e : c.edges_at(v)) {
        if (c.edge(e).tail == v) g.nodes.push_back({e, false});
        if (c.edge(e).head == v) g.nodes.push_back({e, true});
    }
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        const int n = c.face_size(f);
        for (int slot = 0; slot < n; ++slot) {
            if (c.boundary_vertex(f, slot) != v) continue;
            SignedEdge in = c.boundary_at(f, slot - 1);
            SignedEdge out = c.boundary_at(f, slot);
            int a = g.node_index(in.edge, !in.reversed);
            int bnode = g.node_index(out.edge, out.reversed);
            g.arcs.push_back({a, bnode, f, slot});
        }
    }
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct FaceCells {
    std::set<VertexId> vertices;
    std::set<EdgeId> edges;
};

FaceCells closed_cells(const TwoComplex& c, FaceId f) {
    FaceCells out;
    for (const auto& s : c.face(f).boundary) {
        out.vertices.insert(c.tail_of(s));
        out.vertices.insert(c.head_of(s));
        out.edges.insert(s.edge);
    }
    return out;
}

FaceIntersection classify_subcomplex(const TwoComplex& c, std::set<VertexId> vs,
                                     std::set<EdgeId> es) {
    FaceIntersection out;
    out.cells.vertices.assign(vs.begin(), vs.end());
    out.cells.edges.assign(es.begin(), es.end());
    out.is_empty = vs.empty() && es.empty();
    out.is_connected = false;
    out.is_single_vertex = false;
    out.is_interval = false;
    if (out.is_empty) return out;

    std::map<VertexId, int> idx;
    for (VertexId v : vs) idx.emplace(v, static_cast<int>(idx.size()));
    UnionFind uf(static_cast<int>(idx.size()));
    std::map<VertexId, int> degree;
    for (EdgeId e : es) {
        VertexId t = c.edge(e).tail, h = c.edge(e).head;
        uf.unite(idx.at(t), idx.at(h));
        degree[t]++;
        degree[h]++;
    }
    std::set<int> roots;
    for (auto& [v, i] : idx) roots.insert(uf.find(i));
    out.is_connected = roots.size() == 1;
    out.is_single_vertex = out.is_connected && es.empty() && vs.size() == 1;
    if (out.is_connected && !es.empty()) {
        // interval: acyclic (|E| = |V|-1), max degree 2, no loops
        bool loops = false;
        for (EdgeId e : es) {
            if (c.edge(e).tail == c.edge(e).head) loops = true;
        }
        int maxdeg = 0;
        for (auto& [v, d] : degree) maxdeg = std::max(maxdeg, d);
        out.is_interval = !loops && es.size() + 1 == vs.size() && maxdeg <= 2;
    }
    return out;
}

}  // namespace

FaceIntersection face_intersection(const TwoComplex& c, FaceId f1, FaceId f2) {
    if (f1 == f2) throw Error("face_intersection requires distinct faces");
    auto a = closed_cells(c, f1);
    auto b = closed_cells(c, f2);
    std::set<VertexId> vs;
    std::set<EdgeId> es;
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                          b.vertices.end(), std::inserter(vs, vs.begin()));
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::inserter(es, es.begin()));
    return classify_subcomplex(c, std::move(vs), std::move(es));
}

HellyReport strong_helly_check(const TwoComplex& c) {
    HellyReport rep;
    const int nf = static_cast<int>(c.face_count());
    std::vector<FaceCells> cells;
    cells.reserve(nf);
    for (FaceId f = 0; f < nf; ++f) cells.push_back(closed_cells(c, f));

    auto intersects = [&](int i, int j) {
        for (VertexId v : cells[i].vertices) {
            if (cells[j].vertices.count(v)) return true;
        }
        return false;
    };
    auto pair_in_third = [&](int i, int j, int k) {
        for (VertexId v : cells[i].vertices) {
            if (cells[j].vertices.count(v) && !cells[k].vertices.count(v)) return false;
        }
        for (EdgeId e : cells[i].edges) {
            if (cells[j].edges.count(e) && !cells[k].edges.count(e)) return false;
        }
        return true;
    };

    for (int i = 0; i < nf; ++i) {
        for (int j = i + 1; j < nf; ++j) {
            if (!intersects(i, j)) continue;
            for (int k = j + 1; k < nf; ++k) {
                if (!intersects(i, k) || !intersects(j, k)) continue;
                rep.triples_checked++;
                bool ok = pair_in_third(i, j, k) || pair_in_third(i, k, j) ||
                          pair_in_third(j, k, i);
                if (!ok) rep.violations.push_back({{i, j, k}});
            }
        }
    }
    return rep;
}

MultiIntersection multi_intersection_check(const TwoComplex& c, std::span<const FaceId> faces) {
    if (faces.size() < 2) throw Error("multi_intersection_check requires at least two faces");
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            if (faces[i] == faces[j]) throw Error("multi_intersection_check: faces must be distinct");
        }
    }
    std::vector<FaceCells> cells;
    for (FaceId f : faces) cells.push_back(closed_cells(c, f));
    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            bool meet = false;
            for (VertexId v : cells[i].vertices) {
                if (cells[j].vertices.count(v)) meet = true;
            }
            if (!meet) throw Error("multi_intersection_check: faces must pairwise intersect");
        }
    }
    std::set<VertexId> vs = cells[0].vertices;
    std::set<EdgeId> es = cells[0].edges;
    for (std::size_t i = 1; i < cells.size(); ++i) {
        std::set<VertexId> vs2;
        std::set<EdgeId> es2;
        std::set_intersection(vs.begin(), vs.end(), cells[i].vertices.begin(),
                              cells[i].vertices.end(), std::inserter(vs2, vs2.begin()));
        std::set_intersection(es.begin(), es.end(), cells[i].edges.begin(), cells[i].edges.end(),
                              std::inserter(es2, es2.begin()));
        vs = std::move(vs2);
        es = std::move(es2);
    }
    auto cls = classify_subcomplex(c, std::move(vs), std::move(es));
    MultiIntersection out;
    out.cells = cls.cells;
    if (cls.is_single_vertex) {
        out.kind = IntersectionKind::single_vertex;
    } else if (cls.is_interval) {
        out.kind = IntersectionKind::interval;
    } else {
        out.kind = IntersectionKind::other;
    }
    return out;
}

TwoComplex thicken_free_edges(const TwoComplex& c) {
    ComplexBuilder b;
    for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) b.add_vertex(c.vertex_name(v));
    for (EdgeId e = 0; e < static_cast<int>(c.edge_count()); ++e) {
        b.add_edge(c.edge(e).tail, c.edge(e).head, c.edge_name(e));
    }
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        b.add_face(c.face(f).boundary, c.face_name(f));
    }
    for (EdgeId e = 0; e < static_cast<int>(c.edge_count()); ++e) {
        if (!c.faces_of_edge(e).empty()) continue;
        EdgeId par = b.add_edge(c.edge(e).tail, c.edge(e).head, c.edge_name(e) + "'");
        b.add_face({{e, false}, {par, true}}, c.edge_name(e) + "-thick");
    }
    return std::move(b).build();
}

namespace {

int rank_mod2(std::vector<std::vector<char>> m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col]) pivot = r;
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r != rank && m[r][col]) {
                for (int cc = col; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

int first_betti_mod2(const TwoComplex& c) {
    const int V = static_cast<int>(c.vertex_count());
    const int E = static_cast<int>(c.edge_count());
    const int F = static_cast<int>(c.face_count());
    std::vector<std::vector<char>> d1(E, std::vector<char>(V, 0));
    for (EdgeId e = 0; e < E; ++e) {
        d1[e][c.edge(e).tail] ^= 1;
        d1[e][c.edge(e).head] ^= 1;
    }
    std::vector<std::vector<char>> d2(F, std::vector<char>(E, 0));
    for (FaceId f = 0; f < F; ++f) {
        for (const auto& s : c.face(f).boundary) d2[f][s.edge] ^= 1;
    }
    int cycles = E - rank_mod2(std::move(d1));
    int boundaries = rank_mod2(std::move(d2));
    return cycles - boundaries;
}

bool is_connected(const TwoComplex& c) {
    if (c.vertex_count() == 0) return true;
    std::vector<bool> seen(c.vertex_count(), false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : c.edges_at(v)) {
            for (VertexId u : {c.edge(e).tail, c.edge(e).head}) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    for (bool s : seen) {
        if (!s) return false;
    }
    return true;
}

SignedEdge anchor_read(const TwoComplex& c, const BoundaryAnchor& a, int t) {
    if (!a.reversed) return c.boundary_at(a.face, a.offset + t);
    return c.boundary_at(a.face, a.offset - t).inverse();
}

BoundaryAnchor anchor_advanced(const TwoComplex& c, const BoundaryAnchor& a, int steps) {
    const int n = c.face_size(a.face);
    int off = a.reversed ? a.offset - steps : a.offset + steps;
    off %= n;
    if (off < 0) off += n;
    return {a.face, off, a.reversed};
}

bool anchors_equivalent(const TwoComplex& c, const BoundaryAnchor& a, const BoundaryAnchor& b) {
    const int n = c.face_size(a.face);
    if (n != c.face_size(b.face)) return false;
    for (int t = 0; t < n; ++t) {
        if (anchor_read(c, a, t) != anchor_read(c, b, t)) return false;
    }
    return true;
}

}  // namespace canclab
