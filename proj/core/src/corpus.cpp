#include "canclab/corpus.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "canclab/diagram_builder.hpp"
#include "canclab/error.hpp"

namespace canclab {

TwoComplex make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw Error("grid needs positive dimensions");
    ComplexBuilder b;
    auto vid = [&](int r, int c) { return r * (cols + 1) + c; };
    for (int r = 0; r <= rows; ++r) {
        for (int c = 0; c <= cols; ++c) {
            b.add_vertex("x" + std::to_string(r) + "_" + std::to_string(c));
        }
    }
    std::map<std::pair<int, int>, EdgeId> horiz, vert;
    for (int r = 0; r <= rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            horiz[{r, c}] = b.add_edge(vid(r, c), vid(r, c + 1),
                                       "h" + std::to_string(r) + "_" + std::to_string(c));
        }
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c <= cols; ++c) {
            vert[{r, c}] = b.add_edge(vid(r, c), vid(r + 1, c),
                                      "u" + std::to_string(r) + "_" + std::to_string(c));
        }
    }
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            b.add_face({{horiz[{r, c}], false},
                        {vert[{r, c + 1}], false},
                        {horiz[{r + 1, c}], true},
                        {vert[{r, c}], true}},
                       "c" + std::to_string(r) + "_" + std::to_string(c));
        }
    }
    return std::move(b).build();
}

TwoComplex make_strip(int cols) { return make_grid(1, cols); }

TwoComplex make_ngon(int n) {
    if (n < 1) throw Error("ngon needs n >= 1");
    ComplexBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex("x" + std::to_string(i));
    std::vector<SignedEdge> boundary;
    for (int i = 0; i < n; ++i) {
        EdgeId e = b.add_edge(i, (i + 1) % n, "e" + std::to_string(i));
        boundary.push_back({e, false});
    }
    b.add_face(std::move(boundary), "F");
    return std::move(b).build();
}

TwoComplex make_torus_presentation_complex() {
    return build_presentation_complex(Presentation::parse("gens: a b\nrels: abAB"));
}

TwoComplex make_genus_surface_presentation_complex(int genus) {
    if (genus < 1 || genus > 6) throw Error("genus must be between 1 and 6");
    std::string gens = "gens:";
    std::string rel;
    for (int i = 0; i < 2 * genus; ++i) {
        char g = static_cast<char>('a' + i);
        gens += std::string(" ") + g;
    }
    for (int i = 0; i < genus; ++i) {
        char x = static_cast<char>('a' + 2 * i);
        char y = static_cast<char>('a' + 2 * i + 1);
        rel += x;
        rel += y;
        rel += static_cast<char>(std::toupper(x));
        rel += static_cast<char>(std::toupper(y));
    }
    return build_presentation_complex(Presentation::parse(gens + "\nrels: " + rel));
}

TwoComplex make_cube_corner() {
    ComplexBuilder b;
    VertexId o = b.add_vertex("o");
    VertexId x = b.add_vertex("x"), y = b.add_vertex("y"), z = b.add_vertex("z");
    VertexId xy = b.add_vertex("xy"), yz = b.add_vertex("yz"), zx = b.add_vertex("zx");
    EdgeId a = b.add_edge(o, x, "a"), bb = b.add_edge(o, y, "b"), c = b.add_edge(o, z, "c");
    EdgeId d = b.add_edge(x, xy, "d"), e = b.add_edge(y, xy, "e");
    EdgeId f = b.add_edge(y, yz, "f"), g = b.add_edge(z, yz, "g");
    EdgeId h = b.add_edge(z, zx, "h"), i = b.add_edge(x, zx, "i");
    b.add_face({{a, false}, {d, false}, {e, true}, {bb, true}}, "XY");
    b.add_face({{bb, false}, {f, false}, {g, true}, {c, true}}, "YZ");
    b.add_face({{c, false}, {h, false}, {i, true}, {a, true}}, "ZX");
    return std::move(b).build();
}

TwoComplex make_random_grid_subcomplex(int rows, int cols, std::uint64_t seed) {
    Rng rng(seed);
    const int total = rows * cols;
    int want = 1 + static_cast<int>(rng.below(total));
    // random connected cell set by growth
    std::set<std::pair<int, int>> cells;
    std::vector<std::pair<int, int>> frontier;
    std::pair<int, int> start{static_cast<int>(rng.below(rows)), static_cast<int>(rng.below(cols))};
    cells.insert(start);
    frontier.push_back(start);
    while (static_cast<int>(cells.size()) < want && !frontier.empty()) {
        std::size_t pick = rng.below(frontier.size());
        auto [r, c] = frontier[pick];
        std::vector<std::pair<int, int>> nbs;
        for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            int nr = r + dr, nc = c + dc;
            if (nr >= 0 && nr < rows && nc >= 0 && nc < cols && !cells.count({nr, nc})) {
                nbs.push_back({nr, nc});
            }
        }
        if (nbs.empty()) {
            frontier.erase(frontier.begin() + pick);
            continue;
        }
        auto nb = nbs[rng.below(nbs.size())];
        cells.insert(nb);
        frontier.push_back(nb);
    }

    ComplexBuilder b;
    std::map<int, VertexId> vmap;
    std::map<std::string, EdgeId> emap;
    auto full = make_grid(rows, cols);
    auto sub_vertex = [&](VertexId v) {
        auto it = vmap.find(v);
        if (it != vmap.end()) return it->second;
        VertexId nv = b.add_vertex(full.vertex_name(v));
        vmap[v] = nv;
        return nv;
    };
    auto sub_edge = [&](EdgeId e) {
        auto it = emap.find(full.edge_name(e));
        if (it != emap.end()) return it->second;
        VertexId t = sub_vertex(full.edge(e).tail);
        VertexId h = sub_vertex(full.edge(e).head);
        EdgeId ne = b.add_edge(t, h, full.edge_name(e));
        emap[full.edge_name(e)] = ne;
        return ne;
    };
    for (auto [r, c] : cells) {
        FaceId f = *full.find_face("c" + std::to_string(r) + "_" + std::to_string(c));
        std::vector<SignedEdge> boundary;
        for (const auto& s : full.face(f).boundary) boundary.push_back({sub_edge(s.edge), s.reversed});
        b.add_face(std::move(boundary), full.face_name(f));
    }
    return std::move(b).build();
}

namespace {

// Glues a polygonal fin onto an arc [from, from + arc_len) of the big face's
// boundary, with tail_len private edges closing it up.
void add_fin(ComplexBuilder& b, const std::vector<EdgeId>& rim, int from, int arc_len,
             int tail_len, const std::string& name, const std::vector<VertexId>& rim_vertices) {
    const int n = static_cast<int>(rim.size());
    std::vector<SignedEdge> boundary;
    for (int j = 0; j < arc_len; ++j) boundary.push_back({rim[(from + j) % n], false});
    VertexId at = rim_vertices[(from + arc_len) % n];
    VertexId home = rim_vertices[from % n];
    VertexId prev = at;
    for (int j = 0; j < tail_len - 1; ++j) {
        VertexId fresh = b.add_vertex(name + "t" + std::to_string(j));
        boundary.push_back({b.add_edge(prev, fresh, name + "s" + std::to_string(j)), false});
        prev = fresh;
    }
    boundary.push_back({b.add_edge(prev, home, name + "s" + std::to_string(tail_len - 1)), false});
    b.add_face(std::move(boundary), name);
}

}  // namespace

TwoComplex make_fin(int perimeter) {
    if (perimeter < 8) throw Error("fin complex needs perimeter >= 8");
    ComplexBuilder b;
    std::vector<VertexId> verts;
    for (int i = 0; i < perimeter; ++i) verts.push_back(b.add_vertex("x" + std::to_string(i)));
    std::vector<EdgeId> rim;
    std::vector<SignedEdge> big;
    for (int i = 0; i < perimeter; ++i) {
        rim.push_back(b.add_edge(verts[i], verts[(i + 1) % perimeter], "b" + std::to_string(i)));
        big.push_back({rim.back(), false});
    }
    b.add_face(std::move(big), "F");
    add_fin(b, rim, 0, 2, 4, "P", verts);
    add_fin(b, rim, perimeter - 2, 2, 4, "Q", verts);
    add_fin(b, rim, perimeter - 2, 4, 4, "R", verts);
    return std::move(b).build();
}

TwoComplex make_pinwheel(int m) {
    if (m < 3) throw Error("pinwheel needs m >= 3");
    const int n = 3 * m;
    ComplexBuilder b;
    std::vector<VertexId> verts;
    for (int i = 0; i < n; ++i) verts.push_back(b.add_vertex("x" + std::to_string(i)));
    std::vector<EdgeId> rim;
    std::vector<SignedEdge> big;
    for (int i = 0; i < n; ++i) {
        rim.push_back(b.add_edge(verts[i], verts[(i + 1) % n], "b" + std::to_string(i)));
        big.push_back({rim.back(), false});
    }
    b.add_face(std::move(big), "F");
    for (int j = 0; j < 3; ++j) {
        add_fin(b, rim, j * m, 2, 3, "R" + std::to_string(j), verts);
    }
    return std::move(b).build();
}

std::optional<Automorphism> complete_automorphism(const TwoComplex& c,
                                                  std::vector<VertexId> vertex_map,
                                                  std::vector<SignedEdge> edge_map) {
    Automorphism a;
    a.vertex_map = std::move(vertex_map);
    a.edge_map = std::move(edge_map);
    a.face_map.assign(c.face_count(), -1);
    std::vector<bool> used(c.face_count(), false);
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        const int n = c.face_size(f);
        std::vector<SignedEdge> image;
        for (int t = 0; t < n; ++t) image.push_back(a.apply(c.boundary_at(f, t)));
        for (FaceId g = 0; g < static_cast<int>(c.face_count()) && a.face_map[f] < 0; ++g) {
            if (used[g] || c.face_size(g) != n) continue;
            for (bool rev : {false, true}) {
                for (int off = 0; off < n && a.face_map[f] < 0; ++off) {
                    BoundaryAnchor anchor{g, off, rev};
                    bool ok = true;
                    for (int t = 0; t < n && ok; ++t) {
                        if (anchor_read(c, anchor, t) != image[t]) ok = false;
                    }
                    if (ok) {
                        a.face_map[f] = g;
                        used[g] = true;
                    }
                }
            }
        }
        if (a.face_map[f] < 0) return std::nullopt;
    }
    if (!validate_automorphism(c, a).ok()) return std::nullopt;
    return a;
}

Automorphism pinwheel_rotation(const TwoComplex& pinwheel, int m) {
    const int n = 3 * m;
    std::vector<VertexId> vmap(pinwheel.vertex_count());
    std::vector<SignedEdge> emap(pinwheel.edge_count());
    for (int i = 0; i < n; ++i) {
        vmap[*pinwheel.find_vertex("x" + std::to_string(i))] =
            *pinwheel.find_vertex("x" + std::to_string((i + m) % n));
        emap[*pinwheel.find_edge("b" + std::to_string(i))] = {
            *pinwheel.find_edge("b" + std::to_string((i + m) % n)), false};
    }
    for (int j = 0; j < 3; ++j) {
        std::string from = "R" + std::to_string(j), to = "R" + std::to_string((j + 1) % 3);
        for (int t = 0; t < 2; ++t) {
            vmap[*pinwheel.find_vertex(from + "t" + std::to_string(t))] =
                *pinwheel.find_vertex(to + "t" + std::to_string(t));
        }
        for (int s = 0; s < 3; ++s) {
            emap[*pinwheel.find_edge(from + "s" + std::to_string(s))] = {
                *pinwheel.find_edge(to + "s" + std::to_string(s)), false};
        }
    }
    auto a = complete_automorphism(pinwheel, std::move(vmap), std::move(emap));
    if (!a) throw Error("pinwheel rotation is not an automorphism");
    return *a;
}

Automorphism ngon_rotation(const TwoComplex& ngon, int n, int k) {
    std::vector<VertexId> vmap(ngon.vertex_count());
    std::vector<SignedEdge> emap(ngon.edge_count());
    for (int i = 0; i < n; ++i) {
        vmap[i] = (i + k) % n;
        emap[i] = {(i + k) % n, false};
    }
    auto a = complete_automorphism(ngon, std::move(vmap), std::move(emap));
    if (!a) throw Error("ngon rotation is not an automorphism");
    return *a;
}

TwoComplex make_domino() { return make_grid(1, 2); }

Automorphism domino_swap(const TwoComplex& domino) {
    std::vector<VertexId> vmap(domino.vertex_count());
    std::vector<SignedEdge> emap(domino.edge_count());
    for (int r = 0; r <= 1; ++r) {
        for (int c = 0; c <= 2; ++c) {
            vmap[*domino.find_vertex("x" + std::to_string(r) + "_" + std::to_string(c))] =
                *domino.find_vertex("x" + std::to_string(r) + "_" + std::to_string(2 - c));
        }
        for (int c = 0; c < 2; ++c) {
            emap[*domino.find_edge("h" + std::to_string(r) + "_" + std::to_string(c))] = {
                *domino.find_edge("h" + std::to_string(r) + "_" + std::to_string(1 - c)), true};
        }
    }
    for (int c = 0; c <= 2; ++c) {
        emap[*domino.find_edge("u0_" + std::to_string(c))] = {
            *domino.find_edge("u0_" + std::to_string(2 - c)), false};
    }
    auto a = complete_automorphism(domino, std::move(vmap), std::move(emap));
    if (!a) throw Error("domino swap is not an automorphism");
    return *a;
}

TwoComplex make_torus_grid(int m, int n) {
    auto p = Presentation::parse("gens: a b\nrels: abAB");
    PermRealization r;
    r.degree = m * n;
    r.perms.resize(2);
    r.perms[0].resize(m * n);
    r.perms[1].resize(m * n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            r.perms[0][i * n + j] = ((i + 1) % m) * n + j;
            r.perms[1][i * n + j] = i * n + (j + 1) % n;
        }
    }
    return build_cayley_complex(p, r);
}

Automorphism torus_grid_translation(const TwoComplex& torus, int m, int n) {
    std::vector<VertexId> vmap(torus.vertex_count());
    std::vector<SignedEdge> emap(torus.edge_count());
    auto shift = [&](int g) {
        int i = g / n, j = g % n;
        return ((i + 1) % m) * n + j;
    };
    for (int g = 0; g < m * n; ++g) vmap[g] = shift(g);
    for (int g = 0; g < m * n; ++g) {
        for (int gi = 0; gi < 2; ++gi) {
            emap[g * 2 + gi] = {shift(g) * 2 + gi, false};
        }
    }
    auto a = complete_automorphism(torus, std::move(vmap), std::move(emap));
    if (!a) throw Error("torus translation is not an automorphism");
    return *a;
}

namespace {

const SignedEdge kNoLabel{-1, false};

void attach_plain_square(DiagramBuilder& b, int pos, int t_len) {
    std::vector<SignedEdge> exposed(4 - t_len, kNoLabel);
    std::vector<VertexId> chain(exposed.size() - 1, -1);
    b.attach_face(pos, t_len, exposed, chain, -1);
}

// true when the run [pos, pos+len) of the boundary contains no immediate
// backtrack, so a face glued over it has an immersed attaching map
bool run_immersed(const DiagramBuilder& b, int pos, int len) {
    const auto& walk = b.boundary();
    const int L = static_cast<int>(walk.size());
    for (int j = 0; j + 1 < len; ++j) {
        DartId a = walk[(pos + j) % L];
        DartId bb = walk[(pos + j + 1) % L];
        if ((a ^ 1) == bb) return false;
    }
    return true;
}

}  // namespace

DiscDiagram random_square_diagram(std::uint64_t seed, int target_area) {
    Rng rng(seed);
    DiagramBuilder b(-1);
    int leaves_budget = rng.range(0, 3);
    while (b.area() < target_area) {
        const int L = b.boundary_length();
        int roll = rng.range(0, 9);
        if (roll == 0 && leaves_budget > 0 && L > 0) {
            b.insert_leaf(static_cast<int>(rng.below(L)), kNoLabel, -1);
            --leaves_budget;
            continue;
        }
        if (L == 0 || roll == 1) {
            attach_plain_square(b, L == 0 ? 0 : static_cast<int>(rng.below(L)), 0);
            continue;
        }
        int t = rng.range(1, std::min(3, L));
        int pos = static_cast<int>(rng.below(L));
        if (!run_immersed(b, pos, t)) continue;
        attach_plain_square(b, pos, t);
    }
    while (leaves_budget-- > 0) {
        const int L = b.boundary_length();
        b.insert_leaf(L == 0 ? 0 : static_cast<int>(rng.below(L)), kNoLabel, -1);
    }
    return b.build();
}

DiscDiagram make_pita_chain(int m) {
    if (m < 1) throw Error("pita chain needs m >= 1");
    DiagramBuilder b(-1);
    for (int k = 0; k < m; ++k) {
        // folded block of three squares: one square with both side pairs
        // folded over, leaving two +1 corners and two -1 boundary vertices
        attach_plain_square(b, k == 0 ? 0 : 3, 0);
        attach_plain_square(b, 0, 2);
        attach_plain_square(b, 2, 2);
    }
    return b.build();
}

DiscDiagram make_grid_diagram(int rows, int cols) {
    auto grid = make_grid(rows, cols);
    DiagramRaw raw;
    raw.vertex_count = static_cast<int>(grid.vertex_count());
    raw.dart_origin.resize(2 * grid.edge_count());
    for (EdgeId e = 0; e < static_cast<int>(grid.edge_count()); ++e) {
        raw.dart_origin[2 * e] = grid.edge(e).tail;
        raw.dart_origin[2 * e + 1] = grid.edge(e).head;
    }
    raw.rotation.resize(raw.vertex_count);
    auto vid = [&](int r, int c) { return r * (cols + 1) + c; };
    for (int r = 0; r <= rows; ++r) {
        for (int c = 0; c <= cols; ++c) {
            auto& rot = raw.rotation[vid(r, c)];
            // east, north, west, south
            if (c < cols) rot.push_back(2 * *grid.find_edge("h" + std::to_string(r) + "_" + std::to_string(c)));
            if (r < rows) rot.push_back(2 * *grid.find_edge("u" + std::to_string(r) + "_" + std::to_string(c)));
            if (c > 0) rot.push_back(2 * *grid.find_edge("h" + std::to_string(r) + "_" + std::to_string(c - 1)) + 1);
            if (r > 0) rot.push_back(2 * *grid.find_edge("u" + std::to_string(r - 1) + "_" + std::to_string(c)) + 1);
        }
    }
    raw.outer_dart = 0;
    auto d = DiscDiagram::from_raw(raw);
    // pick the orbit of perimeter length as the outer face
    for (FaceId f = 0; f < d.face_count(); ++f) {
        if (static_cast<int>(d.face_cycle(f).size()) == 2 * (rows + cols)) {
            raw.outer_dart = d.face_cycle(f)[0];
            break;
        }
    }
    return DiscDiagram::from_raw(std::move(raw));
}

namespace {

// exposed labels and chain vertices for a face glued over t_len boundary
// darts so that the new orbit spells `anchor` from its first slot
void attach_face_by_anchor(DiagramBuilder& b, const TwoComplex& yc, int pos, int t_len,
                           const BoundaryAnchor& anchor) {
    const int n = yc.face_size(anchor.face);
    std::vector<SignedEdge> exposed;
    std::vector<VertexId> chain;
    for (int j = 0; j < n - t_len; ++j) {
        exposed.push_back(anchor_read(yc, anchor, n - 1 - j).inverse());
    }
    for (std::size_t j = 0; j + 1 < exposed.size(); ++j) chain.push_back(yc.head_of(exposed[j]));
    b.attach_face(pos, t_len, exposed, chain, anchor.face);
}

std::optional<BoundaryAnchor> anchor_with_first(const TwoComplex& yc, FaceId f, SignedEdge first) {
    for (bool rev : {false, true}) {
        for (int off = 0; off < yc.face_size(f); ++off) {
            BoundaryAnchor a{f, off, rev};
            if (anchor_read(yc, a, 0) == first) return a;
        }
    }
    return std::nullopt;
}

}  // namespace

DiscDiagram strip_diagram_in_quadrization(const Quadrization& y, std::span<const int> top,
                                          std::span<const int> bottom) {
    if (top.size() != bottom.size() || top.size() < 2) {
        throw Error("strip rows must have equal length at least 2");
    }
    const TwoComplex& yc = y.as_complex();
    const int k = static_cast<int>(top.size());

    auto square_of = [&](int i) {
        auto s = y.square_index(top[i], top[i + 1], bottom[i + 1], bottom[i]);
        if (!s) throw Error("strip square missing from the quadrization");
        return *s;
    };

    // wedge the first square so its orbit runs top0 -> top1 -> bottom1 -> bottom0
    FaceId f0 = square_of(0);
    std::optional<BoundaryAnchor> a0;
    for (bool rev : {false, true}) {
        for (int off = 0; off < 4 && !a0; ++off) {
            BoundaryAnchor cand{f0, off, rev};
            if (yc.tail_of(anchor_read(yc, cand, 0)) == top[0] &&
                yc.head_of(anchor_read(yc, cand, 0)) == top[1]) {
                a0 = cand;
            }
        }
    }
    if (!a0) throw Error("strip: no reading starts along the top rail");
    DiagramBuilder b(top[0]);
    attach_face_by_anchor(b, yc, 0, 0, *a0);

    for (int i = 1; i + 1 < k + 0; ++i) {
        if (i + 1 >= k) break;
        FaceId fi = square_of(i);
        // the rung between top[i] and bottom[i] is on the boundary
        int pos = -1;
        for (int p = 0; p < b.boundary_length() && pos < 0; ++p) {
            SignedEdge s = b.boundary_label(p);
            VertexId t = yc.tail_of(s), h = yc.head_of(s);
            if ((t == top[i] && h == bottom[i]) || (t == bottom[i] && h == top[i])) pos = p;
        }
        if (pos < 0) throw Error("strip: rung not found on the boundary");
        auto ai = anchor_with_first(yc, fi, b.boundary_label(pos));
        if (!ai) throw Error("strip: square cannot be glued along the rung");
        attach_face_by_anchor(b, yc, pos, 1, *ai);
    }
    return b.build();
}

DiscDiagram random_quadric_diagram(const Quadrization& y, std::uint64_t seed, int target_area) {
    Rng rng(seed);
    const TwoComplex& yc = y.as_complex();
    if (yc.face_count() == 0) throw Error("quadrization has no squares");

    // start with a random square
    FaceId f0 = static_cast<FaceId>(rng.below(yc.face_count()));
    BoundaryAnchor a0{f0, static_cast<int>(rng.below(4)), rng.below(2) == 0};
    DiagramBuilder b(yc.tail_of(anchor_read(yc, a0, 0)));
    std::map<DartId, BoundaryAnchor> anchor_at;  // inner-face anchor per dart

    // attach a face over the run [pos, pos + t_len): the new face orbit is the
    // consumed darts followed by the reversed fresh path, and it spells
    // `anchor` from its first slot
    auto attach_with_anchor = [&](int pos, int t_len, const BoundaryAnchor& anchor) {
        const int n = yc.face_size(anchor.face);
        std::vector<SignedEdge> exposed;
        std::vector<VertexId> chain;
        for (int j = 0; j < n - t_len; ++j) {
            exposed.push_back(anchor_read(yc, anchor, n - 1 - j).inverse());
        }
        for (std::size_t j = 0; j + 1 < exposed.size(); ++j) chain.push_back(yc.head_of(exposed[j]));
        const auto& walk = b.boundary();
        const int L = static_cast<int>(walk.size());
        std::vector<DartId> consumed;
        for (int j = 0; j < t_len; ++j) consumed.push_back(walk[(pos + j) % std::max(L, 1)]);
        b.attach_face(pos, t_len, exposed, chain, anchor.face);
        for (int j = 0; j < t_len; ++j) {
            anchor_at[consumed[j]] = anchor_advanced(yc, anchor, j);
        }
        const auto& nb = b.boundary();
        const int ecount = static_cast<int>(exposed.size());
        for (int r = 0; r < ecount; ++r) {
            anchor_at[nb[r] ^ 1] = anchor_advanced(yc, anchor, t_len + (ecount - 1 - r));
        }
    };

    attach_with_anchor(0, 0, a0);  // seed square as a wedge

    int stall = 0;
    while (b.area() < target_area && stall < 200) {
        const int L = b.boundary_length();
        int t = rng.range(1, std::min(3, L));
        int pos = static_cast<int>(rng.below(L));
        if (!run_immersed(b, pos, t)) {
            ++stall;
            continue;
        }
        // labels of the consumed run, read along the walk
        std::vector<SignedEdge> run;
        const auto& walk = b.boundary();
        for (int j = 0; j < t; ++j) run.push_back(b.boundary_label((pos + j) % L));

        // candidate squares reading the run as their first t letters
        std::vector<BoundaryAnchor> candidates;
        for (FaceId f = 0; f < static_cast<int>(yc.face_count()); ++f) {
            for (bool rev : {false, true}) {
                for (int off = 0; off < 4; ++off) {
                    BoundaryAnchor cand{f, off, rev};
                    bool ok = true;
                    for (int j = 0; j < t && ok; ++j) {
                        if (anchor_read(yc, cand, j) != run[j]) ok = false;
                    }
                    if (!ok) continue;
                    // never glue a square to a copy of itself: mirror pairs
                    // are reducible and rotation gluings fold the square
                    bool self_adjacent = false;
                    for (int j = 0; j < t && !self_adjacent; ++j) {
                        auto it = anchor_at.find(walk[(pos + j) % L] ^ 1);
                        if (it != anchor_at.end() && it->second.face == f) self_adjacent = true;
                    }
                    if (!self_adjacent) candidates.push_back(cand);
                }
            }
        }
        if (candidates.empty()) {
            ++stall;
            continue;
        }
        attach_with_anchor(pos, t, candidates[rng.below(candidates.size())]);
        stall = 0;
    }
    return b.build();
}

}  // namespace canclab
