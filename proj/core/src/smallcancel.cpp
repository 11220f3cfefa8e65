#include "canclab/smallcancel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "canclab/diagram_builder.hpp"
#include "canclab/error.hpp"

namespace canclab {

PieceCatalog compute_pieces(const TwoComplex& c) {
    PieceCatalog cat;
    const int nf = static_cast<int>(c.face_count());
    cat.max_len.resize(nf);
    cat.partner.resize(nf);

    std::vector<BoundaryAnchor> anchors;
    for (FaceId f = 0; f < nf; ++f) {
        cat.max_len[f].assign(c.face_size(f), 0);
        cat.partner[f].assign(c.face_size(f), BoundaryAnchor{});
        for (int off = 0; off < c.face_size(f); ++off) {
            anchors.push_back({f, off, false});
            anchors.push_back({f, off, true});
        }
    }

    for (FaceId f = 0; f < nf; ++f) {
        const int n = c.face_size(f);
        for (int off = 0; off < n; ++off) {
            BoundaryAnchor self{f, off, false};
            int best = 0;
            BoundaryAnchor best_partner{};
            for (const auto& other : anchors) {
                if (anchors_equivalent(c, self, other)) continue;
                const int cap = std::min(n, c.face_size(other.face));
                int len = 0;
                while (len < cap && anchor_read(c, self, len) == anchor_read(c, other, len)) {
                    ++len;
                }
                if (len > best) {
                    best = len;
                    best_partner = other;
                }
            }
            cat.max_len[f][off] = best;
            cat.partner[f][off] = best_partner;
        }
        for (int off = 0; off < n; ++off) {
            int len = cat.max_len[f][off];
            if (len == 0) continue;
            int prev = cat.max_len[f][(off + n - 1) % n];
            if (prev >= len + 1) continue;  // contained in the piece one slot earlier
            PieceCatalog::MaxPiece mp;
            mp.face = f;
            mp.offset = off;
            mp.length = len;
            mp.partner = cat.partner[f][off];
            for (int t = 0; t < len; ++t) mp.path.push_back(c.boundary_at(f, off + t));
            cat.maximal.push_back(std::move(mp));
        }
    }
    return cat;
}

CoverResult min_piece_cover(const TwoComplex& c, const PieceCatalog& pieces, FaceId f) {
    CoverResult out;
    const int n = c.face_size(f);
    const auto& len = pieces.max_len[f];

    for (int i = 0; i < n; ++i) {
        bool covered = false;
        for (int j = 0; j < n && !covered; ++j) {
            if (len[j] > 0 && (i - j + n) % n < len[j]) covered = true;
        }
        if (!covered) return out;  // some boundary edge lies in no piece
    }

    int best = -1, best_start = 0;
    for (int start = 0; start < n; ++start) {
        if (len[start] == 0) continue;
        int used = 0, covered = 0;
        bool ok = true;
        while (covered < n) {
            int here = (start + covered) % n;
            int step = std::min(len[here], n - covered);
            if (step == 0) {
                ok = false;
                break;
            }
            covered += step;
            ++used;
        }
        if (ok && (best == -1 || used < best)) {
            best = used;
            best_start = start;
        }
    }
    if (best == -1) return out;
    out.coverable = true;
    out.count = best;
    out.start = best_start;
    return out;
}

CpReport check_Cp(const TwoComplex& c, const PieceCatalog& pieces, int p) {
    if (p < 1) throw Error("check_Cp requires p >= 1");
    CpReport rep;
    rep.p = p;
    rep.holds = true;
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        auto cover = min_piece_cover(c, pieces, f);
        if (cover.coverable && cover.count < p) {
            rep.holds = false;
            rep.witnesses.push_back({f, cover.count});
        }
    }
    return rep;
}

namespace {

// Embedded cycles of length exactly `target` in a link multigraph, DFS over
// node-disjoint paths. Loop arcs never form embedded cycles; parallel arcs
// only give 2-cycles, which are outside the range checked.
bool find_embedded_cycle(const LinkGraph& g, int target, std::vector<int>* out_nodes) {
    const int n = static_cast<int>(g.nodes.size());
    std::vector<std::set<int>> adj(n);
    for (const auto& a : g.arcs) {
        if (a.a == a.b || a.a < 0 || a.b < 0) continue;
        adj[a.a].insert(a.b);
        adj[a.b].insert(a.a);
    }
    std::vector<int> path;
    std::vector<bool> used(n, false);

    std::function<bool(int, int)> dfs = [&](int root, int cur) {
        if (static_cast<int>(path.size()) == target) {
            if (adj[cur].count(root)) {
                *out_nodes = path;
                return true;
            }
            return false;
        }
        for (int nb : adj[cur]) {
            if (used[nb] || nb <= root) continue;
            used[nb] = true;
            path.push_back(nb);
            if (dfs(root, nb)) return true;
            path.pop_back();
            used[nb] = false;
        }
        return false;
    };

    for (int root = 0; root < n; ++root) {
        used.assign(n, false);
        used[root] = true;
        path = {root};
        if (dfs(root, root)) return true;
    }
    return false;
}

}  // namespace

TqReport check_Tq_link(const TwoComplex& c, int q) {
    if (q < 3) throw Error("check_Tq_link requires q >= 3");
    TqReport rep;
    rep.q = q;
    rep.holds = true;
    for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
        auto link = link_of(c, v);
        for (int n = 3; n < q; ++n) {
            std::vector<int> cycle;
            if (find_embedded_cycle(link, n, &cycle)) {
                rep.holds = false;
                rep.witnesses.push_back({v, cycle});
                break;
            }
        }
    }
    return rep;
}

namespace {

// The signed edge leaving the link's vertex through a given edge end.
SignedEdge out_signed(const LinkGraph::Node& n) { return {n.edge, n.at_head}; }

// A face corner at a vertex, directed: entering through `from`, leaving
// through `to`. `anchor` reads the face boundary along the wheel face orbit
// starting at the outgoing spoke.
struct DirectedCorner {
    int from;
    int to;
    BoundaryAnchor anchor;
};

std::vector<DirectedCorner> directed_corners(const TwoComplex& c, const LinkGraph& link) {
    std::vector<DirectedCorner> out;
    for (const auto& arc : link.arcs) {
        if (arc.a < 0 || arc.b < 0) continue;
        const int n = c.face_size(arc.face);
        // natural direction: in through arc.a, out through arc.b, reading the
        // face forward from the outgoing slot
        out.push_back({arc.a, arc.b, BoundaryAnchor{arc.face, arc.slot, false}});
        // mirrored use of the same corner: the orbit reads the face backward
        out.push_back(
            {arc.b, arc.a, BoundaryAnchor{arc.face, ((arc.slot - 1) % n + n) % n, true}});
    }
    return out;
}

// Consecutive wheel faces cancel iff the reading of the first from the shared
// spoke matches the mirrored reading of the second.
bool wheel_pair_cancels(const TwoComplex& c, const DirectedCorner& first,
                        const DirectedCorner& second) {
    const int n2 = c.face_size(second.anchor.face);
    BoundaryAnchor rb = anchor_advanced(c, second.anchor, n2 - 1);
    return anchors_equivalent(c, first.anchor, anchor_flipped(rb));
}

TqDiagramWitness build_wheel_witness(const TwoComplex& c, VertexId hub_label,
                                     const LinkGraph& link,
                                     const std::vector<DirectedCorner>& corners,
                                     std::vector<int> walk) {
    // rotate so a face with at least 3 sides comes last (an all-2-gon wheel
    // would close into a sphere and is rejected by the caller)
    const int d = static_cast<int>(walk.size());
    int pivot = -1;
    for (int i = 0; i < d; ++i) {
        if (c.face_size(corners[walk[i]].anchor.face) >= 3) pivot = i;
    }
    if (pivot < 0) throw Error("wheel of 2-gons cannot form a disc diagram");
    std::rotate(walk.begin(), walk.begin() + (pivot + 1) % d, walk.end());

    DiagramBuilder b(hub_label);
    int arriving_pos = -1;
    for (int i = 0; i < d; ++i) {
        const auto& cr = corners[walk[i]];
        const int n = c.face_size(cr.anchor.face);
        auto read = [&](int t) { return anchor_read(c, cr.anchor, t); };

        // the new face orbit, read from its outgoing spoke, must spell the
        // corner anchor; exposed darts carry the outer (inverse) labels
        const int consume = i == 0 ? 0 : (i == d - 1 ? 2 : 1);
        std::vector<SignedEdge> exposed;
        if (consume == 0) {
            for (int j = 0; j < n; ++j) exposed.push_back(read(n - 1 - j).inverse());
        } else {
            for (int j = 0; j < n - consume; ++j) exposed.push_back(read(n - 2 - j).inverse());
        }
        std::vector<VertexId> chain;
        for (std::size_t j = 0; j + 1 < exposed.size(); ++j) {
            chain.push_back(c.head_of(exposed[j]));
        }

        if (i == 0) {
            b.attach_face(0, 0, exposed, chain, cr.anchor.face);
        } else if (i < d - 1) {
            b.attach_face(arriving_pos, 1, exposed, chain, cr.anchor.face);
        } else {
            b.attach_face(arriving_pos, 2, exposed, chain, cr.anchor.face);
        }
        arriving_pos = static_cast<int>(exposed.size()) - 1;
    }

    // vertex labels along the walk: origins are determined by dart labels
    auto diagram = b.build();
    DiagramRaw raw = diagram.raw();
    raw.vertex_label.assign(raw.vertex_count, -1);
    raw.vertex_label[0] = hub_label;
    for (DartId dart = 0; dart < static_cast<int>(raw.dart_origin.size()); ++dart) {
        raw.vertex_label[raw.dart_origin[dart]] = c.tail_of(raw.dart_label[dart]);
    }
    auto labeled = DiscDiagram::from_raw(std::move(raw));
    return TqDiagramWitness{hub_label, d, std::move(labeled)};
}

}  // namespace

std::optional<TqDiagramWitness> falsify_Tq_by_diagrams(const TwoComplex& c, int q,
                                                       int area_bound) {
    if (q < 3) throw Error("falsify_Tq_by_diagrams requires q >= 3");
    if (area_bound < 3) return std::nullopt;

    for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
        auto link = link_of(c, v);
        auto corners = directed_corners(c, link);
        const int nc = static_cast<int>(corners.size());
        const int max_d = std::min(q - 1, area_bound);

        for (int d = 3; d <= max_d; ++d) {
            std::vector<int> walk;
            std::function<bool(int)> dfs = [&](int depth) -> bool {
                if (depth == d) {
                    const auto& last = corners[walk.back()];
                    const auto& first = corners[walk.front()];
                    if (last.to != first.from) return false;
                    if (wheel_pair_cancels(c, last, first)) return false;
                    bool any_big = false;
                    for (int ci : walk) {
                        if (c.face_size(corners[ci].anchor.face) >= 3) any_big = true;
                    }
                    return any_big;  // an all-2-gon wheel closes into a sphere
                }
                for (int ci = 0; ci < nc; ++ci) {
                    if (!walk.empty()) {
                        if (corners[ci].from != corners[walk.back()].to) continue;
                        if (wheel_pair_cancels(c, corners[walk.back()], corners[ci])) continue;
                    }
                    walk.push_back(ci);
                    if (dfs(depth + 1)) return true;
                    walk.pop_back();
                }
                return false;
            };
            if (dfs(0)) {
                return build_wheel_witness(c, v, link, corners, walk);
            }
        }
    }
    return std::nullopt;
}

Classification classify(const TwoComplex& c) {
    Classification out;
    auto pieces = compute_pieces(c);

    int min_cover = -1;
    int longest_boundary = 0;
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        longest_boundary = std::max(longest_boundary, c.face_size(f));
        auto cover = min_piece_cover(c, pieces, f);
        if (cover.coverable && (min_cover == -1 || cover.count < min_cover)) {
            min_cover = cover.count;
        }
    }
    if (min_cover == -1) {
        out.max_p = longest_boundary;
        out.max_p_vacuous = true;
    } else {
        out.max_p = min_cover;
    }
    out.c4_report = check_Cp(c, pieces, 4);
    out.c4 = out.c4_report.holds;

    // largest q with T(q): one more than... T(q) holds iff no embedded link
    // cycle shorter than q, so max_q is the girth over all links
    std::optional<int> girth;
    for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
        auto link = link_of(c, v);
        const int cap = static_cast<int>(link.nodes.size());
        for (int n = 3; n <= cap; ++n) {
            std::vector<int> cy;
            if (find_embedded_cycle(link, n, &cy)) {
                if (!girth || n < *girth) girth = n;
                break;
            }
        }
    }
    out.max_q = girth;
    out.t4_report = check_Tq_link(c, 4);
    out.t4 = out.t4_report.holds;
    return out;
}

}  // namespace canclab
