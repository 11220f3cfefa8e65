#include "canclab/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <vector>

#include "canclab/diagram_builder.hpp"
#include "canclab/error.hpp"

namespace canclab {

namespace {

// signed edges packed as ints: edge * 2 + direction; inverse flips the bit
using Sym = int;
using Cyc = std::vector<Sym>;

Sym pack(SignedEdge s) { return s.edge * 2 + (s.reversed ? 1 : 0); }
SignedEdge unpack(Sym s) { return {s / 2, (s & 1) != 0}; }
Sym inv(Sym s) { return s ^ 1; }

struct CanonOp {
    bool rotate;  // else cancel
    int k = 0;    // rotation amount
    int idx = 0;  // cancel position
    Sym sym = 0;  // first symbol of the cancelled pair
};

// Cyclically reduces backtracks and rotates to the least form, recording the
// operations so a replay can undo them.
Cyc canonicalize(Cyc w, std::vector<CanonOp>* ops) {
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i + 1] == inv(w[i])) {
                ops->push_back({false, 0, static_cast<int>(i), w[i]});
                w.erase(w.begin() + i, w.begin() + i + 2);
                changed = true;
                break;
            }
        }
        if (changed) continue;
        if (w.size() >= 2 && w.front() == inv(w.back())) {
            ops->push_back({true, 1, 0, 0});
            std::rotate(w.begin(), w.begin() + 1, w.end());
            continue;
        }
        break;
    }
    if (!w.empty()) {
        int best = 0;
        const int m = static_cast<int>(w.size());
        for (int k = 1; k < m; ++k) {
            for (int t = 0; t < m; ++t) {
                Sym a = w[(k + t) % m], bsym = w[(best + t) % m];
                if (a != bsym) {
                    if (a < bsym) best = k;
                    break;
                }
            }
        }
        if (best != 0) {
            ops->push_back({true, best, 0, 0});
            std::rotate(w.begin(), w.begin() + best, w.end());
        }
    }
    return w;
}

struct Transition {
    FaceId face = -1;
    bool flip = false;
    int j = 0;    // anchor offset in the face reading
    int len = 0;  // consumed piece of the boundary word
    int i = 0;    // match position in the parent word
    std::vector<CanonOp> ops;
};

struct Node {
    Cyc word;
    int parent = -1;
    Transition via;
    int depth = 0;
};

}  // namespace

MinimalDiagramResult search_minimal_diagram(const TwoComplex& c, std::span<const SignedEdge> w,
                                            int area_bound) {
    if (w.empty()) throw Error("search_minimal_diagram: boundary word must be nonempty");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (c.head_of(w[i]) != c.tail_of(w[(i + 1) % w.size()])) {
            throw Error("search_minimal_diagram: boundary word is not a closed path");
        }
    }

    // face readings, both orientations
    const int nf = static_cast<int>(c.face_count());
    int max_face = 0;
    std::vector<std::array<Cyc, 2>> readings(nf);
    for (FaceId f = 0; f < nf; ++f) {
        const int n = c.face_size(f);
        max_face = std::max(max_face, n);
        Cyc fwd;
        for (int t = 0; t < n; ++t) fwd.push_back(pack(c.boundary_at(f, t)));
        Cyc rev;
        for (int t = n - 1; t >= 0; --t) rev.push_back(inv(fwd[t]));
        readings[f] = {fwd, rev};
    }

    Cyc start;
    for (const auto& s : w) start.push_back(pack(s));
    std::vector<CanonOp> ops0;
    Cyc canon0 = canonicalize(start, &ops0);

    std::vector<Node> nodes;
    std::map<Cyc, int> visited;
    nodes.push_back({canon0, -1, {}, 0});
    visited[canon0] = 0;
    std::deque<int> queue{0};
    int goal = canon0.empty() ? 0 : -1;

    while (goal < 0 && !queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        const int depth = nodes[cur].depth;
        if (depth >= area_bound) continue;
        const Cyc alpha = nodes[cur].word;
        const int m = static_cast<int>(alpha.size());

        for (FaceId f = 0; f < nf && goal < 0; ++f) {
            for (int flip = 0; flip < 2 && goal < 0; ++flip) {
                const Cyc& sigma = readings[f][flip];
                const int n = static_cast<int>(sigma.size());
                for (int j = 0; j < n && goal < 0; ++j) {
                    for (int len = 1; len <= std::min(n, m) && goal < 0; ++len) {
                        Cyc pattern(len);
                        for (int t = 0; t < len; ++t) {
                            pattern[t] = inv(sigma[((j + len - 1 - t) % n + n) % n]);
                        }
                        for (int i = 0; i < m && goal < 0; ++i) {
                            bool match = true;
                            for (int t = 0; t < len && match; ++t) {
                                if (alpha[(i + t) % m] != pattern[t]) match = false;
                            }
                            if (!match) continue;
                            Cyc raw;
                            for (int t = 0; t < n - len; ++t) {
                                raw.push_back(sigma[(j + len + t) % n]);
                            }
                            for (int t = 0; t < m - len; ++t) {
                                raw.push_back(alpha[(i + len + t) % m]);
                            }
                            if (static_cast<int>(raw.size()) >
                                (area_bound - depth - 1) * max_face) {
                                continue;
                            }
                            Transition tr{f, flip != 0, j, len, i, {}};
                            Cyc canon = canonicalize(std::move(raw), &tr.ops);
                            if (visited.count(canon)) continue;
                            visited[canon] = static_cast<int>(nodes.size());
                            nodes.push_back({canon, cur, std::move(tr), depth + 1});
                            if (canon.empty()) {
                                goal = static_cast<int>(nodes.size()) - 1;
                            } else {
                                queue.push_back(static_cast<int>(nodes.size()) - 1);
                            }
                        }
                    }
                }
            }
        }
    }

    MinimalDiagramResult result;
    if (goal < 0) return result;

    // chain from the start down to the empty word
    std::vector<int> chain;
    for (int at = goal; at != -1; at = nodes[at].parent) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());

    // replay plan, from the empty word back up to w:
    //   per transition (reversed): undo its canonical ops, then reattach the
    //   face over the t-segment, then rotate to the parent's frame
    // find the base vertex label first
    auto tail_label = [&](Sym s) { return c.tail_of(unpack(s)); };
    int base_label = -1;
    {
        // scan the plan in execution order for the first geometry op
        for (int ci = static_cast<int>(chain.size()) - 1; ci > 0 && base_label < 0; --ci) {
            const auto& tr = nodes[chain[ci]].via;
            for (auto it = tr.ops.rbegin(); it != tr.ops.rend() && base_label < 0; ++it) {
                if (!it->rotate) base_label = tail_label(it->sym);
            }
            if (base_label < 0 && tr.len > 0) {
                // reverse attach exposes the pattern; its first edge leaves the base
                const Cyc& sigma = readings[tr.face][tr.flip ? 1 : 0];
                base_label = tail_label(inv(sigma[(tr.j + tr.len - 1) %
                                                  static_cast<int>(sigma.size())]));
            }
        }
        for (auto it = ops0.rbegin(); it != ops0.rend() && base_label < 0; ++it) {
            if (!it->rotate) base_label = tail_label(it->sym);
        }
        if (base_label < 0) base_label = c.tail_of(w[0]);
    }

    DiagramBuilder builder(base_label);
    auto undo_ops = [&](const std::vector<CanonOp>& ops) {
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
            if (it->rotate) {
                const int L = builder.boundary_length();
                builder.rotate_boundary(((L - it->k) % L + L) % L);
            } else {
                builder.insert_leaf(it->idx, unpack(it->sym), c.head_of(unpack(it->sym)));
            }
        }
    };

    for (int ci = static_cast<int>(chain.size()) - 1; ci > 0; --ci) {
        const auto& tr = nodes[chain[ci]].via;
        undo_ops(tr.ops);
        const Cyc& sigma = readings[tr.face][tr.flip ? 1 : 0];
        const int n = static_cast<int>(sigma.size());
        std::vector<SignedEdge> exposed;
        std::vector<VertexId> chain_labels;
        for (int t = 0; t < tr.len; ++t) {
            exposed.push_back(unpack(inv(sigma[((tr.j + tr.len - 1 - t) % n + n) % n])));
        }
        for (std::size_t t = 0; t + 1 < exposed.size(); ++t) {
            chain_labels.push_back(c.head_of(exposed[t]));
        }
        builder.attach_face(0, n - tr.len, exposed, chain_labels, tr.face);
        const int m = builder.boundary_length();
        builder.rotate_boundary(((m - tr.i) % m + m) % m);
    }
    undo_ops(ops0);

    // the boundary must now spell w exactly
    if (builder.boundary_length() != static_cast<int>(w.size())) {
        throw Error("search_minimal_diagram: reconstruction length mismatch");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (builder.boundary_label(static_cast<int>(i)) != w[i]) {
            throw Error("search_minimal_diagram: reconstruction label mismatch");
        }
    }

    result.found = true;
    result.area = nodes[goal].depth;
    result.diagram = builder.build();
    return result;
}

}  // namespace canclab
