// Brute-force reference implementations used by the unit tests and the
// acceptance suite. These deliberately avoid the library's equivalence
// machinery: readings become strings, occurrences are enumerated naively.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "canclab/complex.hpp"
#include "canclab/quadric.hpp"

namespace canclab::oracle {

inline std::string reading(const TwoComplex& c, FaceId f, int off, bool rev, int len) {
    std::string out;
    for (int t = 0; t < len; ++t) {
        SignedEdge s = rev ? c.boundary_at(f, off - t).inverse() : c.boundary_at(f, off + t);
        out += std::to_string(s.edge) + (s.reversed ? "-" : "+") + ",";
    }
    return out;
}

inline bool is_piece(const TwoComplex& c, FaceId f, int off, int len) {
    std::string path = reading(c, f, off, false, len);
    std::set<std::string> classes;
    for (FaceId g = 0; g < static_cast<int>(c.face_count()); ++g) {
        if (c.face_size(g) < len) continue;
        for (int o = 0; o < c.face_size(g); ++o) {
            for (bool rev : {false, true}) {
                if (reading(c, g, o, rev, len) == path) {
                    classes.insert(reading(c, g, o, rev, c.face_size(g)));
                }
            }
        }
    }
    return classes.size() >= 2;
}

inline int max_piece_len(const TwoComplex& c, FaceId f, int off) {
    int best = 0;
    for (int len = 1; len <= c.face_size(f); ++len) {
        if (is_piece(c, f, off, len)) best = len;
    }
    return best;
}

/// Minimal piece cover of a face boundary by exhaustive interval partition.
inline int min_cover(const TwoComplex& c, FaceId f) {
    const int n = c.face_size(f);
    std::vector<int> maxlen(n);
    for (int i = 0; i < n; ++i) maxlen[i] = max_piece_len(c, f, i);
    int best = -1;
    for (int start = 0; start < n; ++start) {
        if (maxlen[start] == 0) continue;
        // breadth-first over covered prefix lengths from this start
        std::vector<int> dist(n + 1, -1);
        dist[0] = 0;
        for (int covered = 0; covered < n; ++covered) {
            if (dist[covered] < 0) continue;
            int here = (start + covered) % n;
            for (int take = 1; take <= maxlen[here] && covered + take <= n; ++take) {
                int& d = dist[covered + take];
                if (d < 0 || d > dist[covered] + 1) d = dist[covered] + 1;
            }
        }
        if (dist[n] > 0 && (best < 0 || dist[n] < best)) best = dist[n];
    }
    return best;  // -1 when no cover exists
}

/// All embedded cycles of length `len` in the link of v, as node index sets.
inline bool link_has_cycle(const TwoComplex& c, VertexId v, int len) {
    auto link = link_of(c, v);
    const int n = static_cast<int>(link.nodes.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& a : link.arcs) {
        if (a.a != a.b && a.a >= 0 && a.b >= 0) adj[a.a][a.b] = adj[a.b][a.a] = true;
    }
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    // enumerate all ordered node tuples of that length
    std::vector<int> tuple;
    std::vector<bool> used(n, false);
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(tuple.size()) == len) {
            return adj[tuple.back()][tuple.front()];
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            if (!tuple.empty() && !adj[tuple.back()][i]) continue;
            used[i] = true;
            tuple.push_back(i);
            if (rec()) return true;
            tuple.pop_back();
            used[i] = false;
        }
        return false;
    };
    return rec();
}

/// Count of 4-cycles through four distinct nodes of the incidence graph.
inline int four_cycles(const Quadrization& y) {
    int count = 0;
    const int n = y.node_count();
    for (int a = 0; a < n; ++a) {
        if (y.is_face_node(a)) continue;
        for (int b : y.neighbors(a)) {
            for (int c = a + 1; c < n; ++c) {
                if (c == b || !y.adjacent(b, c)) continue;
                for (int d : y.neighbors(c)) {
                    if (d <= b || d == a || !y.adjacent(d, a)) continue;
                    ++count;
                }
            }
        }
    }
    return count;
}

}  // namespace canclab::oracle
