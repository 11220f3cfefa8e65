#include "canclab/action.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <cctype>

#include "canclab/error.hpp"

namespace canclab {

Automorphism Automorphism::identity(const TwoComplex& c) {
    Automorphism a;
    a.vertex_map.resize(c.vertex_count());
    for (std::size_t i = 0; i < c.vertex_count(); ++i) a.vertex_map[i] = static_cast<int>(i);
    a.edge_map.resize(c.edge_count());
    for (std::size_t i = 0; i < c.edge_count(); ++i) a.edge_map[i] = {static_cast<int>(i), false};
    a.face_map.resize(c.face_count());
    for (std::size_t i = 0; i < c.face_count(); ++i) a.face_map[i] = static_cast<int>(i);
    return a;
}

bool Automorphism::is_identity() const {
    for (std::size_t i = 0; i < vertex_map.size(); ++i) {
        if (vertex_map[i] != static_cast<int>(i)) return false;
    }
    for (std::size_t i = 0; i < edge_map.size(); ++i) {
        if (edge_map[i].edge != static_cast<int>(i) || edge_map[i].reversed) return false;
    }
    for (std::size_t i = 0; i < face_map.size(); ++i) {
        if (face_map[i] != static_cast<int>(i)) return false;
    }
    return true;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    Automorphism out;
    out.vertex_map.resize(a.vertex_map.size());
    for (std::size_t i = 0; i < a.vertex_map.size(); ++i) {
        out.vertex_map[i] = b.vertex_map[a.vertex_map[i]];
    }
    out.edge_map.resize(a.edge_map.size());
    for (std::size_t i = 0; i < a.edge_map.size(); ++i) {
        out.edge_map[i] = b.apply(a.edge_map[i]);
    }
    out.face_map.resize(a.face_map.size());
    for (std::size_t i = 0; i < a.face_map.size(); ++i) {
        out.face_map[i] = b.face_map[a.face_map[i]];
    }
    return out;
}

Automorphism inverse(const TwoComplex& c, const Automorphism& a) {
    Automorphism out = Automorphism::identity(c);
    for (std::size_t i = 0; i < a.vertex_map.size(); ++i) out.vertex_map[a.vertex_map[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < a.edge_map.size(); ++i) {
        out.edge_map[a.edge_map[i].edge] = {static_cast<int>(i), a.edge_map[i].reversed};
    }
    for (std::size_t i = 0; i < a.face_map.size(); ++i) out.face_map[a.face_map[i]] = static_cast<int>(i);
    return out;
}

ValidationReport validate_automorphism(const TwoComplex& c, const Automorphism& a) {
    ValidationReport rep;
    if (a.vertex_map.size() != c.vertex_count() || a.edge_map.size() != c.edge_count() ||
        a.face_map.size() != c.face_count()) {
        rep.issues.push_back({"size", "map tables do not match the complex"});
        return rep;
    }
    auto bijective = [](auto get, std::size_t n) {
        std::vector<bool> hit(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            int img = get(i);
            if (img < 0 || img >= static_cast<int>(n) || hit[img]) return false;
            hit[img] = true;
        }
        return true;
    };
    if (!bijective([&](std::size_t i) { return a.vertex_map[i]; }, c.vertex_count())) {
        rep.issues.push_back({"bijection", "vertex map is not a permutation"});
    }
    if (!bijective([&](std::size_t i) { return a.edge_map[i].edge; }, c.edge_count())) {
        rep.issues.push_back({"bijection", "edge map is not a permutation"});
    }
    if (!bijective([&](std::size_t i) { return a.face_map[i]; }, c.face_count())) {
        rep.issues.push_back({"bijection", "face map is not a permutation"});
    }
    if (!rep.ok()) return rep;

    for (EdgeId e = 0; e < static_cast<int>(c.edge_count()); ++e) {
        SignedEdge img = a.edge_map[e];
        VertexId t = c.tail_of(img), h = c.head_of(img);
        if (t != a.vertex_map[c.edge(e).tail] || h != a.vertex_map[c.edge(e).head]) {
            rep.issues.push_back({"endpoints", "edge " + c.edge_name(e) +
                                                   " image endpoints do not match vertex map"});
        }
    }
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        const int n = c.face_size(f);
        FaceId img = a.face_map[f];
        if (c.face_size(img) != n) {
            rep.issues.push_back({"attaching", "face " + c.face_name(f) + " image has wrong size"});
            continue;
        }
        // the mapped boundary word must be a reading of the image boundary
        bool found = false;
        for (bool rev : {false, true}) {
            for (int off = 0; off < n && !found; ++off) {
                BoundaryAnchor anchor{img, off, rev};
                bool ok = true;
                for (int t = 0; t < n && ok; ++t) {
                    if (anchor_read(c, anchor, t) != a.apply(c.boundary_at(f, t))) ok = false;
                }
                if (ok) found = true;
            }
        }
        if (!found) {
            rep.issues.push_back(
                {"attaching", "face " + c.face_name(f) + " image boundary mismatch"});
        }
    }
    return rep;
}

GroupAction::GroupAction(const TwoComplex& c,
                         std::vector<std::pair<std::string, Automorphism>> generators,
                         std::size_t closure_bound)
    : complex_(&c), generators_(std::move(generators)) {
    for (const auto& [name, gen] : generators_) {
        auto rep = validate_automorphism(c, gen);
        if (!rep.ok()) {
            throw Error("generator '" + name + "' is not an automorphism: " +
                        rep.issues.front().detail);
        }
        if (name.size() != 1 || name[0] < 'a' || name[0] > 'z') {
            throw Error("generator names must be single lowercase letters");
        }
    }
    std::map<Automorphism, std::size_t> seen;
    elements_.push_back(Automorphism::identity(c));
    words_.push_back("");
    seen[elements_[0]] = 0;
    std::deque<std::size_t> queue{0};
    complete_ = true;
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (const auto& [name, gen] : generators_) {
            for (bool inv : {false, true}) {
                Automorphism next =
                    compose(elements_[cur], inv ? inverse(c, gen) : gen);
                if (seen.count(next)) continue;
                if (elements_.size() >= closure_bound) {
                    complete_ = false;
                    continue;
                }
                seen[next] = elements_.size();
                words_.push_back(words_[cur] +
                                 static_cast<char>(inv ? std::toupper(name[0]) : name[0]));
                elements_.push_back(std::move(next));
                queue.push_back(elements_.size() - 1);
            }
        }
    }
}

Automorphism GroupAction::evaluate(std::string_view word) const {
    Automorphism out = Automorphism::identity(*complex_);
    for (char ch : word) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        char base = static_cast<char>(std::tolower(ch));
        bool inv = std::isupper(static_cast<unsigned char>(ch));
        const Automorphism* gen = nullptr;
        for (const auto& [name, g] : generators_) {
            if (name[0] == base) gen = &g;
        }
        if (!gen) throw Error(std::string("unknown generator '") + base + "' in word");
        out = compose(out, inv ? inverse(*complex_, *gen) : *gen);
    }
    return out;
}

FreenessReport free_on_1_skeleton(const GroupAction& g) {
    if (!g.complete()) throw Error("free_on_1_skeleton requires a complete closure");
    const auto& c = g.complex();
    FreenessReport rep;
    for (std::size_t i = 1; i < g.size(); ++i) {
        const auto& a = g.element(i);
        for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
            if (a.vertex_map[v] == v) {
                rep.free = false;
                rep.witness_element = i;
                rep.witness_cell = "vertex " + c.vertex_name(v);
                return rep;
            }
        }
        for (EdgeId e = 0; e < static_cast<int>(c.edge_count()); ++e) {
            if (a.edge_map[e].edge == e) {
                rep.free = false;
                rep.witness_element = i;
                rep.witness_cell = std::string(a.edge_map[e].reversed ? "inverted" : "fixed") +
                                   " edge " + c.edge_name(e);
                return rep;
            }
        }
    }
    return rep;
}

std::optional<int> element_order(const GroupAction& g, std::string_view word, int bound) {
    auto a = g.evaluate(word);
    auto cur = a;
    for (int k = 1; k <= bound; ++k) {
        if (cur.is_identity()) return k;
        cur = compose(cur, a);
    }
    return std::nullopt;
}

FixedSet fixed_sets(const TwoComplex& c, const Quadrization& y, const Automorphism& a) {
    FixedSet out;
    for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
        if (a.vertex_map[v] == v) {
            out.vertices.push_back(v);
            out.y_nodes.push_back(y.node_of_vertex(v));
        }
    }
    for (EdgeId e = 0; e < static_cast<int>(c.edge_count()); ++e) {
        if (a.edge_map[e].edge == e) {
            (a.edge_map[e].reversed ? out.inverted_edges : out.edges).push_back(e);
        }
    }
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        if (a.face_map[f] == f) {
            out.faces.push_back(f);
            out.y_nodes.push_back(y.node_of_face(f));
        }
    }
    std::sort(out.y_nodes.begin(), out.y_nodes.end());
    return out;
}

EllipticReport locally_elliptic_check(const GroupAction& g) {
    if (!g.complete()) throw Error("locally_elliptic_check requires a complete closure");
    const auto& c = g.complex();
    EllipticReport rep;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& a = g.element(i);
        bool fixes_cell = false;
        bool inverts = false;
        for (VertexId v = 0; v < static_cast<int>(c.vertex_count()) && !fixes_cell; ++v) {
            if (a.vertex_map[v] == v) fixes_cell = true;
        }
        for (EdgeId e = 0; e < static_cast<int>(c.edge_count()) && !fixes_cell; ++e) {
            if (a.edge_map[e].edge == e) {
                if (a.edge_map[e].reversed) {
                    inverts = true;
                } else {
                    fixes_cell = true;
                }
            }
        }
        for (FaceId f = 0; f < static_cast<int>(c.face_count()) && !fixes_cell; ++f) {
            if (a.face_map[f] == f) fixes_cell = true;
        }
        if (!fixes_cell) {
            if (inverts) {
                rep.inversion_only.push_back(i);
            } else {
                rep.locally_elliptic = false;
                rep.witnesses.push_back(i);
            }
        }
    }
    return rep;
}

FixUniquenessReport fix_uniqueness_check(const TwoComplex& c, const Quadrization& y,
                                         const GroupAction& g) {
    auto freeness = free_on_1_skeleton(g);
    if (!freeness.free) {
        throw Error("fix_uniqueness_check: action is not free on the 1-skeleton (" +
                    freeness.witness_cell + ")");
    }
    auto cls = classify(c);
    if (!cls.c4 || !cls.t4) {
        throw Error("fix_uniqueness_check: complex is not classified C(4)-T(4)");
    }
    FixUniquenessReport rep;
    for (std::size_t i = 1; i < g.size(); ++i) {
        auto fixed = fixed_sets(c, y, g.element(i));
        if (fixed.y_nodes.empty()) continue;
        rep.entries.push_back({i, fixed.y_nodes});
        if (fixed.y_nodes.size() != 1) rep.ok = false;
    }
    return rep;
}

YAutomorphism induced_y_automorphism(const Quadrization& y, const Automorphism& a) {
    YAutomorphism h;
    h.node_map.resize(y.node_count());
    for (int v = 0; v < y.vertex_node_count(); ++v) h.node_map[v] = a.vertex_map[v];
    for (int f = 0; f < y.face_node_count(); ++f) {
        h.node_map[y.node_of_face(f)] = y.node_of_face(a.face_map[f]);
    }
    return h;
}

SeparationResult separation_exponent(const Quadrization& y, const Automorphism& g, int v_node,
                                     int bound) {
    SeparationResult out;
    auto h0 = induced_y_automorphism(y, g);
    if (h0.node_map[v_node] != v_node) throw Error("separation_exponent: g does not fix v");

    auto cells_of_square = [&](const Quadrization::Square& s) {
        std::set<int> cells(s.cycle.begin(), s.cycle.end());
        return cells;
    };

    YAutomorphism hk = h0;
    for (int k = 1; k <= bound; ++k) {
        bool separates = true;
        bool identity = true;
        for (int i = 0; i < y.node_count() && identity; ++i) {
            if (hk.node_map[i] != i) identity = false;
        }
        if (!identity) {
            for (int si : y.squares_at(v_node)) {
                const auto& sq = y.squares()[si];
                auto mine = cells_of_square(sq);
                Quadrization::Square img;
                for (int t = 0; t < 4; ++t) img.cycle[t] = hk.node_map[sq.cycle[t]];
                auto theirs = cells_of_square(img);
                std::vector<int> common;
                std::set_intersection(mine.begin(), mine.end(), theirs.begin(), theirs.end(),
                                      std::back_inserter(common));
                if (common != std::vector<int>{v_node}) {
                    separates = false;
                    break;
                }
            }
        } else {
            separates = false;  // the identity never separates
        }
        if (separates) {
            out.exponent = k;
            out.corkv_ok = true;
            for (int nb : y.neighbors(v_node)) {
                int img = hk.node_map[nb];
                int dist = y.link_distance(v_node, nb, img);
                if (dist != -1 && dist <= 1) {
                    out.corkv_ok = false;
                    out.detail = "neighbor at link distance " + std::to_string(dist) +
                                 " from its image";
                }
            }
            return out;
        }
        // advance hk to g^(k+1)
        YAutomorphism next;
        next.node_map.resize(y.node_count());
        for (int i = 0; i < y.node_count(); ++i) next.node_map[i] = h0.node_map[hk.node_map[i]];
        hk = std::move(next);
    }
    out.detail = "no exponent up to the bound separates every square";
    return out;
}

SimReport sim_check(const TwoComplex& c, const Quadrization& y, const Automorphism& g,
                    std::span<const int> sigma_face_nodes) {
    SimReport rep;
    if (sigma_face_nodes.size() < 1) throw Error("sim_check: sigma must be nonempty");
    for (int node : sigma_face_nodes) {
        if (!y.is_face_node(node)) throw Error("sim_check: sigma must consist of face nodes");
    }
    for (std::size_t i = 0; i < sigma_face_nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < sigma_face_nodes.size(); ++j) {
            if (y.distance(sigma_face_nodes[i], sigma_face_nodes[j]) != 2) {
                throw Error("sim_check: sigma members must be at pairwise distance 2");
            }
        }
    }
    std::set<int> sigma(sigma_face_nodes.begin(), sigma_face_nodes.end());
    std::set<int> image;
    for (int node : sigma) image.insert(y.node_of_face(g.face_map[y.base_face(node)]));
    rep.sigma_invariant = image == sigma;
    if (!rep.sigma_invariant) throw Error("sim_check: sigma is not g-invariant");

    if (sigma.size() == 1) {
        rep.kind = IntersectionKind::other;
        rep.dichotomy_witnessed = true;  // vacuous
        return rep;
    }
    std::vector<FaceId> faces;
    for (int node : sigma) faces.push_back(y.base_face(node));
    auto inter = multi_intersection_check(c, faces);
    rep.kind = inter.kind;

    // g maps the intersection to itself; find a fixed 0- or 1-cell in it
    for (VertexId v : inter.cells.vertices) {
        if (g.vertex_map[v] == v) {
            rep.fixed_cell = "vertex " + c.vertex_name(v);
            rep.dichotomy_witnessed = true;
            return rep;
        }
    }
    for (EdgeId e : inter.cells.edges) {
        if (g.edge_map[e].edge == e) {
            rep.fixed_cell = std::string(g.edge_map[e].reversed ? "inverted edge " : "edge ") +
                             c.edge_name(e);
            rep.dichotomy_witnessed = true;
            return rep;
        }
    }
    rep.dichotomy_witnessed = g.is_identity();
    return rep;
}

std::vector<std::pair<std::string, Automorphism>> read_action_file(std::istream& in,
                                                                   const TwoComplex& c) {
    std::vector<std::pair<std::string, Automorphism>> out;
    Automorphism* cur = nullptr;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "aut") {
            std::string name;
            if (!(ls >> name)) throw ParseError("expected 'aut <name>'", line_no, 1);
            out.emplace_back(name, Automorphism::identity(c));
            cur = &out.back().second;
            continue;
        }
        if (!cur) throw ParseError("mapping line before 'aut'", line_no, 1);
        std::string from, to;
        if (!(ls >> from >> to)) throw ParseError("expected '<from> <to>'", line_no, 1);
        if (kind == "v") {
            auto a = c.find_vertex(from), b = c.find_vertex(to);
            if (!a || !b) throw ParseError("unknown vertex in mapping", line_no, 1);
            cur->vertex_map[*a] = *b;
        } else if (kind == "e") {
            bool rev = to[0] == '-';
            std::string name = (to[0] == '+' || to[0] == '-') ? to.substr(1) : to;
            auto a = c.find_edge(from), b = c.find_edge(name);
            if (!a || !b) throw ParseError("unknown edge in mapping", line_no, 1);
            cur->edge_map[*a] = {*b, rev};
        } else if (kind == "f") {
            auto a = c.find_face(from), b = c.find_face(to);
            if (!a || !b) throw ParseError("unknown face in mapping", line_no, 1);
            cur->face_map[*a] = *b;
        } else {
            throw ParseError("unknown record '" + kind + "'", line_no, 1);
        }
    }
    return out;
}

void write_action_file(std::ostream& out, const TwoComplex& c,
                       std::span<const std::pair<std::string, Automorphism>> auts) {
    for (const auto& [name, a] : auts) {
        out << "aut " << name << "\n";
        for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
            out << "v " << c.vertex_name(v) << " " << c.vertex_name(a.vertex_map[v]) << "\n";
        }
        for (EdgeId e = 0; e < static_cast<int>(c.edge_count()); ++e) {
            out << "e " << c.edge_name(e) << " " << (a.edge_map[e].reversed ? '-' : '+')
                << c.edge_name(a.edge_map[e].edge) << "\n";
        }
        for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
            out << "f " << c.face_name(f) << " " << c.face_name(a.face_map[f]) << "\n";
        }
    }
}

}  // namespace canclab
