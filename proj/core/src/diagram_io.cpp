#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "canclab/diagram_io.hpp"
#include "canclab/error.hpp"

namespace canclab {

namespace {

struct PendingLabel {
    char kind;  // 'v', 'd', 'f'
    int id;
    std::string target;
    int line;
};

}  // namespace

DiscDiagram parse_diagram(std::string_view text, const TwoComplex* target) {
    std::istringstream in{std::string(text)};
    return read_diagram(in, target);
}

DiscDiagram read_diagram(std::istream& in, const TwoComplex* target) {
    std::map<int, std::pair<int, int>> file_darts;  // id -> (twin, origin)
    std::map<int, std::vector<int>> rot_lines;
    int outer = -1;
    bool outer_seen = false;
    int max_vertex = -1;
    std::vector<PendingLabel> labels;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "d") {
            int id, twin, origin;
            if (!(ls >> id >> twin >> origin)) {
                throw ParseError("expected 'd <id> <twin> <origin>'", line_no, 1);
            }
            if (file_darts.count(id)) throw ParseError("duplicate dart", line_no, 1);
            file_darts[id] = {twin, origin};
            max_vertex = std::max(max_vertex, origin);
        } else if (kind == "rot") {
            int v;
            if (!(ls >> v)) throw ParseError("expected 'rot <vertex> <darts>'", line_no, 1);
            std::vector<int> darts;
            int d;
            while (ls >> d) darts.push_back(d);
            if (rot_lines.count(v)) throw ParseError("duplicate rot line", line_no, 1);
            rot_lines[v] = std::move(darts);
            max_vertex = std::max(max_vertex, v);
        } else if (kind == "outer") {
            if (!(ls >> outer)) throw ParseError("expected 'outer <dart>'", line_no, 1);
            outer_seen = true;
        } else if (kind == "lab") {
            std::string cell, tgt;
            if (!(ls >> cell >> tgt)) throw ParseError("expected 'lab <cell> <target>'", line_no, 1);
            if (cell.size() < 2 || (cell[0] != 'v' && cell[0] != 'd' && cell[0] != 'f')) {
                throw ParseError("cell must be v<i>, d<i> or f<i>", line_no, 1);
            }
            labels.push_back({cell[0], std::stoi(cell.substr(1)), tgt, line_no});
        } else {
            throw ParseError("unknown record '" + kind + "'", line_no, 1);
        }
    }

    // twin symmetry and internal renumbering into (2k, 2k+1) pairs
    std::map<int, DartId> internal;
    int next_id = 0;
    for (const auto& [id, rec] : file_darts) {
        auto other = file_darts.find(rec.first);
        if (other == file_darts.end() || other->second.first != id) {
            throw Error("dart " + std::to_string(id) + " has no symmetric twin");
        }
        if (rec.first == id) throw Error("dart twin must be a different dart");
        if (internal.count(id)) continue;
        internal[id] = next_id++;
        internal[rec.first] = next_id++;
    }

    DiagramRaw raw;
    raw.vertex_count = max_vertex + 1;
    if (raw.vertex_count == 0) raw.vertex_count = 1;
    raw.dart_origin.resize(internal.size());
    for (const auto& [id, rec] : file_darts) raw.dart_origin[internal[id]] = rec.second;
    raw.rotation.resize(raw.vertex_count);
    for (const auto& [v, darts] : rot_lines) {
        if (v < 0 || v >= raw.vertex_count) throw Error("rot line for unknown vertex");
        for (int d : darts) {
            auto it = internal.find(d);
            if (it == internal.end()) throw Error("rot line references unknown dart");
            raw.rotation[v].push_back(it->second);
        }
    }
    if (!file_darts.empty()) {
        if (!outer_seen) throw Error("missing 'outer' record");
        auto it = internal.find(outer);
        if (it == internal.end()) throw Error("outer references unknown dart");
        raw.outer_dart = it->second;
    }

    std::vector<PendingLabel> face_labels;
    if (!labels.empty()) {
        if (!target) throw Error("diagram has labels but no target complex was given");
        raw.vertex_label.assign(raw.vertex_count, -1);
        raw.dart_label.assign(raw.dart_origin.size(), SignedEdge{-1, false});
        raw.face_label_by_dart.assign(raw.dart_origin.size(), -1);
        for (const auto& l : labels) {
            if (l.kind == 'v') {
                auto tv = target->find_vertex(l.target);
                if (!tv) throw Error("unknown target vertex '" + l.target + "'");
                if (l.id < 0 || l.id >= raw.vertex_count) throw Error("label for unknown vertex");
                raw.vertex_label[l.id] = *tv;
            } else if (l.kind == 'd') {
                bool rev = l.target[0] == '-';
                std::string name = (l.target[0] == '+' || l.target[0] == '-') ? l.target.substr(1)
                                                                              : l.target;
                auto te = target->find_edge(name);
                if (!te) throw Error("unknown target edge '" + name + "'");
                auto it = internal.find(l.id);
                if (it == internal.end()) throw Error("label for unknown dart");
                raw.dart_label[it->second] = SignedEdge{*te, rev};
            } else {
                face_labels.push_back(l);
            }
        }
        // fill twin labels where only one side was given
        for (std::size_t d = 0; d + 1 < raw.dart_label.size(); d += 2) {
            auto &a = raw.dart_label[d], &b = raw.dart_label[d + 1];
            if (a.edge >= 0 && b.edge < 0) b = a.inverse();
            if (b.edge >= 0 && a.edge < 0) a = b.inverse();
        }
    }

    auto d = DiscDiagram::from_raw(std::move(raw));
    if (!face_labels.empty()) {
        if (!d.well_formed()) throw Error("cannot apply face labels: " + d.defect());
        DiagramRaw raw2 = d.raw();
        for (const auto& l : face_labels) {
            auto tf = target->find_face(l.target);
            if (!tf) throw Error("unknown target face '" + l.target + "'");
            auto it = internal.find(l.id);
            if (it == internal.end()) throw Error("face label references unknown dart");
            for (DartId dd : d.face_cycle(d.face_of(it->second))) {
                raw2.face_label_by_dart[dd] = *tf;
            }
        }
        d = DiscDiagram::from_raw(std::move(raw2));
    }
    return d;
}

void write_diagram(std::ostream& out, const DiscDiagram& d, const TwoComplex* target) {
    for (DartId dart = 0; dart < d.dart_count(); ++dart) {
        out << "d " << dart << " " << d.twin(dart) << " " << d.origin(dart) << "\n";
    }
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        auto rot = d.rotation(v);
        if (rot.empty() && d.vertex_count() > 1) continue;
        out << "rot " << v;
        for (DartId dart : rot) out << " " << dart;
        out << "\n";
    }
    if (d.dart_count() > 0) out << "outer " << d.raw().outer_dart << "\n";
    if (d.labeled() && target) {
        for (VertexId v = 0; v < d.vertex_count(); ++v) {
            if (d.vertex_label(v) >= 0) {
                out << "lab v" << v << " " << target->vertex_name(d.vertex_label(v)) << "\n";
            }
        }
        for (DartId dart = 0; dart < d.dart_count(); dart += 2) {
            SignedEdge s = d.dart_label(dart);
            if (s.edge >= 0) {
                out << "lab d" << dart << " " << (s.reversed ? '-' : '+')
                    << target->edge_name(s.edge) << "\n";
            }
        }
        for (FaceId f = 0; f < d.face_count(); ++f) {
            if (!d.is_inner(f) || d.face_label(f) < 0) continue;
            out << "lab f" << d.face_cycle(f)[0] << " " << target->face_name(d.face_label(f))
                << "\n";
        }
    }
}

}  // namespace canclab
