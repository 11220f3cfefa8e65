#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "canclab/complex_io.hpp"
#include "canclab/error.hpp"

namespace canclab {

TwoComplex parse_complex(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_complex(in);
}

TwoComplex read_complex(std::istream& in) {
    ComplexBuilder b;
    std::map<std::string, VertexId> vmap;
    std::map<std::string, EdgeId> emap;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "v") {
            std::string id;
            if (!(ls >> id)) throw ParseError("expected vertex id", line_no, 1);
            if (vmap.count(id)) throw ParseError("duplicate vertex '" + id + "'", line_no, 1);
            vmap[id] = b.add_vertex(id);
        } else if (kind == "e") {
            std::string id, tail, head;
            if (!(ls >> id >> tail >> head)) {
                throw ParseError("expected 'e <id> <tail> <head>'", line_no, 1);
            }
            if (emap.count(id)) throw ParseError("duplicate edge '" + id + "'", line_no, 1);
            auto t = vmap.find(tail);
            auto h = vmap.find(head);
            if (t == vmap.end()) throw ParseError("unknown vertex '" + tail + "'", line_no, 1);
            if (h == vmap.end()) throw ParseError("unknown vertex '" + head + "'", line_no, 1);
            emap[id] = b.add_edge(t->second, h->second, id);
        } else if (kind == "f") {
            std::string id;
            if (!(ls >> id)) throw ParseError("expected face id", line_no, 1);
            std::vector<SignedEdge> boundary;
            std::string tok;
            while (ls >> tok) {
                bool reversed = false;
                std::string name = tok;
                if (tok[0] == '+' || tok[0] == '-') {
                    reversed = tok[0] == '-';
                    name = tok.substr(1);
                }
                auto e = emap.find(name);
                if (e == emap.end()) {
                    throw ParseError("unknown edge '" + name + "' in face", line_no, 1);
                }
                boundary.push_back({e->second, reversed});
            }
            if (boundary.empty()) throw ParseError("face with empty boundary", line_no, 1);
            b.add_face(std::move(boundary), id);
        } else {
            throw ParseError("unknown record '" + kind + "'", line_no, 1);
        }
    }
    return std::move(b).build();
}

void write_complex(std::ostream& out, const TwoComplex& c) {
    for (VertexId v = 0; v < static_cast<int>(c.vertex_count()); ++v) {
        out << "v " << c.vertex_name(v) << "\n";
    }
    for (EdgeId e = 0; e < static_cast<int>(c.edge_count()); ++e) {
        out << "e " << c.edge_name(e) << " " << c.vertex_name(c.edge(e).tail) << " "
            << c.vertex_name(c.edge(e).head) << "\n";
    }
    for (FaceId f = 0; f < static_cast<int>(c.face_count()); ++f) {
        out << "f " << c.face_name(f);
        for (const auto& s : c.face(f).boundary) {
            out << " " << (s.reversed ? '-' : '+') << c.edge_name(s.edge);
        }
        out << "\n";
    }
}

}  // namespace canclab
