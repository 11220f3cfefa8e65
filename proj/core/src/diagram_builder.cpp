#include "canclab/diagram_builder.hpp"

#include <algorithm>

#include "canclab/error.hpp"

namespace canclab {

DiagramBuilder::DiagramBuilder(VertexId base_label) {
    new_vertex(base_label);
}

VertexId DiagramBuilder::new_vertex(VertexId label) {
    rotation_.emplace_back();
    vertex_label_.push_back(label);
    return static_cast<VertexId>(rotation_.size() - 1);
}

DartId DiagramBuilder::new_dart_pair(VertexId from, VertexId to, SignedEdge label) {
    DartId d = static_cast<DartId>(dart_origin_.size());
    dart_origin_.push_back(from);
    dart_origin_.push_back(to);
    dart_label_.push_back(label);
    dart_label_.push_back(label.inverse());
    dart_face_label_.push_back(-1);
    dart_face_label_.push_back(-1);
    return d;
}

void DiagramBuilder::rot_insert_before(VertexId v, DartId anchor, DartId d) {
    auto& rot = rotation_[v];
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw Error("builder: rotation anchor missing");
    rot.insert(it, d);
}

void DiagramBuilder::rot_insert_after(VertexId v, DartId anchor, DartId d) {
    auto& rot = rotation_[v];
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw Error("builder: rotation anchor missing");
    rot.insert(it + 1, d);
}

VertexId DiagramBuilder::boundary_vertex(int pos) const {
    if (boundary_.empty()) return 0;
    return dart_origin_[boundary_[pos]];
}

void DiagramBuilder::rotate_boundary(int k) {
    const int n = boundary_length();
    if (n == 0) return;
    k = ((k % n) + n) % n;
    std::rotate(boundary_.begin(), boundary_.begin() + k, boundary_.end());
}

void DiagramBuilder::insert_leaf(int pos, SignedEdge label, VertexId leaf_label) {
    const int n = boundary_length();
    if (pos < 0 || pos > n) throw Error("builder: leaf position out of range");
    VertexId v = boundary_.empty() ? 0 : dart_origin_[boundary_[pos % n]];
    VertexId u = new_vertex(leaf_label);
    DartId d = new_dart_pair(v, u, label);
    if (boundary_.empty()) {
        rotation_[v].push_back(d);
    } else {
        rot_insert_before(v, boundary_[pos % n], d);
    }
    rotation_[u].push_back(d ^ 1);
    boundary_.insert(boundary_.begin() + pos, {d, d ^ 1});
}

void DiagramBuilder::attach_face(int pos, int t_len, std::span<const SignedEdge> exposed,
                                 std::span<const VertexId> new_vertex_labels, FaceId target_face) {
    const int L = boundary_length();
    const int el = static_cast<int>(exposed.size());
    if (el < 1) throw Error("builder: attach_face needs at least one exposed edge");
    if (t_len < 0 || t_len > L) throw Error("builder: consumed run out of range");
    if (static_cast<int>(new_vertex_labels.size()) != el - 1) {
        throw Error("builder: need one label per new chain vertex");
    }
    if (L == 0 && t_len != 0) throw Error("builder: cannot consume from empty boundary");
    if (L > 0 && (pos < 0 || pos >= L)) throw Error("builder: position out of range");

    std::vector<DartId> consumed;
    consumed.reserve(t_len);
    for (int j = 0; j < t_len; ++j) consumed.push_back(boundary_[(pos + j) % L]);

    VertexId x0, xt;
    if (t_len >= 1) {
        x0 = dart_origin_[consumed.front()];
        xt = dart_origin_[consumed.back() ^ 1];
    } else {
        x0 = xt = boundary_.empty() ? 0 : dart_origin_[boundary_[pos]];
    }

    // chain vertices y_0 = x0, y_1..y_{el-1} fresh, y_el = xt
    std::vector<VertexId> chain(el + 1);
    chain[0] = x0;
    chain[el] = xt;
    for (int j = 1; j < el; ++j) chain[j] = new_vertex(new_vertex_labels[j - 1]);

    std::vector<DartId> fresh(el);
    for (int j = 0; j < el; ++j) {
        fresh[j] = new_dart_pair(chain[j], chain[j + 1], exposed[j]);
    }

    // rotation splices
    if (t_len >= 1) {
        rot_insert_before(x0, consumed.front(), fresh.front());
        rot_insert_after(xt, consumed.back() ^ 1, fresh.back() ^ 1);
    } else if (L == 0) {
        rotation_[x0].push_back(fresh.front());
        rotation_[x0].push_back(fresh.back() ^ 1);
    } else {
        rot_insert_before(x0, boundary_[pos], fresh.back() ^ 1);
        rot_insert_before(x0, fresh.back() ^ 1, fresh.front());
    }
    for (int j = 1; j < el; ++j) {
        rotation_[chain[j]] = {fresh[j - 1] ^ 1, fresh[j]};
    }

    // the consumed darts and the twins of the fresh path form the new face
    for (DartId d : consumed) dart_face_label_[d] = target_face;
    for (DartId d : fresh) dart_face_label_[d ^ 1] = target_face;
    ++area_;

    // new boundary: fresh path, then the rest of the old walk after the run
    std::vector<DartId> nb;
    nb.reserve(L - t_len + el);
    nb.insert(nb.end(), fresh.begin(), fresh.end());
    for (int j = 0; j < L - t_len; ++j) nb.push_back(boundary_[(pos + t_len + j) % L]);
    boundary_ = std::move(nb);
}

DiscDiagram DiagramBuilder::build() const {
    DiagramRaw raw;
    raw.vertex_count = vertex_count();
    raw.dart_origin = dart_origin_;
    raw.rotation = rotation_;
    raw.outer_dart = boundary_.empty() ? -1 : boundary_[0];
    bool any_label = false;
    for (const auto& s : dart_label_) {
        if (s.edge >= 0) any_label = true;
    }
    for (VertexId v : vertex_label_) {
        if (v >= 0) any_label = true;
    }
    if (any_label) {
        raw.vertex_label = vertex_label_;
        raw.dart_label = dart_label_;
        raw.face_label_by_dart = dart_face_label_;
    }
    auto d = DiscDiagram::from_raw(std::move(raw));
    if (!d.well_formed()) throw Error("builder produced a malformed diagram: " + d.defect());
    if (static_cast<int>(boundary_cycle(d).size()) != boundary_length()) {
        throw Error("builder: outer walk length mismatch");
    }
    return d;
}

}  // namespace canclab
