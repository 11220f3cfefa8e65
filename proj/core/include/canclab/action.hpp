#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "canclab/complex.hpp"
#include "canclab/quadric.hpp"

namespace canclab {

/// A cellular automorphism: permutations of vertices, edges (with an
/// orientation flag per edge) and faces, commuting with attaching maps.
struct Automorphism {
    std::vector<VertexId> vertex_map;
    std::vector<SignedEdge> edge_map;  // edge e maps to +e' or -e'
    std::vector<FaceId> face_map;

    static Automorphism identity(const TwoComplex& c);
    bool is_identity() const;
    SignedEdge apply(SignedEdge s) const {
        SignedEdge img = edge_map[s.edge];
        return {img.edge, img.reversed != s.reversed};
    }

    friend bool operator==(const Automorphism&, const Automorphism&) = default;
    friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

/// a then b (i.e. the map x -> b(a(x))).
Automorphism compose(const Automorphism& a, const Automorphism& b);
Automorphism inverse(const TwoComplex& c, const Automorphism& a);

/// Permutations must be bijections and the image of every face boundary must
/// spell the image face's boundary up to rotation or reflection.
ValidationReport validate_automorphism(const TwoComplex& c, const Automorphism& a);

/// Derives the face permutation from vertex and edge maps by matching mapped
/// boundary words, then validates. Empty if no automorphism completes them.
std::optional<Automorphism> complete_automorphism(const TwoComplex& c,
                                                  std::vector<VertexId> vertex_map,
                                                  std::vector<SignedEdge> edge_map);

/// The group generated by named automorphisms, enumerated breadth first up to
/// a bound. Element 0 is the identity; each element records a shortest word
/// (lowercase = generator, uppercase = inverse).
class GroupAction {
public:
    GroupAction(const TwoComplex& c, std::vector<std::pair<std::string, Automorphism>> generators,
                std::size_t closure_bound = 10000);

    const TwoComplex& complex() const { return *complex_; }
    bool complete() const { return complete_; }
    std::size_t size() const { return elements_.size(); }
    const Automorphism& element(std::size_t i) const { return elements_[i]; }
    const std::string& word_of(std::size_t i) const { return words_[i]; }
    std::span<const std::pair<std::string, Automorphism>> generators() const { return generators_; }

    /// Composes a word in generator names; uppercase letters invert.
    Automorphism evaluate(std::string_view word) const;

private:
    const TwoComplex* complex_;
    std::vector<std::pair<std::string, Automorphism>> generators_;
    std::vector<Automorphism> elements_;
    std::vector<std::string> words_;
    bool complete_ = false;
};

struct FreenessReport {
    bool free = true;
    std::optional<std::size_t> witness_element;
    std::string witness_cell;  // description of the fixed or inverted cell
};

/// Free on the 1-skeleton: no nontrivial element fixes a vertex or an edge,
/// edge inversions included. Requires a complete closure.
FreenessReport free_on_1_skeleton(const GroupAction& g);

/// Least k <= bound with word^k the identity, if any.
std::optional<int> element_order(const GroupAction& g, std::string_view word, int bound);

struct FixedSet {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;           // fixed without inversion
    std::vector<EdgeId> inverted_edges;  // mapped to themselves reversed
    std::vector<FaceId> faces;
    std::vector<int> y_nodes;  // fixed vertices of the quadrization
};

/// Fixed cells in the base and in the quadrization, with the X2 view of
/// Fix_Y coinciding with the fixed faces.
FixedSet fixed_sets(const TwoComplex& c, const Quadrization& y, const Automorphism& a);

struct EllipticReport {
    bool locally_elliptic = true;
    std::vector<std::size_t> witnesses;             // elements fixing no cell
    std::vector<std::size_t> inversion_only;        // elements fixing only a mid-edge point
};

/// Every element must fix some cell. Elements whose only fixed point is the
/// midpoint of an inverted edge are reported separately. Requires a complete
/// closure.
EllipticReport locally_elliptic_check(const GroupAction& g);

struct FixUniquenessReport {
    bool ok = true;
    struct Entry {
        std::size_t element;
        std::vector<int> fixed_y_nodes;
    };
    std::vector<Entry> entries;  // nontrivial elements with a nonempty fixed set
};

/// Under the C(4)-T(4) and free-on-1-skeleton hypotheses, every nontrivial
/// element with a fixed Y vertex fixes exactly one.
FixUniquenessReport fix_uniqueness_check(const TwoComplex& c, const Quadrization& y,
                                         const GroupAction& g);

/// Restriction of an automorphism to the nodes of the quadrization.
YAutomorphism induced_y_automorphism(const Quadrization& y, const Automorphism& a);

struct SeparationResult {
    std::optional<int> exponent;  // least k <= bound separating every square at v
    bool corkv_ok = false;        // link distance of every neighbor to its image > 1
    std::string detail;
};

/// Least k such that every square containing v meets its g^k image in v only,
/// plus the link-distance consequence for the neighbors of v.
SeparationResult separation_exponent(const Quadrization& y, const Automorphism& g, int v_node,
                                     int bound);

struct SimReport {
    IntersectionKind kind = IntersectionKind::other;
    bool sigma_invariant = false;
    std::string fixed_cell;  // a 0- or 1-cell of the base fixed by g, if found
    bool dichotomy_witnessed = false;
};

/// For a set of pairwise distance-2 face nodes fixed setwise by g, the common
/// intersection is an interval or a vertex and g fixes one of its cells.
SimReport sim_check(const TwoComplex& c, const Quadrization& y, const Automorphism& g,
                    std::span<const int> sigma_face_nodes);

/// Action file: 'aut <name>' headers followed by 'v <from> <to>',
/// 'e <from> <+to|-to>' and 'f <from> <to>' mapping lines.
std::vector<std::pair<std::string, Automorphism>> read_action_file(std::istream& in,
                                                                   const TwoComplex& c);
void write_action_file(std::ostream& out, const TwoComplex& c,
                       std::span<const std::pair<std::string, Automorphism>> auts);

}  // namespace canclab
