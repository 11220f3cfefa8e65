#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "canclab/word.hpp"

namespace canclab {

/// A group presentation with one-letter generators and nonempty, freely and
/// cyclically reduced relators. No two relators agree up to rotation or
/// inversion. Immutable once parsed.
class Presentation {
public:
    Presentation(std::vector<char> generators, std::vector<CyclicWord> relators);

    /// Parses presentation-file text:
    ///   gens: a b
    ///   rels: abAB abab
    /// '#' starts a comment, blank lines are ignored. Rejects rather than
    /// normalizes non-reduced relators.
    static Presentation parse(std::string_view text);

    const std::vector<char>& generators() const { return generators_; }
    const std::vector<CyclicWord>& relators() const { return relators_; }
    bool has_generator(char symbol) const;

    std::string str() const;

private:
    std::vector<char> generators_;
    std::vector<CyclicWord> relators_;
};

/// Catalog entry for one relator with a nontrivial root power.
struct TorsionEntry {
    std::size_t relator_index;
    CyclicWord root;
    int exponent;                       // q > 1
    std::vector<int> candidate_orders;  // divisors of q greater than 1
};

/// One entry per relator that is a proper power. Empty list means every
/// relator is primitive (torsion-free verdict for aspherical presentations).
std::vector<TorsionEntry> torsion_catalog(const Presentation& p);

/// An occurrence of a word in a relator read cyclically. orientation +1 reads
/// the relator forward from `offset`; orientation -1 starts at `offset` and
/// reads backward through inverse letters.
struct Occurrence {
    std::size_t relator;
    std::size_t offset;
    int orientation;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
    friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// All occurrences of w in every relator, both orientations. Requires w
/// nonempty and freely reduced.
std::vector<Occurrence> cyclic_occurrences(const Word& w, const Presentation& p);

}  // namespace canclab
