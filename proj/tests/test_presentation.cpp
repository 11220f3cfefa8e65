#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "canclab/presentation.hpp"

using namespace canclab;

TEST_CASE("parsing the torus presentation") {
    auto p = Presentation::parse("gens: a b\nrels: abAB");
    CHECK(p.generators() == std::vector<char>{'a', 'b'});
    REQUIRE(p.relators().size() == 1);
    CHECK(p.relators()[0].str() == "abAB");
}

TEST_CASE("parser rejects bad input") {
    CHECK_THROWS_AS(Presentation::parse("gens: a\nrels: aA"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("gens: a\nrels: baB"), ParseError);  // unknown generator
    CHECK_THROWS_AS(Presentation::parse("rels: a"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("gens: a a\nrels: aa"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("gens: a b\nrels: ab BA"), ParseError);  // duplicate
    CHECK_THROWS_AS(Presentation::parse("gens: a b\nrels: abAB\nextra"), ParseError);
    CHECK_THROWS_AS(Presentation::parse(""), ParseError);

    // comments and blanks are fine
    auto p = Presentation::parse("# title\n\ngens: a b  # two\nrels: abab  # one\n");
    CHECK(p.relators()[0].period() == 2);
}

TEST_CASE("torsion catalog") {
    auto torsion_free = torsion_catalog(Presentation::parse("gens: a b\nrels: abAB"));
    CHECK(torsion_free.empty());

    auto abab = torsion_catalog(Presentation::parse("gens: a b\nrels: abab"));
    REQUIRE(abab.size() == 1);
    CHECK(abab[0].root.str() == "ab");
    CHECK(abab[0].exponent == 2);
    CHECK(abab[0].candidate_orders == std::vector<int>{2});

    auto a6 = torsion_catalog(Presentation::parse("gens: a\nrels: aaaaaa"));
    REQUIRE(a6.size() == 1);
    CHECK(a6[0].root.str() == "a");
    CHECK(a6[0].exponent == 6);
    CHECK(a6[0].candidate_orders == std::vector<int>{2, 3, 6});

    for (const auto& entry : a6) {
        for (int s : entry.candidate_orders) {
            CHECK(entry.exponent % s == 0);
            CHECK(s > 1);
        }
    }
}

namespace {

// rotation-scan oracle: spell every rotation of the relator (and of its
// backward inverse reading) as a string and look for w at the front
std::vector<Occurrence> occurrence_oracle(const Word& w, const Presentation& p) {
    std::vector<Occurrence> out;
    for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
        const auto& r = p.relators()[ri];
        const std::size_t n = r.size();
        for (std::size_t off = 0; off < n; ++off) {
            std::string fwd, bwd;
            for (std::size_t t = 0; t < w.size(); ++t) {
                fwd += r.at((off + t) % n).to_char();
                bwd += r.at((off + n - (t % n)) % n).inverse().to_char();
            }
            if (fwd == w.str()) out.push_back({ri, off, +1});
            if (bwd == w.str()) out.push_back({ri, off, -1});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("cyclic occurrences match the examples") {
    auto abab = Presentation::parse("gens: a b\nrels: abab");
    auto occ = cyclic_occurrences(Word::parse("ab"), abab);
    REQUIRE(occ.size() == 2);
    CHECK(occ[0] == Occurrence{0, 0, +1});
    CHECK(occ[1] == Occurrence{0, 2, +1});

    auto torus = Presentation::parse("gens: a b\nrels: abAB");
    CHECK(cyclic_occurrences(Word::parse("c"), torus).empty());

    auto a_occ = cyclic_occurrences(Word::parse("a"), torus);
    REQUIRE(a_occ.size() == 2);
    CHECK(a_occ[0] == Occurrence{0, 0, +1});
    CHECK(a_occ[1] == Occurrence{0, 2, -1});
}

TEST_CASE("cyclic occurrences agree with the rotation-scan oracle") {
    std::vector<Presentation> corpus;
    corpus.push_back(Presentation::parse("gens: a b\nrels: abAB"));
    corpus.push_back(Presentation::parse("gens: a b\nrels: abab"));
    corpus.push_back(Presentation::parse("gens: a\nrels: aaaaaa"));
    corpus.push_back(Presentation::parse("gens: a b c d\nrels: abABcdCD"));
    std::vector<std::string> words{"a", "b", "ab", "ba", "AB", "abA", "aa", "cd", "DC"};
    for (const auto& p : corpus) {
        for (const auto& text : words) {
            auto w = Word::parse(text);
            auto got = cyclic_occurrences(w, p);
            auto expect = occurrence_oracle(w, p);
            std::sort(got.begin(), got.end());
            std::sort(expect.begin(), expect.end());
            CHECK(got == expect);
        }
    }
}

TEST_CASE("occurrence preconditions") {
    auto p = Presentation::parse("gens: a\nrels: aaa");
    CHECK_THROWS_AS(cyclic_occurrences(Word(), p), Error);
    CHECK_THROWS_AS(cyclic_occurrences(Word::parse("aA"), p), Error);
}
