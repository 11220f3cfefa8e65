#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "canclab/corpus.hpp"
#include "canclab/word.hpp"

using namespace canclab;

namespace {

// independent reduction oracle: scan for any adjacent cancelling pair,
// erase, repeat until stable
Word naive_reduce(Word w) {
    auto letters = w.letters();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            if (letters[i + 1] == letters[i].inverse()) {
                letters.erase(letters.begin() + i, letters.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    return Word(letters);
}

Word random_word(Rng& rng, int max_len, int gens) {
    std::vector<Letter> ls;
    int len = rng.range(0, max_len);
    for (int i = 0; i < len; ++i) {
        ls.push_back({static_cast<std::uint8_t>(rng.below(gens)), rng.below(2) == 0});
    }
    return Word(ls);
}

}  // namespace

TEST_CASE("free reduction matches the examples") {
    CHECK(free_reduce(Word::parse("aAb")).str() == "b");
    CHECK(free_reduce(Word::parse("")).str() == "");
    CHECK(free_reduce(Word::parse("abBAab")).str() == "ab");
    CHECK(free_reduce(Word::parse("abBAab")) == naive_reduce(Word::parse("abBAab")));
}

TEST_CASE("free reduction is idempotent and agrees with the scan oracle") {
    Rng rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        Word w = random_word(rng, 20, 3);
        Word r = free_reduce(w);
        CHECK(r.freely_reduced());
        CHECK(free_reduce(r) == r);
        CHECK(r == naive_reduce(w));
    }
}

TEST_CASE("cyclic words reject unreduced input") {
    CHECK_THROWS_AS(CyclicWord::from_word(Word::parse("aA")), Error);
    CHECK_THROWS_AS(CyclicWord::from_word(Word::parse("abA")), Error);
    CHECK_THROWS_AS(CyclicWord::from_word(Word()), Error);
}

TEST_CASE("minimal rotation period by brute force") {
    auto period_oracle = [](const Word& w) {
        for (std::size_t p = 1; p <= w.size(); ++p) {
            if (w.size() % p != 0) continue;
            bool ok = true;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w.at(i) != w.at((i + p) % w.size())) ok = false;
            }
            if (ok) return p;
        }
        return w.size();
    };
    for (const char* text : {"abab", "abAB", "aaaaaa", "aabaab", "ab"}) {
        Word w = Word::parse(text);
        CHECK(CyclicWord::from_word(w).period() == period_oracle(w));
    }
    CHECK(CyclicWord::from_word(Word::parse("abab")).period() == 2);
}

TEST_CASE("primitive roots") {
    auto r1 = primitive_root(CyclicWord::from_word(Word::parse("abab")));
    CHECK(r1.root.str() == "ab");
    CHECK(r1.exponent == 2);

    // abAB has trivial rotation symmetry only: checked over all 4 rotations
    auto w = CyclicWord::from_word(Word::parse("abAB"));
    int fixed_rotations = 0;
    for (std::size_t k = 0; k < 4; ++k) {
        if (w.rotated(k) == w) ++fixed_rotations;
    }
    CHECK(fixed_rotations == 1);
    auto r2 = primitive_root(w);
    CHECK(r2.root.str() == "abAB");
    CHECK(r2.exponent == 1);

    auto r3 = primitive_root(CyclicWord::from_word(Word::parse("aaaaaa")));
    CHECK(r3.root.str() == "a");
    CHECK(r3.exponent == 6);
}

TEST_CASE("root power reassembles the relator") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        Word w = free_reduce(random_word(rng, 12, 2));
        if (w.empty() || !w.cyclically_reduced()) continue;
        auto cw = CyclicWord::from_word(w);
        auto dec = primitive_root(cw);
        std::vector<Letter> rebuilt;
        for (int k = 0; k < dec.exponent; ++k) {
            for (std::size_t i = 0; i < dec.root.size(); ++i) rebuilt.push_back(dec.root.at(i));
        }
        CHECK(Word(rebuilt) == cw.representative());
        CHECK(dec.root.period() == dec.root.size());
    }
}
