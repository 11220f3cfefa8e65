#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "canclab/error.hpp"

namespace canclab {

inline constexpr int kMaxGenerators = 26;

/// A signed generator. 'a'..'z' are the generators, 'A'..'Z' their inverses.
struct Letter {
    std::uint8_t gen = 0;  // 0..25
    bool inv = false;

    Letter inverse() const { return {gen, !inv}; }
    char to_char() const { return static_cast<char>((inv ? 'A' : 'a') + gen); }

    static std::optional<Letter> from_char(char c) {
        if (c >= 'a' && c <= 'z') return Letter{static_cast<std::uint8_t>(c - 'a'), false};
        if (c >= 'A' && c <= 'Z') return Letter{static_cast<std::uint8_t>(c - 'A'), true};
        return std::nullopt;
    }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the free group on at most 26 one-letter generators.
/// The empty word denotes the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Parses a string like "abAB". Throws Error on a non-letter character.
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& at(std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    Word inverse() const;
    bool freely_reduced() const;
    /// Freely reduced and no cancellation between last and first letter.
    bool cyclically_reduced() const;

    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// The unique freely reduced word equal to w in the free group. Idempotent.
Word free_reduce(const Word& w);

/// A nonempty freely and cyclically reduced word considered up to rotation,
/// with its minimal rotation period cached.
class CyclicWord {
public:
    /// Throws Error if w is empty or not freely/cyclically reduced.
    static CyclicWord from_word(const Word& w);

    const Word& representative() const { return rep_; }
    std::size_t size() const { return rep_.size(); }
    std::size_t period() const { return period_; }

    Letter at(std::size_t i) const { return rep_.at(i % rep_.size()); }

    CyclicWord rotated(std::size_t k) const;
    CyclicWord inverse() const;

    bool same_up_to_rotation(const CyclicWord& other) const;
    bool same_up_to_rotation_or_inversion(const CyclicWord& other) const;

    std::string str() const { return rep_.str(); }

    friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
        return a.rep_ == b.rep_;
    }

private:
    CyclicWord(Word rep, std::size_t period) : rep_(std::move(rep)), period_(period) {}

    Word rep_;
    std::size_t period_;
};

/// r = root^exponent with a primitive root (period equal to length).
struct RootDecomposition {
    CyclicWord root;
    int exponent;
};

RootDecomposition primitive_root(const CyclicWord& r);

}  // namespace canclab
