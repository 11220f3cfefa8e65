#include "canclab/word.hpp"

#include <algorithm>

namespace canclab {

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        auto l = Letter::from_char(c);
        if (!l) throw Error(std::string("invalid letter '") + c + "' in word");
        letters.push_back(*l);
    }
    return Word(std::move(letters));
}

Word Word::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return Word(std::move(out));
}

bool Word::freely_reduced() const {
    for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
        if (letters_[i + 1] == letters_[i].inverse()) return false;
    }
    return true;
}

bool Word::cyclically_reduced() const {
    if (!freely_reduced()) return false;
    if (letters_.size() >= 2 && letters_.front() == letters_.back().inverse()) return false;
    return true;
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (const auto& l : letters_) s.push_back(l.to_char());
    return s;
}

Word free_reduce(const Word& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (const auto& l : w.letters()) {
        if (!stack.empty() && stack.back() == l.inverse()) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    return Word(std::move(stack));
}

namespace {

std::size_t minimal_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (w.at(i) != w.at((i + p) % n)) ok = false;
        }
        if (ok) return p;
    }
    return n;
}

}  // namespace

CyclicWord CyclicWord::from_word(const Word& w) {
    if (w.empty()) throw Error("cyclic word must be nonempty");
    if (!w.freely_reduced()) throw Error("word '" + w.str() + "' is not freely reduced");
    if (!w.cyclically_reduced()) throw Error("word '" + w.str() + "' is not cyclically reduced");
    return CyclicWord(w, minimal_period(w));
}

CyclicWord CyclicWord::rotated(std::size_t k) const {
    const std::size_t n = size();
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(at((i + k) % n));
    return CyclicWord(Word(std::move(out)), period_);
}

CyclicWord CyclicWord::inverse() const {
    return CyclicWord(rep_.inverse(), period_);
}

bool CyclicWord::same_up_to_rotation(const CyclicWord& other) const {
    if (size() != other.size()) return false;
    for (std::size_t k = 0; k < size(); ++k) {
        if (rotated(k) == other) return true;
    }
    return false;
}

bool CyclicWord::same_up_to_rotation_or_inversion(const CyclicWord& other) const {
    return same_up_to_rotation(other) || inverse().same_up_to_rotation(other);
}

RootDecomposition primitive_root(const CyclicWord& r) {
    const std::size_t p = r.period();
    std::vector<Letter> root_letters;
    root_letters.reserve(p);
    for (std::size_t i = 0; i < p; ++i) root_letters.push_back(r.at(i));
    auto root = CyclicWord::from_word(Word(std::move(root_letters)));
    return {root, static_cast<int>(r.size() / p)};
}

}  // namespace canclab
