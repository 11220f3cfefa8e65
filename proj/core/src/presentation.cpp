#include "canclab/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "canclab/error.hpp"

namespace canclab {

Presentation::Presentation(std::vector<char> generators, std::vector<CyclicWord> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
    if (generators_.size() > kMaxGenerators) {
        throw Error("too many generators (at most 26 supported)");
    }
    std::set<char> seen;
    for (char g : generators_) {
        if (g < 'a' || g > 'z') throw Error("generator symbols must be lowercase letters");
        if (!seen.insert(g).second) {
            throw Error(std::string("duplicate generator '") + g + "'");
        }
    }
    for (const auto& r : relators_) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            char base = static_cast<char>('a' + r.at(i).gen);
            if (!seen.count(base)) {
                throw Error(std::string("relator '") + r.str() + "' uses unknown generator '" +
                            base + "'");
            }
        }
    }
    for (std::size_t i = 0; i < relators_.size(); ++i) {
        for (std::size_t j = i + 1; j < relators_.size(); ++j) {
            if (relators_[i].same_up_to_rotation_or_inversion(relators_[j])) {
                throw Error("duplicate relator '" + relators_[j].str() + "' (equal to '" +
                            relators_[i].str() + "' up to rotation or inversion)");
            }
        }
    }
}

bool Presentation::has_generator(char symbol) const {
    return std::find(generators_.begin(), generators_.end(), symbol) != generators_.end();
}

std::string Presentation::str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (i) s += ",";
        s += generators_[i];
    }
    s += " | ";
    for (std::size_t i = 0; i < relators_.size(); ++i) {
        if (i) s += ", ";
        s += relators_[i].str();
    }
    s += ">";
    return s;
}

namespace {

struct Token {
    std::string text;
    int line;
    int col;
};

// Splits a line at '#' and returns whitespace separated tokens with columns.
std::vector<Token> tokenize(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::string body = line;
    if (auto pos = body.find('#'); pos != std::string::npos) body.resize(pos);
    std::size_t i = 0;
    while (i < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))) ++j;
        out.push_back({body.substr(i, j - i), line_no, static_cast<int>(i + 1)});
        i = j;
    }
    return out;
}

}  // namespace

Presentation Presentation::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::vector<std::vector<Token>> content;
    while (std::getline(in, line)) {
        ++line_no;
        auto toks = tokenize(line, line_no);
        if (!toks.empty()) content.push_back(std::move(toks));
    }
    if (content.empty()) throw ParseError("empty presentation file", 1, 1);
    if (content.size() > 2) {
        throw ParseError("unexpected extra line", content[2][0].line, content[2][0].col);
    }

    const auto& gens_line = content[0];
    if (gens_line[0].text != "gens:") {
        throw ParseError("expected 'gens:'", gens_line[0].line, gens_line[0].col);
    }
    std::vector<char> gens;
    for (std::size_t i = 1; i < gens_line.size(); ++i) {
        const auto& t = gens_line[i];
        if (t.text.size() != 1 || t.text[0] < 'a' || t.text[0] > 'z') {
            throw ParseError("generator must be a single lowercase letter", t.line, t.col);
        }
        if (std::find(gens.begin(), gens.end(), t.text[0]) != gens.end()) {
            throw ParseError("duplicate generator '" + t.text + "'", t.line, t.col);
        }
        gens.push_back(t.text[0]);
    }
    if (gens.size() > kMaxGenerators) {
        throw ParseError("too many generators (at most 26 supported)", gens_line[0].line,
                         gens_line[0].col);
    }

    if (content.size() < 2) {
        throw ParseError("expected 'rels:' line", line_no + 1, 1);
    }
    const auto& rels_line = content[1];
    if (rels_line[0].text != "rels:") {
        throw ParseError("expected 'rels:'", rels_line[0].line, rels_line[0].col);
    }

    std::vector<CyclicWord> relators;
    for (std::size_t i = 1; i < rels_line.size(); ++i) {
        const auto& t = rels_line[i];
        Word w;
        try {
            w = Word::parse(t.text);
        } catch (const Error& e) {
            throw ParseError(e.what(), t.line, t.col);
        }
        if (w.empty()) throw ParseError("empty relator", t.line, t.col);
        for (const auto& l : w.letters()) {
            char base = static_cast<char>('a' + l.gen);
            if (std::find(gens.begin(), gens.end(), base) == gens.end()) {
                throw ParseError(std::string("unknown generator '") + base + "' in relator",
                                 t.line, t.col);
            }
        }
        if (!w.freely_reduced()) {
            throw ParseError("relator '" + t.text + "' is not freely reduced", t.line, t.col);
        }
        if (!w.cyclically_reduced()) {
            throw ParseError("relator '" + t.text + "' is not cyclically reduced", t.line, t.col);
        }
        auto cw = CyclicWord::from_word(w);
        for (const auto& prev : relators) {
            if (prev.same_up_to_rotation_or_inversion(cw)) {
                throw ParseError("duplicate relator '" + t.text + "'", t.line, t.col);
            }
        }
        relators.push_back(std::move(cw));
    }

    return Presentation(std::move(gens), std::move(relators));
}

std::vector<TorsionEntry> torsion_catalog(const Presentation& p) {
    std::vector<TorsionEntry> out;
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
        auto dec = primitive_root(p.relators()[i]);
        if (dec.exponent <= 1) continue;
        std::vector<int> orders;
        for (int s = 2; s <= dec.exponent; ++s) {
            if (dec.exponent % s == 0) orders.push_back(s);
        }
        out.push_back({i, dec.root, dec.exponent, std::move(orders)});
    }
    return out;
}

std::vector<Occurrence> cyclic_occurrences(const Word& w, const Presentation& p) {
    if (w.empty()) throw Error("cyclic_occurrences requires a nonempty word");
    if (!w.freely_reduced()) throw Error("cyclic_occurrences requires a freely reduced word");

    std::vector<Occurrence> out;
    for (std::size_t ri = 0; ri < p.relators().size(); ++ri) {
        const auto& r = p.relators()[ri];
        const std::size_t n = r.size();
        for (std::size_t off = 0; off < n; ++off) {
            bool fwd = true;
            for (std::size_t t = 0; t < w.size() && fwd; ++t) {
                if (r.at((off + t) % n) != w.at(t)) fwd = false;
            }
            if (fwd) out.push_back({ri, off, +1});

            bool bwd = true;
            for (std::size_t t = 0; t < w.size() && bwd; ++t) {
                std::size_t idx = (off + n - (t % n)) % n;
                if (r.at(idx).inverse() != w.at(t)) bwd = false;
            }
            if (bwd) out.push_back({ri, off, -1});
        }
    }
    return out;
}

}  // namespace canclab
