#include "lce/words.hpp"

#include <algorithm>

namespace lce {

namespace {

std::vector<std::pair<std::string, BaseElement>> letter_shifts(const BaseGroup& base) {
    std::vector<std::pair<std::string, BaseElement>> out;
    switch (base.family) {
        case Family::Integers:
        case Family::Cyclic: {
            out.emplace_back("t", base.from_int(1));
            out.emplace_back("T", base.from_int(-1));
            break;
        }
        case Family::Free: {
            const char names[4] = {'s', 't', 'u', 'v'};
            for (int i = 1; i <= base.param; ++i) {
                out.emplace_back(std::string(1, names[i - 1]),
                                 base.from_letters({std::int8_t(i)}));
                out.emplace_back(std::string(1, char(names[i - 1] - 'a' + 'A')),
                                 base.from_letters({std::int8_t(-i)}));
            }
            break;
        }
        case Family::Lattice:
            throw std::invalid_argument("no letter generating set for Z^d words");
    }
    return out;
}

}  // namespace

int GenSet::find(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return int(i);
    return -1;
}

GenSet gen_set_sprime(const BaseGroup& base) {
    GenSet g{base, {}, {}};
    g.names.push_back("a");
    g.images.push_back(g_lamp(base, base.identity()));
    g.names.push_back("z");
    g.images.push_back(g_center(base));
    for (auto& [name, shift] : letter_shifts(base)) {
        g.names.push_back(name);
        g.images.push_back(g_shift(shift));
    }
    return g;
}

GenSet gen_set_s(const BaseGroup& base) {
    if (base.family != Family::Integers)
        throw std::invalid_argument("the S generating set is defined over the Z base");
    GenSet g{base, {}, {}};
    auto push_pair = [&](const std::string& name, const GElement& e) {
        g.names.push_back(name);
        g.images.push_back(e);
        GElement ez = e;
        ez.center = !ez.center;  // e . z (z central, either side)
        g.names.push_back(name + "z");
        g.images.push_back(ez);
    };
    push_pair("a", g_lamp(base, base.identity()));
    for (auto& [name, shift] : letter_shifts(base)) push_pair(name, g_shift(shift));
    return g;
}

GenSet gen_set_t(const BaseGroup& base) {
    GenSet g{base, {}, {}};
    g.names.push_back("a");
    g.images.push_back(g_lamp(base, base.identity()));
    for (auto& [name, shift] : letter_shifts(base)) {
        g.names.push_back(name);
        g.images.push_back(g_shift(shift));
    }
    return g;
}

Word parse_word(const GenSet& gens, const std::string& text) {
    Word w;
    if (text == "e") return w;
    bool spaced = text.find(' ') != std::string::npos;
    if (spaced) {
        std::string tok;
        for (size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == ' ') {
                if (!tok.empty()) {
                    if (tok == "e") { tok.clear(); continue; }
                    int idx = gens.find(tok);
                    if (idx < 0) throw std::invalid_argument("unknown generator token '" + tok +
                                                             "' at position " + std::to_string(i));
                    w.push_back(idx);
                    tok.clear();
                }
            } else {
                tok.push_back(text[i]);
            }
        }
        return w;
    }
    // Greedy longest-match tokenization.
    size_t pos = 0;
    while (pos < text.size()) {
        int best = -1;
        size_t bestLen = 0;
        for (size_t i = 0; i < gens.names.size(); ++i) {
            const auto& n = gens.names[i];
            if (n.size() > bestLen && text.compare(pos, n.size(), n) == 0) {
                best = int(i);
                bestLen = n.size();
            }
        }
        if (best < 0)
            throw std::invalid_argument("cannot tokenize word at position " + std::to_string(pos) +
                                        ": " + text.substr(pos));
        w.push_back(best);
        pos += bestLen;
    }
    return w;
}

std::string format_word(const GenSet& gens, const Word& word) {
    if (word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += " ";
        s += gens.names[size_t(word[i])];
    }
    return s;
}

GElement evaluate_word(const GenSet& gens, const Word& word, const SymmetricSet& I) {
    GElement acc = g_identity(gens.base);
    for (int idx : word) {
        if (idx < 0 || size_t(idx) >= gens.images.size())
            throw std::invalid_argument("generator index out of range");
        acc = g_mul(acc, gens.images[size_t(idx)], I);
    }
    return acc;
}

WreathElement evaluate_word_wreath(const GenSet& gens, const Word& word) {
    WreathElement acc = w_identity(gens.base);
    for (int idx : word) acc = w_mul(acc, tau(gens.images[size_t(idx)]));
    return acc;
}

bool is_identity_word(const GenSet& gens, const Word& word, const SymmetricSet& I) {
    return g_is_identity(evaluate_word(gens, word, I));
}

std::string normal_form(const GenSet& gens, const Word& word, const SymmetricSet& I) {
    return g_format(evaluate_word(gens, word, I), gens.base);
}

std::vector<Word> all_words(const GenSet& gens, int maxLen) {
    std::vector<Word> out = {{}};
    std::vector<Word> layer = {{}};
    for (int len = 1; len <= maxLen; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int i = 0; i < int(gens.size()); ++i) {
                Word v = w;
                v.push_back(i);
                next.push_back(std::move(v));
            }
        layer = next;
        out.insert(out.end(), next.begin(), next.end());
    }
    return out;
}

}  // namespace lce
