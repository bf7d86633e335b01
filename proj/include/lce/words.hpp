#pragma once

#include "lce/elements.hpp"

namespace lce {

/// A declared generating set with fixed symbol names; words are sequences of
/// indices into it. The three standard sets:
///   S' = {a, z, t^+-}        (plus s^+-, ... for F_r bases)
///   S  = {a, az, t^+-, t^+-z} (Z base; tau^-1(T) without the kernel letter)
///   T  = {a, t^+-}           (wreath-product standard set, no z)
struct GenSet {
    BaseGroup base;
    std::vector<std::string> names;
    std::vector<GElement> images;

    int find(const std::string& name) const;
    size_t size() const { return names.size(); }
};

GenSet gen_set_sprime(const BaseGroup& base);
GenSet gen_set_s(const BaseGroup& base);  // Z base only
GenSet gen_set_t(const BaseGroup& base);

using Word = std::vector<int>;

/// Tokenizes against the generating set: whitespace-separated tokens when the
/// text contains spaces, greedy longest-match otherwise.
Word parse_word(const GenSet& gens, const std::string& text);
std::string format_word(const GenSet& gens, const Word& word);

/// Left-to-right product of the generator images; no free reduction first.
GElement evaluate_word(const GenSet& gens, const Word& word, const SymmetricSet& I);

/// Independent evaluation in C2 wr H (used to cross-check tau-consistency).
WreathElement evaluate_word_wreath(const GenSet& gens, const Word& word);

bool is_identity_word(const GenSet& gens, const Word& word, const SymmetricSet& I);

/// Canonical rendering of the word's value (see g_format).
std::string normal_form(const GenSet& gens, const Word& word, const SymmetricSet& I);

/// All words over the set with length <= maxLen, in length-then-index order.
std::vector<Word> all_words(const GenSet& gens, int maxLen);

}  // namespace lce
