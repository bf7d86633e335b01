#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lce/growth.hpp"
#include "lce/thurston.hpp"
#include "lce/words.hpp"

using namespace lce;

namespace {

BaseGroup Z = BaseGroup::integers();

SymmetricSet finiteZ(std::initializer_list<std::int64_t> vals) {
    std::vector<BaseElement> elems;
    for (auto v : vals) elems.push_back(Z.from_int(v));
    return SymmetricSet::finite(Z, std::move(elems));
}

}  // namespace

TEST_CASE("tokenization") {
    GenSet sp = gen_set_sprime(Z);
    CHECK(parse_word(sp, "a t a T") == Word{0, 2, 0, 3});
    CHECK(parse_word(sp, "ataT") == Word{0, 2, 0, 3});
    CHECK(parse_word(sp, "az") == Word{0, 1});  // a then z in S'
    CHECK(parse_word(sp, "e").empty());
    CHECK_THROWS(parse_word(sp, "a x"));

    GenSet s = gen_set_s(Z);
    CHECK(s.names == std::vector<std::string>{"a", "az", "t", "tz", "T", "Tz"});
    CHECK(parse_word(s, "az") == Word{1});  // single token in S
    CHECK(parse_word(s, "a tz") == Word{0, 3});
    CHECK_THROWS(parse_word(s, "z"));  // z alone is not in S

    BaseGroup f2 = BaseGroup::free_group(2);
    GenSet t = gen_set_t(f2);
    CHECK(t.names == std::vector<std::string>{"a", "s", "S", "t", "T"});
}

TEST_CASE("evaluation basics") {
    SymmetricSet I = finiteZ({1, -1});
    GenSet sp = gen_set_sprime(Z);
    CHECK(g_is_identity(evaluate_word(sp, {}, I)));
    CHECK(is_identity_word(sp, parse_word(sp, "z z"), I));
    CHECK(is_identity_word(sp, parse_word(sp, "a a"), I));
    // "a t a T" squared = z when 1 in I
    Word w = parse_word(sp, "a t a T");
    GElement v = evaluate_word(sp, w, I);
    GElement sq = g_mul(v, v, I);
    CHECK(sq == g_center(Z));
    CHECK_FALSE(is_identity_word(sp, parse_word(sp, "a t a T a t a T"), I));
}

TEST_CASE("knapsack identity: a t^n a t^-n a t^n a t^-n = 1 iff n not in I") {
    SymmetricSet I = SymmetricSet::periodic(3, {1, 2});
    GenSet sp = gen_set_sprime(Z);
    for (int n = 1; n <= 12; ++n) {
        Word w;
        for (int rep = 0; rep < 2; ++rep) {
            w.push_back(0);
            w.insert(w.end(), size_t(n), 2);
            w.push_back(0);
            w.insert(w.end(), size_t(n), 3);
        }
        CHECK(is_identity_word(sp, w, I) == !I.contains(Z.from_int(n)));
    }
}

TEST_CASE("normal form golden strings") {
    SymmetricSet I = finiteZ({1, -1});
    GenSet sp = gen_set_sprime(Z);
    CHECK(normal_form(sp, parse_word(sp, "z a a z"), I) == "e");
    CHECK(normal_form(sp, parse_word(sp, "t a T"), I) == "a(1)");
    CHECK(normal_form(sp, parse_word(sp, "a z t"), I) == "a(0).z.t(1)");
}

TEST_CASE("normal form separates exactly the unequal words (S'^{<=4})") {
    SymmetricSet I = finiteZ({1, -1});
    GenSet sp = gen_set_sprime(Z);
    auto words = all_words(sp, 4);
    for (size_t i = 0; i < words.size(); i += 7) {
        GElement vi = evaluate_word(sp, words[i], I);
        std::string ni = normal_form(sp, words[i], I);
        CHECK(is_identity_word(sp, words[i], I) == (ni == "e"));
        for (size_t j = i; j < words.size(); j += 23) {
            GElement vj = evaluate_word(sp, words[j], I);
            CHECK((vi == vj) == (ni == normal_form(sp, words[j], I)));
        }
    }
}

TEST_CASE("is_identity iff trivial normal form, every word of S'^{<=6}") {
    SymmetricSet I = finiteZ({1, -1});
    GenSet sp = gen_set_sprime(Z);
    for (const auto& w : all_words(sp, 6))
        CHECK(is_identity_word(sp, w, I) == (normal_form(sp, w, I) == "e"));
}

TEST_CASE("canonical rendering round-trips") {
    for (auto [base, desc] :
         std::initializer_list<std::pair<BaseGroup, const char*>>{
             {Z, "finite:{1,-1}"},
             {BaseGroup::free_group(2), "abpull:finite:{(1,0),(-1,0)}"}}) {
        SymmetricSet I = parse_symmetric_set(base, desc);
        GenSet sp = gen_set_sprime(base);
        for (const auto& w : all_words(sp, 3)) {
            GElement e = evaluate_word(sp, w, I);
            std::string rendered = g_format(e, base);
            CHECK(g_parse_canonical(rendered, base, I) == e);
        }
    }
}

TEST_CASE("tau consistency via the independent wreath evaluation") {
    SymmetricSet I = finiteZ({1, -1});
    GenSet sp = gen_set_sprime(Z);
    for (const auto& w : all_words(sp, 4)) {
        WreathElement wr = evaluate_word_wreath(sp, w);
        CHECK(tau(evaluate_word(sp, w, I)) == wr);
        if (is_identity_word(sp, w, I)) CHECK(w_is_identity(wr));
    }
}

TEST_CASE("Thurston demo: agreement with is_identity on short pairs") {
    SymmetricSet I = finiteZ({1, -1});
    GenSet sp = gen_set_sprime(Z);
    auto beta = beta_oracle_sprime(I);

    Word empty;
    CHECK(wp_from_growth_demo(sp, parse_word(sp, "aa"), empty, I, beta).equal);
    CHECK(wp_from_growth_demo(sp, parse_word(sp, "at"), parse_word(sp, "at"), I, beta).equal);
    CHECK_FALSE(wp_from_growth_demo(sp, parse_word(sp, "at"), parse_word(sp, "ta"), I, beta).equal);

    // full agreement on pairs of length <= 2 (length <= 3 runs in acceptance)
    auto words = all_words(sp, 2);
    for (const auto& u : words)
        for (const auto& v : words) {
            bool expected =
                evaluate_word(sp, u, I) == evaluate_word(sp, v, I);
            CHECK(wp_from_growth_demo(sp, u, v, I, beta).equal == expected);
        }
}
