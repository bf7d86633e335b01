#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lce/morphisms.hpp"
#include "lce/structure.hpp"

using namespace lce;

namespace {

BaseGroup Z = BaseGroup::integers();

SymmetricSet finiteZ(std::initializer_list<std::int64_t> vals) {
    std::vector<BaseElement> elems;
    for (auto v : vals) elems.push_back(Z.from_int(v));
    return SymmetricSet::finite(Z, std::move(elems));
}

}  // namespace

TEST_CASE("canonicalization and eventual periodicity") {
    PeriodicityClass e = eventual_periodicity(SymmetricSet::empty_set(Z));
    CHECK(e.periodic);
    CHECK(e.period == 1);

    PeriodicityClass p = eventual_periodicity(SymmetricSet::periodic(4, {1, 3}));
    CHECK(p.periodic);
    CHECK(p.period == 2);  // minimality: odd numbers

    PeriodicityClass f = eventual_periodicity(finiteZ({5, -5}));
    CHECK_FALSE(f.periodic);
    CHECK(f.period == 1);
    CHECK(f.threshold == 5);

    // an eventually periodic descriptor that is secretly globally periodic
    SymmetricSet secretly =
        SymmetricSet::eventually_periodic(3, {1, -1, 3, -3}, 2, {1});
    PeriodicityClass s = eventual_periodicity(secretly);
    CHECK(s.periodic);
    CHECK(s.period == 2);

    // genuinely aperiodic eventually periodic descriptor
    SymmetricSet ev = SymmetricSet::eventually_periodic(2, {2, -2}, 2, {1});
    PeriodicityClass v = eventual_periodicity(ev);
    CHECK_FALSE(v.periodic);
    CHECK(v.period == 2);
    CHECK(v.threshold == 2);
}

TEST_CASE("iso_GI") {
    CHECK(iso_GI(finiteZ({1, -1}), finiteZ({1, -1})));
    CHECK(iso_GI(SymmetricSet::periodic(2, {1}), SymmetricSet::periodic(4, {1, 3})));
    CHECK_FALSE(iso_GI(finiteZ({1, -1}), finiteZ({2, -2})));
    CHECK_FALSE(iso_GI(finiteZ({1, -1}), SymmetricSet::periodic(2, {1})));
    // eventually periodic window equal to a finite set
    SymmetricSet asFinite = SymmetricSet::eventually_periodic(3, {2, -2}, 1, {});
    CHECK(iso_GI(asFinite, finiteZ({2, -2})));
}

TEST_CASE("iso_GI is an equivalence on a descriptor pool") {
    std::vector<SymmetricSet> pool = {
        finiteZ({1, -1}),
        finiteZ({2, -2}),
        finiteZ({1, -1, 2, -2}),
        SymmetricSet::periodic(2, {1}),
        SymmetricSet::periodic(4, {1, 3}),
        SymmetricSet::periodic(3, {1, 2}),
        SymmetricSet::periodic(6, {1, 2, 4, 5}),
        SymmetricSet::empty_set(Z),
        SymmetricSet::eventually_periodic(2, {1, -1}, 1, {}),
        SymmetricSet::eventually_periodic(4, {1, -1, 3, -3}, 2, {1}),
        SymmetricSet::eventually_periodic(1, {}, 3, {1, 2}),
    };
    for (size_t i = 0; i < pool.size(); ++i) {
        CHECK(iso_GI(pool[i], pool[i]));
        for (size_t j = 0; j < pool.size(); ++j) {
            CHECK(iso_GI(pool[i], pool[j]) == iso_GI(pool[j], pool[i]));
            for (size_t k = 0; k < pool.size(); ++k)
                if (iso_GI(pool[i], pool[j]) && iso_GI(pool[j], pool[k]))
                    CHECK(iso_GI(pool[i], pool[k]));
        }
    }
    // semantic ground truth: equality as subsets of a window
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = 0; j < pool.size(); ++j) {
            bool sameWindow = true;
            for (std::int64_t v = -30; v <= 30; ++v)
                if (pool[i].contains(Z.from_int(v)) != pool[j].contains(Z.from_int(v)))
                    sameWindow = false;
            // window size 30 covers all pool descriptors' data
            CHECK(iso_GI(pool[i], pool[j]) == sameWindow);
        }
}

TEST_CASE("residual finiteness") {
    auto rfEmpty = is_residually_finite_GI(SymmetricSet::empty_set(Z));
    CHECK(rfEmpty.residually_finite);
    CHECK(rfEmpty.witness_modulus == 1);
    REQUIRE(rfEmpty.witness.has_value());
    CHECK(rfEmpty.witness->elements.size() == 4);  // 2^{1+1} * 1

    auto rfP = is_residually_finite_GI(SymmetricSet::periodic(2, {1}));
    CHECK(rfP.residually_finite);
    REQUIRE(rfP.witness.has_value());
    CHECK(rfP.witness->elements.size() == 16);  // 2^3 * 2
    // z is not the identity in the witness
    BaseGroup c2 = BaseGroup::cyclic(2);
    CHECK(rfP.witness->index_of(g_center(c2)) != rfP.witness->index_of(g_identity(c2)));

    CHECK_FALSE(is_residually_finite_GI(finiteZ({1, -1})).residually_finite);
    CHECK_FALSE(
        is_residually_finite_GI(SymmetricSet::eventually_periodic(2, {2, -2}, 2, {1}))
            .residually_finite);

    // consistency with the periodicity classification
    for (SymmetricSet I : {SymmetricSet::periodic(3, {1, 2}), finiteZ({3, -3}),
                           SymmetricSet::empty_set(Z)})
        CHECK(is_residually_finite_GI(I).residually_finite == eventual_periodicity(I).periodic);
}

TEST_CASE("witness quotients: order, relations, surviving elements") {
    for (std::int64_t n : {2, 3, 4}) {
        std::vector<std::int64_t> res;
        for (std::int64_t r = 1; r < n; ++r) res.push_back(r);
        SymmetricSet I = SymmetricSet::periodic(n, std::move(res));
        auto rf = is_residually_finite_GI(I);
        REQUIRE(rf.witness.has_value());
        const FiniteQuotientWitness& w = *rf.witness;
        CHECK(std::int64_t(w.elements.size()) == (std::int64_t(1) << (n + 1)) * n);

        BaseGroup c = BaseGroup::cyclic(int(n));
        const SymmetricSet& J = w.imageSet;
        // defining relations inside the finite group
        GElement a = g_lamp(c, c.identity());
        GElement z = g_center(c);
        GElement t = g_shift(c.from_int(1));
        CHECK(g_is_identity(g_mul(a, a, J)));
        CHECK(g_is_identity(g_mul(z, z, J)));
        for (std::int64_t k = 0; k < n; ++k) {
            GElement h = g_shift(c.from_int(k));
            GElement conj = g_conjugate(h, a, J);
            GElement comm = g_mul(g_mul(a, conj, J), g_mul(g_inv(a, J), g_inv(conj, J), J), J);
            if (k == 0)
                CHECK(g_is_identity(comm));
            else
                CHECK(comm == (J.contains(c.from_int(k)) ? z : g_identity(c)));
        }
        (void)t;

        // the composite G_I -> G(Z/n, J): z survives, and elements with
        // pi not divisible by n survive
        CHECK_FALSE(g_is_identity(induced_quotient(n, I, g_center(BaseGroup::integers()))));
        BaseGroup Zb = BaseGroup::integers();
        for (std::int64_t k = 1; k < n; ++k)
            CHECK_FALSE(g_is_identity(induced_quotient(n, I, g_shift(Zb.from_int(k)))));
    }
}

TEST_CASE("quotient experiment lists normal subgroups avoiding z") {
    SymmetricSet I = SymmetricSet::periodic(2, {1});
    auto rf = is_residually_finite_GI(I);
    REQUIRE(rf.witness.has_value());
    auto rows = quotient_experiment(*rf.witness);
    CHECK_FALSE(rows.empty());
    // the trivial subgroup is always there: quotient order = |G|
    bool sawTrivial = false;
    for (const auto& r : rows)
        if (r.subgroup_order == 1 && r.quotient_order == rf.witness->elements.size())
            sawTrivial = true;
    CHECK(sawTrivial);
    // every row divides the group order
    for (const auto& r : rows)
        CHECK(rf.witness->elements.size() % r.subgroup_order == 0);
}
