#include "lce/structure.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "lce/morphisms.hpp"

namespace lce {

std::int32_t FiniteQuotientWitness::index_of(const GElement& g) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == g) return std::int32_t(i);
    throw std::invalid_argument("element not in the finite quotient");
}

FiniteQuotientWitness build_finite_quotient(std::int64_t n, const SymmetricSet& J) {
    if (n < 1 || n > 6) throw limit_error("finite quotient table supported for n <= 6");
    BaseGroup c = BaseGroup::cyclic(int(n));
    if (!(J.group() == c)) throw std::invalid_argument("image set must live over Z/n");

    FiniteQuotientWitness w{n, J, {}, {}};
    // all (subset of Z/n, bit, shift) triples
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        for (int bit = 0; bit < 2; ++bit)
            for (std::int64_t k = 0; k < n; ++k) {
                GElement e = g_identity(c);
                for (int i = 0; i < n; ++i)
                    if (mask & (1u << i)) e.support.push_back(c.from_int(i));
                e.center = bit != 0;
                e.shift = c.from_int(k);
                w.elements.push_back(std::move(e));
            }

    std::unordered_map<std::string, std::int32_t> index;
    for (size_t i = 0; i < w.elements.size(); ++i) index[g_key(w.elements[i])] = std::int32_t(i);
    w.table.assign(w.elements.size(), std::vector<std::int32_t>(w.elements.size(), -1));
    for (size_t i = 0; i < w.elements.size(); ++i)
        for (size_t j = 0; j < w.elements.size(); ++j)
            w.table[i][j] = index.at(g_key(g_mul(w.elements[i], w.elements[j], J)));
    return w;
}

ResidualFiniteness is_residually_finite_GI(const SymmetricSet& I, std::int64_t witnessCap) {
    if (I.group().family != Family::Integers)
        throw std::invalid_argument("is_residually_finite_GI works over the Z base");
    CanonicalZSet c = canonicalize_z(I);
    if (!c.globally_periodic()) return {false, std::nullopt, 0};

    ResidualFiniteness out;
    out.residually_finite = true;
    out.witness_modulus = c.period;
    if (c.period <= witnessCap) {
        // J = residues of I inside Z/p
        SymmetricSet periodicForm =
            c.residues.empty() ? SymmetricSet::empty_set(BaseGroup::integers())
                               : SymmetricSet::periodic(c.period, c.residues);
        out.witness = build_finite_quotient(c.period, quotient_set(c.period, periodicForm));
    }
    return out;
}

bool iso_GI(const SymmetricSet& I, const SymmetricSet& J) {
    return canonicalize_z(I) == canonicalize_z(J);
}

PeriodicityClass eventual_periodicity(const SymmetricSet& I) {
    CanonicalZSet c = canonicalize_z(I);
    return {c.globally_periodic(), c.period, c.threshold};
}

namespace {

std::set<std::int32_t> close_subgroup(const FiniteQuotientWitness& w,
                                      std::set<std::int32_t> gens) {
    std::set<std::int32_t> sub = {0};  // identity index: elements[0] is (∅,0,0)
    // elements[0] is identity because mask=0,bit=0,k=0 comes first
    std::vector<std::int32_t> frontier(gens.begin(), gens.end());
    sub.insert(gens.begin(), gens.end());
    while (!frontier.empty()) {
        std::vector<std::int32_t> next;
        for (auto x : frontier)
            for (auto y : sub) {
                for (auto p : {w.table[size_t(x)][size_t(y)], w.table[size_t(y)][size_t(x)]})
                    if (sub.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return sub;
}

}  // namespace

std::vector<QuotientExperimentRow> quotient_experiment(const FiniteQuotientWitness& w) {
    const std::int32_t n = std::int32_t(w.elements.size());
    std::int32_t zIndex = w.index_of(g_center(BaseGroup::cyclic(int(w.modulus))));

    // enumerate all subgroups by incremental closure
    std::set<std::set<std::int32_t>> subgroups = {close_subgroup(w, {})};
    std::vector<std::set<std::int32_t>> frontier(subgroups.begin(), subgroups.end());
    while (!frontier.empty()) {
        std::vector<std::set<std::int32_t>> next;
        for (const auto& sub : frontier)
            for (std::int32_t e = 0; e < n; ++e) {
                if (sub.count(e)) continue;
                std::set<std::int32_t> gens = sub;
                gens.insert(e);
                auto closed = close_subgroup(w, gens);
                if (subgroups.insert(closed).second) next.push_back(std::move(closed));
            }
        frontier = std::move(next);
    }

    std::vector<QuotientExperimentRow> rows;
    for (const auto& sub : subgroups) {
        if (sub.count(zIndex)) continue;
        // normality: closed under conjugation
        bool normal = true;
        for (std::int32_t g = 0; g < n && normal; ++g) {
            // find g^{-1}
            std::int32_t ginv = -1;
            for (std::int32_t h = 0; h < n; ++h)
                if (w.table[size_t(g)][size_t(h)] == 0) ginv = h;
            for (auto s : sub) {
                std::int32_t c = w.table[size_t(w.table[size_t(g)][size_t(s)])][size_t(ginv)];
                if (!sub.count(c)) {
                    normal = false;
                    break;
                }
            }
        }
        if (normal) rows.push_back({sub.size(), w.elements.size() / sub.size()});
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.quotient_order < b.quotient_order;
    });
    return rows;
}

}  // namespace lce
