#include "lce/conjugacy.hpp"

#include <algorithm>
#include <unordered_set>

namespace lce {

namespace {

bool order_less(const BaseElement& a, const BaseElement& b) {
    return base_compare(a, b) == std::strong_ordering::less;
}

std::int64_t mod_positive(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::vector<std::int64_t> positions(const std::vector<BaseElement>& support) {
    std::vector<std::int64_t> out;
    out.reserve(support.size());
    for (const auto& e : support) out.push_back(e.coords[0]);
    return out;
}

/// Parity of |g^-1 supp ∩ I|.
bool odd_overlap(const BaseElement& g, const std::vector<BaseElement>& supp,
                 const SymmetricSet& I) {
    bool acc = false;
    BaseElement ginv = base_inv(g);
    for (const auto& s : supp)
        if (I.contains(base_mul(ginv, s))) acc = !acc;
    return acc;
}

}  // namespace

std::optional<WreathCertificate> wreath_conjugate_decide_Z(const WreathElement& g,
                                                           const WreathElement& h) {
    if (g.shift.family != Family::Integers || h.shift.family != Family::Integers)
        throw std::invalid_argument("wreath_conjugate_decide_Z works over Z");
    if (!(g.shift == h.shift)) return std::nullopt;
    BaseGroup z = BaseGroup::integers();
    std::int64_t k = g.shift.coords[0];

    auto make_certificate = [&](std::vector<std::int64_t> lampPositions,
                                std::int64_t shift) -> std::optional<WreathCertificate> {
        WreathElement c = w_identity(z);
        std::sort(lampPositions.begin(), lampPositions.end());
        for (auto p : lampPositions) c.support.push_back(z.from_int(p));
        c.shift = z.from_int(shift);
        if (!(w_conjugate(c, g) == h))
            throw std::logic_error("wreath conjugacy certificate failed verification");
        return WreathCertificate{c, true};
    };

    if (k == 0) {
        if (g.support.size() != h.support.size()) return std::nullopt;
        if (g.support.empty()) return make_certificate({}, 0);
        std::int64_t j = h.support.front().coords[0] - g.support.front().coords[0];
        for (size_t i = 0; i < g.support.size(); ++i)
            if (g.support[i].coords[0] + j != h.support[i].coords[0]) return std::nullopt;
        return make_certificate({}, j);
    }

    const std::int64_t m = iabs(k);
    auto parity_vector = [&](const WreathElement& x) {
        std::vector<int> par(size_t(m), 0);
        for (const auto& e : x.support) par[size_t(mod_positive(e.coords[0], m))] ^= 1;
        return par;
    };
    std::vector<int> pu = parity_vector(g), pv = parity_vector(h);
    for (std::int64_t j = 0; j < m; ++j) {
        bool match = true;
        for (std::int64_t r = 0; r < m && match; ++r)
            if (pv[size_t(r)] != pu[size_t(mod_positive(r - j, m))]) match = false;
        if (!match) continue;
        // Solve (1 + t^k) w = h.support + t^j g.support, coset by coset.
        std::vector<std::int64_t> diff;
        for (auto p : positions(g.support)) diff.push_back(p + j);
        for (auto p : positions(h.support)) diff.push_back(p);
        std::sort(diff.begin(), diff.end());
        // remove duplicate pairs (symmetric difference of multisets over F2)
        std::vector<std::int64_t> d2;
        for (size_t i = 0; i < diff.size();) {
            if (i + 1 < diff.size() && diff[i] == diff[i + 1])
                i += 2;
            else
                d2.push_back(diff[i++]);
        }
        std::vector<std::int64_t> lamp;
        for (std::int64_t r = 0; r < m; ++r) {
            std::vector<std::int64_t> coset;
            for (auto p : d2)
                if (mod_positive(p, m) == r) coset.push_back(p);
            for (size_t i = 0; i + 1 < coset.size(); i += 2) {
                std::int64_t lo = coset[i], hi = coset[i + 1];
                if (k > 0)
                    for (std::int64_t x = lo; x < hi; x += m) lamp.push_back(x);
                else
                    for (std::int64_t x = lo + m; x <= hi; x += m) lamp.push_back(x);
            }
        }
        return make_certificate(std::move(lamp), j);
    }
    return std::nullopt;
}

std::optional<BaseElement> find_twist_witness(const NElement& x, const SymmetricSet& I) {
    if (x.support.empty()) return std::nullopt;
    const BaseGroup& H = I.group();

    if (I.kind() == SetKind::Finite) {
        // Candidates g with g^-1 s in I for some s: g in supp * I.
        for (const auto& s : x.support)
            for (const auto& i : I.elements()) {
                BaseElement g = base_mul(s, i);
                if (odd_overlap(g, x.support, I)) return g;
            }
        return std::nullopt;
    }

    if (H.family == Family::Integers &&
        (I.kind() == SetKind::Periodic || I.kind() == SetKind::EventuallyPeriodic)) {
        std::int64_t p = I.period();
        std::int64_t K = I.kind() == SetKind::EventuallyPeriodic ? I.threshold() : 0;
        auto pos = positions(x.support);
        std::int64_t lo = *std::min_element(pos.begin(), pos.end()) - K - 2 * p;
        std::int64_t hi = *std::max_element(pos.begin(), pos.end()) + K + 2 * p;
        BaseGroup z = BaseGroup::integers();
        for (std::int64_t g = lo; g <= hi; ++g)
            if (odd_overlap(z.from_int(g), x.support, I)) return z.from_int(g);
        return std::nullopt;
    }

    if (I.kind() == SetKind::AbPullback) {
        const SymmetricSet& J = I.inner();
        const int rank = H.param;
        BaseGroup lat = BaseGroup::lattice(rank);
        auto word_for = [&](const BaseElement& v) {
            // s^(v1) t^(v2) ... realizes the abelianized vector v.
            std::vector<std::int8_t> w;
            for (int i = 0; i < rank; ++i) {
                std::int64_t c = v.coords[size_t(i)];
                for (std::int64_t n = 0; n < iabs(c); ++n)
                    w.push_back(std::int8_t(c > 0 ? i + 1 : -(i + 1)));
            }
            return H.from_letters(std::move(w));
        };
        if (J.kind() == SetKind::Finite) {
            for (const auto& s : x.support) {
                BaseElement abS = abelianize(s);
                for (const auto& j : J.elements()) {
                    BaseElement v = base_mul(abS, base_inv(j));
                    BaseElement g = word_for(v);
                    if (odd_overlap(g, x.support, I)) return g;
                }
            }
            return std::nullopt;
        }
        if (J.kind() == SetKind::Periodic) {
            // The overlap count depends on the candidate's residues mod p only.
            std::int64_t p = J.period();
            std::vector<std::int64_t> v(size_t(rank), 0);
            while (true) {
                BaseElement g = word_for(lat.from_coords(std::vector<std::int64_t>(v)));
                if (odd_overlap(g, x.support, I)) return g;
                int i = 0;
                while (i < rank && ++v[size_t(i)] == p) v[size_t(i++)] = 0;
                if (i == rank) break;
            }
            return std::nullopt;
        }
    }
    throw std::invalid_argument("no twist-witness strategy for this descriptor class");
}

bool is_conj_z_twist(const GElement& x, const SymmetricSet& I) {
    if (!base_is_identity(x.shift))
        throw std::invalid_argument("is_conj_z_twist needs x in N(H,I)");
    if (!I.structured())
        throw std::invalid_argument("is_conj_z_twist needs a structured descriptor");
    if (x.support.empty()) return false;  // x central
    const BaseGroup& H = I.group();

    if (H.family == Family::Integers) {
        CanonicalZSet c = canonicalize_z(I);
        if (c.globally_periodic()) {
            // periodic scan, k = 0..p-1
            BaseGroup z = BaseGroup::integers();
            for (std::int64_t k = 0; k < c.period; ++k)
                if (odd_overlap(z.from_int(k), x.support, I)) return true;
            return false;
        }
        return true;  // aperiodic: some shift always sees an odd overlap
    }
    if (H.family == Family::Free) {
        return find_twist_witness(g_lamp_part(x), I).has_value();
    }
    throw std::invalid_argument("is_conj_z_twist supports torsion-free H (Z or F_r)");
}

bool h_sim_hz(const GElement& h, const SymmetricSet& I) {
    if (!base_is_identity(h.shift)) return false;  // centralizer of h is cyclic-by-center
    if (h.support.empty()) return false;           // h central
    return is_conj_z_twist(h, I);
}

std::optional<ConjugacyCertificate> conjugate_decide_GI(const GElement& g, const GElement& h,
                                                        const SymmetricSet& I) {
    if (I.group().family != Family::Integers)
        throw std::invalid_argument("conjugate_decide_GI works over the Z base");
    auto wreath = wreath_conjugate_decide_Z(tau(g), tau(h));
    if (!wreath) return std::nullopt;

    GElement c0 = g_identity(I.group());
    c0.support = wreath->conjugator.support;
    c0.shift = wreath->conjugator.shift;

    auto finish = [&](GElement c) -> std::optional<ConjugacyCertificate> {
        if (!(g_conjugate(c, g, I) == h))
            throw std::logic_error("G_I conjugacy certificate failed verification");
        return ConjugacyCertificate{std::move(c), true};
    };

    GElement image = g_conjugate(c0, g, I);
    if (image == h) return finish(std::move(c0));
    // image = h z; conjugate iff h ~ hz, with conjugator the witness lamp.
    if (!h_sim_hz(h, I)) return std::nullopt;
    auto witness = find_twist_witness(g_lamp_part(h), I);
    if (!witness)
        throw std::logic_error("twist decided yes but no witness found (descriptor bug)");
    GElement e = g_lamp(I.group(), *witness);
    return finish(g_mul(e, c0, I));
}

// ---------------------------------------------------------------------------
// C2 wr F_r geometry

std::int64_t wreath_length_Fr(const WreathElement& g) {
    if (g.shift.family != Family::Free)
        throw std::invalid_argument("wreath_length_Fr works over free base groups");
    BaseGroup f{Family::Free, g.shift.param};
    std::vector<BaseElement> pts = g.support;
    pts.push_back(f.identity());
    pts.push_back(g.shift);
    TreeHull hull = steiner_hull(pts);
    return std::int64_t(g.support.size()) + 2 * hull.edge_count -
           tree_distance(f.identity(), g.shift);
}

namespace {

std::vector<WreathElement> conjugacy_moves(const WreathElement& x) {
    std::vector<WreathElement> out;
    BaseGroup f{Family::Free, x.shift.param};
    for (const auto& gen : f.generators()) {
        out.push_back(w_conjugate(w_shift(gen), x));
        out.push_back(w_conjugate(w_shift(base_inv(gen)), x));
    }
    if (!base_is_identity(x.shift)) {
        // lamp transfers (p, h p) that touch an existing lamp
        std::vector<BaseElement> candidates = x.support;
        BaseElement hinv = base_inv(x.shift);
        for (const auto& s : x.support) candidates.push_back(base_mul(hinv, s));
        std::sort(candidates.begin(), candidates.end(), order_less);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& p : candidates)
            out.push_back(w_conjugate(w_lamp(f, p), x));
    }
    return out;
}

}  // namespace

std::int64_t wreath_conj_min_length_Fr(const WreathElement& g) {
    constexpr size_t kPlateauCap = 200000;
    WreathElement cur = g;
    std::int64_t curLen = wreath_length_Fr(cur);
    while (true) {
        std::vector<WreathElement> queue = {cur};
        std::unordered_set<std::string> seen = {w_key(cur)};
        bool improved = false;
        for (size_t head = 0; head < queue.size() && !improved; ++head) {
            for (auto& y : conjugacy_moves(queue[head])) {
                std::int64_t ly = wreath_length_Fr(y);
                if (ly < curLen) {
                    cur = std::move(y);
                    curLen = ly;
                    improved = true;
                    break;
                }
                if (ly == curLen && seen.insert(w_key(y)).second) {
                    if (seen.size() > kPlateauCap)
                        throw limit_error("conjugacy descent plateau exceeds cap");
                    queue.push_back(std::move(y));
                }
            }
        }
        if (!improved) return curLen;
    }
}

namespace {

struct AxisData {
    BaseElement w;                      // h = w c w^-1 reduced, c cyclically reduced
    std::vector<std::int8_t> c;         // letters of c, k >= 1
    std::vector<BaseElement> prefixes;  // P_i = w c_1..c_i, i = 0..k
};

AxisData axis_decomposition(const BaseElement& h) {
    BaseGroup f{Family::Free, h.param};
    std::vector<std::int8_t> w, c = h.letters;
    while (c.size() >= 2 && c.front() == -c.back()) {
        w.push_back(c.front());
        c.erase(c.begin());
        c.pop_back();
    }
    AxisData d;
    d.w = f.from_letters(w);
    d.c = c;
    BaseElement p = d.w;
    d.prefixes.push_back(p);
    for (auto letter : c) {
        p = base_mul(p, f.from_letters({letter}));
        d.prefixes.push_back(p);
    }
    return d;
}

/// Does the reduced word of v avoid starting with either given letter?
bool in_S_i(const BaseElement& v, std::int8_t back, std::int8_t forward) {
    if (v.letters.empty()) return true;
    return v.letters.front() != back && v.letters.front() != forward;
}

}  // namespace

bool is_conjugacy_minimal_Fr(const WreathElement& g) {
    if (g.shift.family != Family::Free)
        throw std::invalid_argument("is_conjugacy_minimal_Fr works over free base groups");
    BaseGroup f{Family::Free, g.shift.param};

    if (base_is_identity(g.shift)) {
        if (g.support.empty()) return true;
        return steiner_hull(g.support).contains(f.identity());
    }

    AxisData ax = axis_decomposition(g.shift);
    const size_t k = ax.c.size();
    auto back_letter = [&](size_t i) { return std::int8_t(-ax.c[i == 0 ? k - 1 : i - 1]); };
    auto forward_letter = [&](size_t i) { return ax.c[i == k ? 0 : i]; };
    // S_i excludes words starting with c_i^-1 (the axis edge we came by) or
    // c_{i+1} (the next axis edge), with c_0 = c_k and c_{k+1} = c_1.
    auto in_Si = [&](size_t i, const BaseElement& v) {
        return in_S_i(v, back_letter(i == 0 ? 0 : i), forward_letter(i));
    };

    // condition (1): every lamp lies in some P_i S_i
    std::vector<std::vector<BaseElement>> translated(k + 1);
    for (size_t i = 0; i <= k; ++i) {
        BaseElement pinv = base_inv(ax.prefixes[i]);
        for (const auto& lamp : g.support) translated[i].push_back(base_mul(pinv, lamp));
    }
    for (size_t li = 0; li < g.support.size(); ++li) {
        bool covered = false;
        for (size_t i = 0; i <= k && !covered; ++i)
            if (in_Si(i, translated[i][li])) covered = true;
        if (!covered) return false;
    }

    // T_i = Conv((P_i^-1 supp ∩ S_i) ∪ {1})
    auto hull_T = [&](size_t i) {
        std::vector<BaseElement> pts;
        for (const auto& v : translated[i])
            if (in_Si(i, v)) pts.push_back(v);
        pts.push_back(f.identity());
        return steiner_hull(pts);
    };
    TreeHull T0 = hull_T(0), Tk = hull_T(k);
    BaseElement winv = base_inv(ax.w);
    TreeHull segment = geodesic_segment(f.identity(), winv);

    // condition (2): T0 ∩ Tk ⊆ [1, w^-1]
    for (const auto& v : T0.vertices)
        if (Tk.contains(v) && !segment.contains(v)) return false;

    // condition (3): w^-1 supp ∩ (wc)^-1 supp ∩ [1, w^-1] = ∅
    for (const auto& v : translated[0])
        for (const auto& u : translated[k])
            if (v == u && segment.contains(v)) return false;

    // condition (4): w = 1 or w^-1 in T0 ∪ Tk
    if (!base_is_identity(ax.w) && !T0.contains(winv) && !Tk.contains(winv)) return false;
    return true;
}

}  // namespace lce
