#include "lce/membership.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace lce {

namespace {

std::int64_t mod_positive(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

LaurentF2 lamp_poly(const WreathElement& x) {
    std::vector<std::int64_t> exps;
    for (const auto& e : x.support) exps.push_back(e.coords[0]);
    return LaurentF2::from_exponents(exps);
}

GenWord repeat_word(const GenWord& w, std::int64_t times) {
    GenWord out;
    if (times >= 0) {
        for (std::int64_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    } else {
        GenWord inv;
        for (auto it = w.rbegin(); it != w.rend(); ++it) inv.emplace_back(it->first, -it->second);
        for (std::int64_t i = 0; i < -times; ++i) out.insert(out.end(), inv.begin(), inv.end());
    }
    return out;
}

void append_word(GenWord& dst, const GenWord& src) { dst.insert(dst.end(), src.begin(), src.end()); }

}  // namespace

WreathElement evaluate_gen_word(const std::vector<WreathElement>& gens, const GenWord& word) {
    if (gens.empty()) throw std::invalid_argument("no generators");
    BaseGroup base{gens.front().shift.family, gens.front().shift.param};
    WreathElement acc = w_identity(base);
    for (auto [idx, exp] : word) {
        const WreathElement& g = gens[size_t(idx)];
        acc = w_mul(acc, exp > 0 ? g : w_inv(g));
    }
    return acc;
}

GElement evaluate_gen_word_G(const std::vector<GElement>& gens, const GenWord& word,
                             const SymmetricSet& I) {
    GElement acc = g_identity(I.group());
    for (auto [idx, exp] : word) {
        const GElement& g = gens[size_t(idx)];
        acc = g_mul(acc, exp > 0 ? g : g_inv(g, I), I);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Module engine over F2[t^{+-d}]

void WreathSubgroupData::strip_units(Row& row) const {
    // divide the whole row by the largest power of x common to its components
    std::int64_t v = 0;
    bool any = false;
    for (const auto& c : row.comps)
        if (!c.is_zero()) {
            v = any ? std::min(v, c.low()) : c.low();
            any = true;
        }
    if (!any || v == 0) return;
    for (auto& c : row.comps) c = c.shifted(-v);
    for (auto& e : row.expr) e = e.shifted(-v);
}

void WreathSubgroupData::insert_row(Row row) {
    strip_units(row);
    for (size_t col = 0; col < row.comps.size(); ++col) {
        if (row.comps[col].is_zero()) continue;
        // find or create the pivot row for this column
        Row* pivot = nullptr;
        for (auto& r : rows_) {
            size_t pcol = 0;
            while (pcol < r.comps.size() && r.comps[pcol].is_zero()) ++pcol;
            if (pcol == col) {
                pivot = &r;
                break;
            }
        }
        if (!pivot) {
            rows_.push_back(std::move(row));
            std::sort(rows_.begin(), rows_.end(), [](const Row& a, const Row& b) {
                size_t ca = 0, cb = 0;
                while (ca < a.comps.size() && a.comps[ca].is_zero()) ++ca;
                while (cb < b.comps.size() && b.comps[cb].is_zero()) ++cb;
                return ca < cb;
            });
            return;
        }
        // Euclid step on the pivot column; keep the smaller-degree poly as pivot
        while (!row.comps[col].is_zero()) {
            if (pivot->comps[col].high() - pivot->comps[col].low() >
                row.comps[col].high() - row.comps[col].low())
                std::swap(*pivot, row);
            // align valuations, then subtract quotient * pivot
            strip_units(*pivot);
            strip_units(row);
            LaurentDivMod qr = divmod_poly(row.comps[col].shifted(-row.comps[col].low()),
                                           pivot->comps[col].shifted(-pivot->comps[col].low()));
            LaurentF2 mult = qr.quotient.shifted(row.comps[col].low() - pivot->comps[col].low());
            for (size_t i = 0; i < row.comps.size(); ++i)
                row.comps[i].add_in(mult.times(pivot->comps[i]));
            for (size_t i = 0; i < row.expr.size(); ++i)
                row.expr[i].add_in(mult.times(pivot->expr[i]));
            strip_units(row);
        }
    }
}

std::optional<std::vector<LaurentF2>> WreathSubgroupData::reduce(
    std::vector<LaurentF2> comps) const {
    const size_t width = comps.empty() ? 0 : comps.size();
    std::vector<LaurentF2> expr(moduleGens_.size());
    for (size_t col = 0; col < width; ++col) {
        if (comps[col].is_zero()) continue;
        const Row* pivot = nullptr;
        for (const auto& r : rows_) {
            size_t pcol = 0;
            while (pcol < r.comps.size() && r.comps[pcol].is_zero()) ++pcol;
            if (pcol == col) {
                pivot = &r;
                break;
            }
        }
        if (!pivot) return std::nullopt;
        // strip target valuation in this column relative to the pivot's
        LaurentF2 t = comps[col].shifted(-comps[col].low());
        LaurentF2 p = pivot->comps[col].shifted(-pivot->comps[col].low());
        LaurentDivMod qr = divmod_poly(t, p);
        if (!qr.remainder.is_zero()) return std::nullopt;  // not divisible -> outside
        LaurentF2 mult = qr.quotient.shifted(comps[col].low() - pivot->comps[col].low());
        for (size_t i = 0; i < comps.size(); ++i) comps[i].add_in(mult.times(pivot->comps[i]));
        for (size_t i = 0; i < expr.size(); ++i) expr[i].add_in(mult.times(pivot->expr[i]));
    }
    for (const auto& c : comps)
        if (!c.is_zero()) return std::nullopt;
    return expr;
}

WreathSubgroupData::WreathSubgroupData(std::vector<WreathElement> generators)
    : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("subgroup needs at least one generator");
    for (const auto& g : gens_)
        if (g.shift.family != Family::Integers)
            throw std::invalid_argument("wreath subgroup engine works over Z");

    std::vector<std::int64_t> ks;
    for (const auto& g : gens_) ks.push_back(g.shift.coords[0]);
    d_ = 0;
    for (auto k : ks) d_ = std::gcd(d_, iabs(k));

    if (d_ > 0) {
        // extended gcd combination across generators
        std::int64_t g = 0;
        GenWord word;
        for (size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] == 0) continue;
            if (g == 0) {
                g = iabs(ks[i]);
                word = GenWord{{int(i), ks[i] > 0 ? 1 : -1}};
                continue;
            }
            // g_new = gcd(g, |k_i|) = a*g + b*|k_i| via iterative Euclid
            std::int64_t a0 = g, b0 = iabs(ks[i]);
            std::int64_t x0 = 1, x1 = 0, y0 = 0, y1 = 1;
            while (b0 != 0) {
                std::int64_t q = a0 / b0;
                std::tie(a0, b0) = std::make_pair(b0, a0 - q * b0);
                std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
                std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
            }
            GenWord next = repeat_word(word, x0);
            GenWord gi{{int(i), ks[i] > 0 ? 1 : -1}};
            append_word(next, repeat_word(gi, y0));
            word = std::move(next);
            g = a0;
        }
        h0_ = std::move(word);
        WreathElement h0 = evaluate_gen_word(gens_, h0_);
        if (h0.shift.coords[0] != d_) throw std::logic_error("gcd word has the wrong projection");
    }

    for (size_t i = 0; i < gens_.size(); ++i) {
        GenWord gw{{int(i), 1}};
        if (d_ > 0) append_word(gw, repeat_word(h0_, -ks[i] / d_));
        gammaWords_.push_back(gw);
        WreathElement gamma = evaluate_gen_word(gens_, gw);
        if (!base_is_identity(gamma.shift)) throw std::logic_error("gamma is not pi-trivial");
        moduleGens_.push_back(lamp_poly(gamma));
    }

    const size_t width = d_ > 0 ? size_t(d_) : 1;
    for (size_t i = 0; i < moduleGens_.size(); ++i) {
        Row row;
        row.comps.assign(width, {});
        row.expr.assign(moduleGens_.size(), {});
        row.expr[i] = LaurentF2::monomial(0);
        for (auto e : moduleGens_[i].exponents()) {
            if (d_ > 0)
                row.comps[size_t(mod_positive(e, d_))].add_in(LaurentF2::monomial(
                    (e - mod_positive(e, d_)) / d_));
            else
                row.comps[0].add_in(LaurentF2::monomial(e));
        }
        // d = 0 has no shift action: the span is plain F2 linear algebra and
        // the PID machinery must not be used (it would multiply by t^k).
        if (d_ > 0) insert_row(std::move(row));
    }
}

std::optional<GenWord> WreathSubgroupData::membership(const WreathElement& target) const {
    std::int64_t m = target.shift.coords[0];
    if (d_ == 0 && m != 0) return std::nullopt;
    if (d_ > 0 && m % d_ != 0) return std::nullopt;

    WreathElement residual = target;
    GenWord tail;
    if (d_ > 0) {
        tail = repeat_word(h0_, m / d_);
        WreathElement h0m = evaluate_gen_word(gens_, tail);
        residual = w_mul(target, w_inv(h0m));
    }
    if (!base_is_identity(residual.shift)) return std::nullopt;
    LaurentF2 poly = lamp_poly(residual);

    std::optional<std::vector<LaurentF2>> expr;
    if (d_ == 0) {
        // gaussian reduction without shifts, expression-tracked
        struct F2Row {
            LaurentF2 poly;
            std::vector<LaurentF2> expr;
        };
        std::vector<F2Row> rows;
        for (size_t i = 0; i < moduleGens_.size(); ++i) {
            F2Row r{moduleGens_[i], std::vector<LaurentF2>(moduleGens_.size())};
            r.expr[i] = LaurentF2::monomial(0);
            for (const auto& b : rows) {
                if (!r.poly.is_zero() && !b.poly.is_zero() && r.poly.high() == b.poly.high()) {
                    r.poly.add_in(b.poly);
                    for (size_t j = 0; j < r.expr.size(); ++j) r.expr[j].add_in(b.expr[j]);
                }
            }
            // keep reducing until leading exponents are distinct
            bool hit = true;
            while (!r.poly.is_zero() && hit) {
                hit = false;
                for (const auto& b : rows)
                    if (!b.poly.is_zero() && b.poly.high() == r.poly.high()) {
                        r.poly.add_in(b.poly);
                        for (size_t j = 0; j < r.expr.size(); ++j) r.expr[j].add_in(b.expr[j]);
                        hit = true;
                    }
            }
            if (!r.poly.is_zero()) rows.push_back(std::move(r));
        }
        std::vector<LaurentF2> ex(moduleGens_.size());
        LaurentF2 t = poly;
        bool progress = true;
        while (!t.is_zero() && progress) {
            progress = false;
            for (const auto& b : rows)
                if (!b.poly.is_zero() && b.poly.high() == t.high()) {
                    t.add_in(b.poly);
                    for (size_t j = 0; j < ex.size(); ++j) ex[j].add_in(b.expr[j]);
                    progress = true;
                    break;
                }
        }
        if (!t.is_zero()) return std::nullopt;
        expr = std::move(ex);
    } else {
        auto comps = std::vector<LaurentF2>(size_t(d_));
        for (auto e : poly.exponents())
            comps[size_t(mod_positive(e, d_))].add_in(
                LaurentF2::monomial((e - mod_positive(e, d_)) / d_));
        expr = reduce(std::move(comps));
        if (!expr) return std::nullopt;
    }

    // assemble the word: for each generator i and each monomial x^a of the
    // coefficient, contribute h0^a gamma_i h0^-a (order irrelevant: the kernel
    // is abelian), then the h0^{m/d} tail.
    GenWord word;
    for (size_t i = 0; i < expr->size(); ++i)
        for (auto a : (*expr)[i].exponents()) {
            append_word(word, repeat_word(h0_, a));
            append_word(word, gammaWords_[i]);
            append_word(word, repeat_word(h0_, -a));
        }
    append_word(word, tail);
    if (!(evaluate_gen_word(gens_, word) == target))
        throw std::logic_error("membership witness failed re-evaluation");
    return word;
}

std::optional<GenWord> wreath_membership(const WreathElement& target,
                                         const WreathSubgroupData& sub) {
    return sub.membership(target);
}

// ---------------------------------------------------------------------------
// z-status resolution

namespace {

bool is_plain_lamp_at_origin(const GElement& g) {
    return !g.center && base_is_identity(g.shift) && g.support.size() == 1 &&
           base_is_identity(g.support.front());
}

bool is_pure_shift(const GElement& g) { return g.support.empty() && !g.center; }

/// Does I contain a multiple of n? Exact over structured Z descriptors; a
/// found multiple is returned.
std::optional<std::int64_t> multiple_in_I(std::int64_t n, const SymmetricSet& I) {
    BaseGroup z = BaseGroup::integers();
    switch (I.kind()) {
        case SetKind::Finite: {
            for (const auto& e : I.elements())
                if (e.coords[0] % n == 0) return e.coords[0];
            return std::nullopt;
        }
        case SetKind::Periodic: {
            // chi(m*n) has period p/gcd in m
            for (std::int64_t m = 1; m <= I.period(); ++m)
                if (I.contains(z.from_int(m * n))) return m * n;
            return std::nullopt;
        }
        case SetKind::EventuallyPeriodic: {
            std::int64_t bound = I.threshold() / n + I.period() + 1;
            for (std::int64_t m = 1; m <= bound; ++m)
                if (I.contains(z.from_int(m * n))) return m * n;
            for (std::int64_t m = 1; m <= bound; ++m)
                if (I.contains(z.from_int(-m * n))) return -m * n;
            return std::nullopt;
        }
        default:
            throw std::invalid_argument("multiple_in_I needs a structured Z descriptor");
    }
}

/// Is (delta + dZ) ∩ I empty? d = 0 degenerates to a point query.
bool residue_class_misses_I(std::int64_t delta, std::int64_t d, const SymmetricSet& I) {
    BaseGroup z = BaseGroup::integers();
    if (d == 0) return delta == 0 || !I.contains(z.from_int(delta));
    std::int64_t span = I.period();
    if (I.kind() == SetKind::Finite) {
        for (const auto& e : I.elements())
            if (mod_positive(e.coords[0] - delta, d) == 0) return false;
        return true;
    }
    std::int64_t K = I.kind() == SetKind::EventuallyPeriodic ? I.threshold() : 0;
    std::int64_t bound = (K + iabs(delta)) / d + span + 2;
    for (std::int64_t m = -bound; m <= bound; ++m) {
        std::int64_t v = delta + m * d;
        if (v != 0 && I.contains(z.from_int(v))) return false;
    }
    return true;
}

}  // namespace

ZStatus resolve_z_status(const std::vector<GElement>& generators, const SymmetricSet& I,
                         size_t searchBound) {
    if (I.group().family != Family::Integers)
        throw std::invalid_argument("resolve_z_status works over the Z base");
    if (!I.structured())
        return {ZStatusKind::Unknown, {}, "unchecked descriptor"};

    // a generator that literally is z
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].support.empty() && generators[i].center &&
            base_is_identity(generators[i].shift))
            return {ZStatusKind::ContainsZ, {{int(i), 1}}, "generator is z"};

    // the <a, t^n> family
    if (generators.size() == 2) {
        for (int ai : {0, 1}) {
            const GElement& a = generators[size_t(ai)];
            const GElement& t = generators[size_t(1 - ai)];
            if (!is_plain_lamp_at_origin(a) || !is_pure_shift(t) || base_is_identity(t.shift))
                continue;
            std::int64_t n = iabs(t.shift.coords[0]);
            auto witnessMultiple = multiple_in_I(n, I);
            if (!witnessMultiple)
                return {ZStatusKind::NotContainsZ, {}, "no multiple of " + std::to_string(n) +
                                                           " lies in I"};
            std::int64_t j = *witnessMultiple / t.shift.coords[0];
            GenWord w;
            GenWord tj = repeat_word({{1 - ai, 1}}, j);
            for (int rep = 0; rep < 2; ++rep) {
                w.emplace_back(ai, 1);
                append_word(w, tj);
                w.emplace_back(ai, 1);
                append_word(w, repeat_word({{1 - ai, 1}}, -j));
            }
            GElement val = evaluate_gen_word_G(generators, w, I);
            if (!(val == g_center(I.group())))
                throw std::logic_error("commutator witness failed to evaluate to z");
            return {ZStatusKind::ContainsZ, w,
                    "z = [a, t^" + std::to_string(*witnessMultiple) + " a t^-" +
                        std::to_string(*witnessMultiple) + "]"};
        }
    }

    // pi-trivial generators: the subgroup is finite, close it exactly
    bool allTrivial = true;
    for (const auto& g : generators)
        if (!base_is_identity(g.shift)) allTrivial = false;
    if (allTrivial) {
        std::unordered_map<std::string, GenWord> closure;
        closure[g_key(g_identity(I.group()))] = {};
        std::vector<GElement> frontierEls = {g_identity(I.group())};
        std::vector<GenWord> frontierWords = {{}};
        while (!frontierEls.empty()) {
            std::vector<GElement> nextEls;
            std::vector<GenWord> nextWords;
            for (size_t fi = 0; fi < frontierEls.size(); ++fi)
                for (size_t gi = 0; gi < generators.size(); ++gi) {
                    GElement e = g_mul(frontierEls[fi], generators[gi], I);
                    std::string key = g_key(e);
                    if (closure.count(key)) continue;
                    GenWord w = frontierWords[fi];
                    w.emplace_back(int(gi), 1);
                    closure[key] = w;
                    if (closure.size() > (size_t(1) << 16))
                        throw limit_error("finite-closure cap exceeded");
                    nextEls.push_back(std::move(e));
                    nextWords.push_back(std::move(w));
                }
            frontierEls = std::move(nextEls);
            frontierWords = std::move(nextWords);
        }
        auto it = closure.find(g_key(g_center(I.group())));
        if (it == closure.end())
            return {ZStatusKind::NotContainsZ, {}, "finite subgroup closed without z"};
        return {ZStatusKind::ContainsZ, it->second, "z found in the finite closure"};
    }

    // structural certificate: bits are zero and lamp-difference classes miss I
    bool bitsZero = true;
    for (const auto& g : generators)
        if (g.center) bitsZero = false;
    if (bitsZero) {
        std::int64_t d = 0;
        for (const auto& g : generators) d = std::gcd(d, iabs(g.shift.coords[0]));
        std::vector<std::int64_t> lampPositions;
        for (const auto& g : generators)
            for (const auto& s : g.support) lampPositions.push_back(s.coords[0]);
        bool misses = true;
        for (auto p : lampPositions)
            for (auto q : lampPositions)
                if (!residue_class_misses_I(p - q, d, I)) misses = false;
        if (misses)
            return {ZStatusKind::NotContainsZ, {},
                    "lamp-position difference classes mod " + std::to_string(d) + " miss I"};
    }

    // bounded search over the subgroup closure
    std::unordered_map<std::string, GenWord> seen;
    seen[g_key(g_identity(I.group()))] = {};
    std::vector<GElement> frontier = {g_identity(I.group())};
    std::vector<GenWord> words = {{}};
    std::string zKey = g_key(g_center(I.group()));
    while (!frontier.empty() && seen.size() < searchBound) {
        std::vector<GElement> nextEls;
        std::vector<GenWord> nextWords;
        for (size_t fi = 0; fi < frontier.size() && seen.size() < searchBound; ++fi)
            for (size_t gi = 0; gi < generators.size() * 2; ++gi) {
                int idx = int(gi / 2);
                int exp = gi % 2 == 0 ? 1 : -1;
                GElement e = exp > 0 ? g_mul(frontier[fi], generators[size_t(idx)], I)
                                     : g_mul(frontier[fi], g_inv(generators[size_t(idx)], I), I);
                std::string key = g_key(e);
                if (seen.count(key)) continue;
                GenWord w = words[fi];
                w.emplace_back(idx, exp);
                if (key == zKey) return {ZStatusKind::ContainsZ, w, "bounded search hit z"};
                seen[key] = w;
                nextEls.push_back(std::move(e));
                nextWords.push_back(std::move(w));
                if (seen.size() >= searchBound) break;
            }
        frontier = std::move(nextEls);
        words = std::move(nextWords);
    }
    return {ZStatusKind::Unknown, {}, "bounded search exhausted without a certificate"};
}

// ---------------------------------------------------------------------------

MembershipAnswer subgroup_membership_GI(const GElement& target, const SubgroupHandle& sub,
                                        const SymmetricSet& I) {
    if (sub.z_status.kind == ZStatusKind::Unknown)
        throw std::invalid_argument("subgroup_membership_GI needs a resolved z-status");
    std::vector<WreathElement> wreathGens;
    for (const auto& g : sub.generators) wreathGens.push_back(tau(g));
    WreathSubgroupData data(wreathGens);
    auto expr = data.membership(tau(target));
    if (!expr) return {false, {}};

    GElement lifted = evaluate_gen_word_G(sub.generators, *expr, I);
    if (lifted == target) return {true, *expr};
    // lifted = target * z
    if (sub.z_status.kind == ZStatusKind::NotContainsZ) return {false, {}};
    GenWord word = *expr;
    append_word(word, sub.z_status.witness);
    if (!(evaluate_gen_word_G(sub.generators, word, I) == target))
        throw std::logic_error("membership witness failed re-evaluation in G_I");
    return {true, word};
}

MembershipAnswer submonoid_membership(const GElement& target,
                                      const std::vector<GElement>& generators,
                                      const SymmetricSet& I, size_t stateCap) {
    bool hasPos = false, hasNeg = false;
    for (const auto& g : generators) {
        if (g.shift.coords[0] > 0) hasPos = true;
        if (g.shift.coords[0] < 0) hasNeg = true;
    }
    if (hasPos && hasNeg) {
        // the monoid is a subgroup
        SubgroupHandle sub{generators, resolve_z_status(generators, I)};
        if (sub.z_status.kind == ZStatusKind::Unknown)
            throw limit_error("submonoid collapses to a subgroup with unresolved z-status");
        return subgroup_membership_GI(target, sub, I);
    }
    // all projections on one side; flip so they are >= 0
    bool flip = hasNeg;
    std::int64_t targetPi = target.shift.coords[0];
    if (flip) targetPi = -targetPi;
    if (targetPi < 0) return {false, {}};

    // BFS over products with at most |pi(target)| projection-steps
    struct State {
        GElement el;
        GenWord word;
    };
    std::unordered_set<std::string> seen;
    std::vector<State> frontier = {{g_identity(I.group()), {}}};
    seen.insert(g_key(frontier.front().el));
    std::string targetKey = g_key(target);
    if (g_is_identity(target)) return {true, {}};
    while (!frontier.empty()) {
        std::vector<State> next;
        for (const auto& st : frontier)
            for (size_t gi = 0; gi < generators.size(); ++gi) {
                GElement e = g_mul(st.el, generators[gi], I);
                std::int64_t pi = flip ? -e.shift.coords[0] : e.shift.coords[0];
                if (pi > targetPi) continue;  // can never come back
                std::string key = g_key(e);
                GenWord w = st.word;
                w.emplace_back(int(gi), 1);
                if (key == targetKey) return {true, w};
                if (!seen.insert(key).second) continue;
                if (seen.size() > stateCap) throw limit_error("submonoid enumeration cap exceeded");
                next.push_back({std::move(e), std::move(w)});
            }
        frontier = std::move(next);
    }
    return {false, {}};
}

SymmetricSet subgroup_as_GJ(std::int64_t n, const SymmetricSet& I) {
    if (n <= 0) throw std::invalid_argument("subgroup_as_GJ needs n >= 1");
    if (I.group().family != Family::Integers)
        throw std::invalid_argument("subgroup_as_GJ works over the Z base");
    BaseGroup z = BaseGroup::integers();
    switch (I.kind()) {
        case SetKind::Finite: {
            std::vector<BaseElement> elems;
            for (const auto& e : I.elements())
                if (e.coords[0] % n == 0) elems.push_back(z.from_int(e.coords[0] / n));
            return SymmetricSet::finite(z, std::move(elems));
        }
        case SetKind::Periodic: {
            std::int64_t p = I.period();
            std::int64_t p2 = p / std::gcd(p, n);
            std::vector<std::int64_t> res;
            for (std::int64_t j = 1; j < p2; ++j)
                if (std::binary_search(I.residues().begin(), I.residues().end(),
                                       mod_positive(n * j, p)))
                    res.push_back(j);
            if (res.empty()) return SymmetricSet::empty_set(z);
            return SymmetricSet::periodic(p2, std::move(res));
        }
        case SetKind::EventuallyPeriodic: {
            std::int64_t K2 = I.threshold() / n;
            std::vector<std::int64_t> window;
            for (std::int64_t j = -K2; j <= K2; ++j)
                if (j != 0 && I.contains(z.from_int(n * j))) window.push_back(j);
            std::int64_t p = I.period();
            std::int64_t p2 = p / std::gcd(p, n);
            std::vector<std::int64_t> res;
            for (std::int64_t j = 0; j < p2; ++j) {
                // representative n*j' with j' > K2 and j' ≡ j (mod p2)
                std::int64_t jrep = j + p2 * ((K2 + p2 + 1) / p2 + 1);
                if (I.contains(z.from_int(n * jrep))) res.push_back(j);
            }
            if (window.empty() && res.empty()) return SymmetricSet::empty_set(z);
            return SymmetricSet::eventually_periodic(K2, std::move(window), p2, std::move(res));
        }
        default:
            throw std::invalid_argument("subgroup_as_GJ needs a structured Z descriptor");
    }
}

}  // namespace lce
