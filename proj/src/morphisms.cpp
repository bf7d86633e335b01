#include "lce/morphisms.hpp"

#include <algorithm>

namespace lce {

namespace {

bool order_less(const BaseElement& a, const BaseElement& b) {
    return base_compare(a, b) == std::strong_ordering::less;
}

}  // namespace

std::function<BaseElement(const BaseElement&)> iota_scale(std::int64_t d) {
    if (d == 0) throw std::invalid_argument("scaling embedding needs d != 0");
    return [d](const BaseElement& x) {
        if (x.family != Family::Integers) throw std::invalid_argument("iota_scale acts on Z");
        return BaseGroup::integers().from_int(d * x.coords[0]);
    };
}

std::function<BaseElement(const BaseElement&)> iota_power_t(int rank) {
    if (rank < 2) throw std::invalid_argument("t-power embedding needs rank >= 2");
    BaseGroup target = BaseGroup::free_group(rank);
    return [target](const BaseElement& x) {
        if (x.family != Family::Integers) throw std::invalid_argument("iota_power_t acts on Z");
        std::vector<std::int8_t> w(size_t(iabs(x.coords[0])),
                                   std::int8_t(x.coords[0] >= 0 ? 2 : -2));
        return target.from_letters(std::move(w));
    };
}

GElement induced_embedding(const std::function<BaseElement(const BaseElement&)>& iota,
                           const SymmetricSet& sourceSet, const GElement& g) {
    GElement r;
    r.center = g.center;
    r.shift = iota(g.shift);
    r.support.reserve(g.support.size());
    for (const auto& h : g.support) r.support.push_back(iota(h));
    // Re-sorting cost of the canonical descending product in the target order;
    // chi is evaluated in the source since iota(I) pulls back to I.
    for (size_t i = 0; i < g.support.size(); ++i)
        for (size_t j = i + 1; j < g.support.size(); ++j)
            if (order_less(r.support[j], r.support[i]) &&
                sourceSet.contains(base_mul(base_inv(g.support[j]), g.support[i])))
                r.center = !r.center;
    std::sort(r.support.begin(), r.support.end(), order_less);
    return r;
}

SymmetricSet pushforward_scale(const SymmetricSet& I, std::int64_t d) {
    if (I.group().family != Family::Integers)
        throw std::invalid_argument("pushforward_scale needs a Z descriptor");
    std::int64_t a = iabs(d);
    switch (I.kind()) {
        case SetKind::Finite: {
            std::vector<BaseElement> elems;
            BaseGroup z = BaseGroup::integers();
            for (const auto& e : I.elements()) elems.push_back(z.from_int(d * e.coords[0]));
            return SymmetricSet::finite(z, std::move(elems));
        }
        case SetKind::Periodic: {
            // d*{i : i mod p in R} = {j : j = d*r (mod d*p), and only those}
            std::vector<std::int64_t> res;
            for (auto r : I.residues()) res.push_back(((d * r) % (a * I.period()) + a * I.period()) % (a * I.period()));
            return SymmetricSet::periodic(a * I.period(), std::move(res));
        }
        default:
            throw std::invalid_argument("pushforward_scale supports finite/periodic descriptors");
    }
}

SymmetricSet quotient_set(std::int64_t n, const SymmetricSet& I) {
    if (I.group().family != Family::Integers)
        throw std::invalid_argument("quotient_set needs a Z descriptor");
    if (n <= 0) throw std::invalid_argument("modulus must be positive");
    if (I.kind() == SetKind::Finite && I.elements().empty())
        return SymmetricSet::empty_set(BaseGroup::cyclic(int(n)));
    if (I.kind() != SetKind::Periodic || n % I.period() != 0)
        throw std::invalid_argument("I must be periodic with period dividing the modulus");
    BaseGroup c = BaseGroup::cyclic(int(n));
    std::vector<BaseElement> elems;
    for (std::int64_t r = 1; r < n; ++r)
        if (std::binary_search(I.residues().begin(), I.residues().end(), r % I.period()))
            elems.push_back(c.from_int(r));
    return SymmetricSet::finite(c, std::move(elems));
}

GElement induced_quotient(std::int64_t n, const SymmetricSet& I, const GElement& g) {
    SymmetricSet J = quotient_set(n, I);
    BaseGroup c = BaseGroup::cyclic(int(n));
    GElement img = g_identity(c);
    // Canonical word of g, evaluated in the finite group: descending lamps,
    // then z^center, then the shift.
    for (auto it = g.support.rbegin(); it != g.support.rend(); ++it)
        img = g_mul(img, g_lamp(c, c.from_int(it->coords[0])), J);
    if (g.center) img = g_mul(img, g_center(c), J);
    img = g_mul(img, g_shift(c.from_int(g.shift.coords[0])), J);
    return img;
}

}  // namespace lce
