#include "lce/elements.hpp"

#include <algorithm>

namespace lce {

namespace {

bool order_less(const BaseElement& a, const BaseElement& b) {
    return base_compare(a, b) == std::strong_ordering::less;
}

/// Symmetric difference of two ascending supports.
std::vector<BaseElement> support_xor(const std::vector<BaseElement>& a,
                                     const std::vector<BaseElement>& b) {
    std::vector<BaseElement> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = base_compare(a[i], b[j]);
        if (c == std::strong_ordering::less)
            out.push_back(a[i++]);
        else if (c == std::strong_ordering::greater)
            out.push_back(b[j++]);
        else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

}  // namespace

bool omega(const std::vector<BaseElement>& u, const std::vector<BaseElement>& v,
           const SymmetricSet& I, const TotalOrder& ord) {
    bool acc = false;
    for (const auto& g : u)
        for (const auto& h : v)
            if (ord.less(g, h) && I.contains(base_mul(base_inv(g), h))) acc = !acc;
    return acc;
}

NElement n_identity() { return {}; }

NElement n_lamp(const BaseElement& position) {
    NElement x;
    x.support = {position};
    return x;
}

NElement n_mul(const NElement& x, const NElement& y, const SymmetricSet& I) {
    NElement r;
    r.support = support_xor(x.support, y.support);
    r.center = x.center ^ y.center ^ omega(x.support, y.support, I);
    return r;
}

NElement n_inv(const NElement& x, const SymmetricSet& I) {
    NElement r = x;
    r.center = x.center ^ omega(x.support, x.support, I);
    return r;
}

NElement n_translate(const BaseElement& k, const NElement& x, const SymmetricSet& I) {
    NElement r;
    r.center = x.center;
    r.support.reserve(x.support.size());
    for (const auto& g : x.support) r.support.push_back(base_mul(k, g));
    // Re-sorting cost of the canonical descending product.
    for (size_t i = 0; i < x.support.size(); ++i)
        for (size_t j = i + 1; j < x.support.size(); ++j) {
            // x.support ascending: support[j] > support[i].
            if (order_less(r.support[j], r.support[i]) &&
                I.contains(base_mul(base_inv(x.support[j]), x.support[i])))
                r.center = !r.center;
        }
    std::sort(r.support.begin(), r.support.end(), order_less);
    return r;
}

bool commutator_central(const NElement& x, const NElement& y, const SymmetricSet& I) {
    bool acc = false;
    for (const auto& g : x.support)
        for (const auto& h : y.support)
            if (I.contains(base_mul(base_inv(g), h))) acc = !acc;
    return acc;
}

GElement g_identity(const BaseGroup& base) {
    GElement x;
    x.shift = base.identity();
    return x;
}

GElement g_lamp(const BaseGroup& base, const BaseElement& position) {
    GElement x = g_identity(base);
    x.support = {position};
    return x;
}

GElement g_center(const BaseGroup& base) {
    GElement x = g_identity(base);
    x.center = true;
    return x;
}

GElement g_shift(const BaseElement& translation) {
    GElement x;
    x.shift = translation;
    return x;
}

GElement g_from_n(const NElement& n, const BaseGroup& base) {
    GElement x = g_identity(base);
    x.support = n.support;
    x.center = n.center;
    return x;
}

NElement g_lamp_part(const GElement& x) { return {x.support, x.center}; }

const BaseElement& g_pi(const GElement& x) { return x.shift; }

GElement g_mul(const GElement& x, const GElement& y, const SymmetricSet& I) {
    // (n1 h1)(n2 h2) = n1 (h1 n2 h1^-1) . h1 h2
    NElement n = n_mul(g_lamp_part(x), n_translate(x.shift, g_lamp_part(y), I), I);
    GElement r;
    r.support = std::move(n.support);
    r.center = n.center;
    r.shift = base_mul(x.shift, y.shift);
    return r;
}

GElement g_inv(const GElement& x, const SymmetricSet& I) {
    BaseElement hinv = base_inv(x.shift);
    NElement n = n_translate(hinv, n_inv(g_lamp_part(x), I), I);
    GElement r;
    r.support = std::move(n.support);
    r.center = n.center;
    r.shift = std::move(hinv);
    return r;
}

GElement g_conjugate(const GElement& c, const GElement& x, const SymmetricSet& I) {
    return g_mul(g_mul(c, x, I), g_inv(c, I), I);
}

bool g_is_identity(const GElement& x) {
    return x.support.empty() && !x.center && base_is_identity(x.shift);
}

WreathElement tau(const GElement& x) { return {x.support, x.shift}; }

WreathElement w_identity(const BaseGroup& base) {
    WreathElement x;
    x.shift = base.identity();
    return x;
}

WreathElement w_lamp(const BaseGroup& base, const BaseElement& position) {
    WreathElement x = w_identity(base);
    x.support = {position};
    return x;
}

WreathElement w_shift(const BaseElement& translation) {
    WreathElement x;
    x.shift = translation;
    return x;
}

WreathElement w_mul(const WreathElement& x, const WreathElement& y) {
    WreathElement r;
    std::vector<BaseElement> moved;
    moved.reserve(y.support.size());
    for (const auto& g : y.support) moved.push_back(base_mul(x.shift, g));
    std::sort(moved.begin(), moved.end(), order_less);
    r.support = support_xor(x.support, moved);
    r.shift = base_mul(x.shift, y.shift);
    return r;
}

WreathElement w_inv(const WreathElement& x) {
    WreathElement r;
    r.shift = base_inv(x.shift);
    r.support.reserve(x.support.size());
    for (const auto& g : x.support) r.support.push_back(base_mul(r.shift, g));
    std::sort(r.support.begin(), r.support.end(), order_less);
    return r;
}

WreathElement w_conjugate(const WreathElement& c, const WreathElement& x) {
    return w_mul(w_mul(c, x), w_inv(c));
}

bool w_is_identity(const WreathElement& x) {
    return x.support.empty() && base_is_identity(x.shift);
}

std::string g_key(const GElement& x) {
    std::string s;
    for (const auto& g : x.support) append_key(s, g);
    s.push_back(x.center ? '*' : '_');
    append_key(s, x.shift);
    return s;
}

std::string w_key(const WreathElement& x) {
    std::string s;
    for (const auto& g : x.support) append_key(s, g);
    s.push_back('|');
    append_key(s, x.shift);
    return s;
}

GElement g_parse_canonical(const std::string& text, const BaseGroup& base,
                           const SymmetricSet& I) {
    GElement acc = g_identity(base);
    if (text == "e") return acc;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t dot = text.find('.', pos);
        std::string part = text.substr(pos, dot == std::string::npos ? dot : dot - pos);
        pos = dot == std::string::npos ? text.size() : dot + 1;
        if (part == "z") {
            acc = g_mul(acc, g_center(base), I);
            continue;
        }
        if (part.size() >= 3 && part.back() == ')' && part[1] == '(') {
            std::string inner = part.substr(2, part.size() - 3);
            if (part[0] == 'a') {
                acc = g_mul(acc, g_lamp(base, base.parse(inner)), I);
                continue;
            }
            if (part[0] == 't' || part[0] == 'w') {
                acc = g_mul(acc, g_shift(base.parse(inner)), I);
                continue;
            }
        }
        if (part.size() >= 2 && part[0] == 'v' && part[1] == '(') {
            acc = g_mul(acc, g_shift(base.parse(part.substr(1))), I);
            continue;
        }
        throw std::invalid_argument("cannot parse canonical part: " + part);
    }
    return acc;
}

std::string g_format(const GElement& x, const BaseGroup& base) {
    if (g_is_identity(x)) return "e";
    std::string s;
    for (auto it = x.support.rbegin(); it != x.support.rend(); ++it) {
        if (!s.empty()) s += ".";
        s += "a(" + base.format(*it) + ")";
    }
    if (x.center) {
        if (!s.empty()) s += ".";
        s += "z";
    }
    if (!base_is_identity(x.shift)) {
        if (!s.empty()) s += ".";
        switch (base.family) {
            case Family::Integers:
            case Family::Cyclic:
                s += "t(" + base.format(x.shift) + ")";
                break;
            case Family::Lattice:
                s += "v" + base.format(x.shift);
                break;
            case Family::Free:
                s += "w(" + base.format(x.shift) + ")";
                break;
        }
    }
    return s;
}

}  // namespace lce
