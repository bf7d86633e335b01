#include "lce/symmetric_set.hpp"

#include <algorithm>

namespace lce {

namespace {

std::int64_t mod_positive(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

bool order_less(const BaseElement& a, const BaseElement& b) {
    return base_compare(a, b) == std::strong_ordering::less;
}

void sort_unique(std::vector<BaseElement>& v) {
    std::sort(v.begin(), v.end(), order_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void sort_unique(std::vector<std::int64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_sorted(const std::vector<std::int64_t>& v, std::int64_t x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

SymmetricSet SymmetricSet::empty_set(BaseGroup group) {
    return finite(group, {});
}

SymmetricSet SymmetricSet::finite(BaseGroup group, std::vector<BaseElement> elements) {
    SymmetricSet s;
    s.kind_ = SetKind::Finite;
    s.group_ = group;
    for (const auto& e : elements) {
        if (e.family != group.family || e.param != group.param)
            throw std::invalid_argument("descriptor element from the wrong group");
        if (base_is_identity(e))
            throw std::invalid_argument("symmetric set must not contain the identity");
    }
    sort_unique(elements);
    for (const auto& e : elements)
        if (!std::binary_search(elements.begin(), elements.end(), base_inv(e), order_less))
            throw std::invalid_argument("explicit set is not symmetric (missing " +
                                        group.format(base_inv(e)) + ")");
    s.elements_ = std::move(elements);
    return s;
}

SymmetricSet SymmetricSet::periodic(std::int64_t period, std::vector<std::int64_t> residues) {
    if (period <= 0) throw std::invalid_argument("period must be positive");
    SymmetricSet s;
    s.kind_ = SetKind::Periodic;
    s.group_ = BaseGroup::integers();
    s.period_ = period;
    sort_unique(residues);
    for (auto r : residues) {
        if (r <= 0 || r >= period)
            throw std::invalid_argument("periodic residues must lie in [1, p-1]");
        if (!contains_sorted(residues, period - r))
            throw std::invalid_argument("periodic residue set is not symmetric");
    }
    s.residues_ = std::move(residues);
    return s;
}

SymmetricSet SymmetricSet::periodic_lattice(BaseGroup group, std::int64_t period,
                                            std::vector<BaseElement> residues) {
    if (group.family != Family::Lattice)
        throw std::invalid_argument("periodic_lattice needs a Z^d group");
    if (period <= 0) throw std::invalid_argument("period must be positive");
    SymmetricSet s;
    s.kind_ = SetKind::Periodic;
    s.group_ = group;
    s.period_ = period;
    for (auto& e : residues) {
        if (e.family != Family::Lattice || e.param != group.param)
            throw std::invalid_argument("residue vector of the wrong dimension");
        for (auto& c : e.coords) c = mod_positive(c, period);
        if (base_is_identity(e))
            throw std::invalid_argument("residue 0 would put the identity in I");
    }
    sort_unique(residues);
    for (const auto& e : residues) {
        BaseElement neg = e;
        for (auto& c : neg.coords) c = mod_positive(-c, period);
        if (!std::binary_search(residues.begin(), residues.end(), neg, order_less))
            throw std::invalid_argument("lattice residue set is not symmetric");
    }
    s.residue_vectors_ = std::move(residues);
    return s;
}

SymmetricSet SymmetricSet::eventually_periodic(std::int64_t threshold,
                                               std::vector<std::int64_t> window,
                                               std::int64_t period,
                                               std::vector<std::int64_t> residues) {
    if (threshold < 0) throw std::invalid_argument("threshold must be >= 0");
    if (period <= 0) throw std::invalid_argument("period must be positive");
    SymmetricSet s;
    s.kind_ = SetKind::EventuallyPeriodic;
    s.group_ = BaseGroup::integers();
    s.threshold_ = threshold;
    s.period_ = period;
    sort_unique(window);
    for (auto w : window) {
        if (w == 0) throw std::invalid_argument("symmetric set must not contain 0");
        if (iabs(w) > threshold)
            throw std::invalid_argument("window entry outside [-K, K]");
        if (!contains_sorted(window, -w))
            throw std::invalid_argument("explicit window is not symmetric");
    }
    sort_unique(residues);
    for (auto r : residues) {
        if (r < 0 || r >= period)
            throw std::invalid_argument("tail residues must lie in [0, p-1]");
        if (!contains_sorted(residues, mod_positive(period - r, period)))
            throw std::invalid_argument("tail residue set is not symmetric");
    }
    s.window_ = std::move(window);
    s.residues_ = std::move(residues);
    return s;
}

SymmetricSet SymmetricSet::ab_pullback(int rank, SymmetricSet inner) {
    if (inner.group().family != Family::Lattice || inner.group().param != rank)
        throw std::invalid_argument("abpull inner descriptor must live over Z^rank");
    SymmetricSet s;
    s.kind_ = SetKind::AbPullback;
    s.group_ = BaseGroup::free_group(rank);
    s.inner_ = std::make_shared<SymmetricSet>(std::move(inner));
    return s;
}

SymmetricSet SymmetricSet::unchecked(BaseGroup group,
                                     std::function<bool(const BaseElement&)> predicate) {
    SymmetricSet s;
    s.kind_ = SetKind::Unchecked;
    s.group_ = group;
    s.predicate_ = std::move(predicate);
    return s;
}

const SymmetricSet& SymmetricSet::inner() const {
    if (!inner_) throw std::invalid_argument("descriptor has no inner set");
    return *inner_;
}

BaseElement abelianize(const BaseElement& x) {
    if (x.family != Family::Free) throw std::invalid_argument("abelianize needs F_r");
    BaseGroup lat = BaseGroup::lattice(x.param);
    std::vector<std::int64_t> c(x.param, 0);
    for (auto l : x.letters) c[std::abs(int(l)) - 1] += l > 0 ? 1 : -1;
    return lat.from_coords(std::move(c));
}

bool SymmetricSet::contains(const BaseElement& g) const {
    if (g.family != group_.family || g.param != group_.param)
        throw std::invalid_argument("membership query from the wrong group");
    switch (kind_) {
        case SetKind::Finite:
            return std::binary_search(elements_.begin(), elements_.end(), g, order_less);
        case SetKind::Periodic: {
            if (group_.family == Family::Lattice) {
                BaseElement r = g;
                for (auto& c : r.coords) c = mod_positive(c, period_);
                return std::binary_search(residue_vectors_.begin(), residue_vectors_.end(), r,
                                          order_less);
            }
            return contains_sorted(residues_, mod_positive(g.coords[0], period_));
        }
        case SetKind::EventuallyPeriodic: {
            std::int64_t v = g.coords[0];
            if (iabs(v) <= threshold_) return contains_sorted(window_, v);
            return contains_sorted(residues_, mod_positive(v, period_));
        }
        case SetKind::AbPullback:
            return inner_->contains(abelianize(g));
        case SetKind::Unchecked:
            return predicate_(g);
    }
    return false;
}

std::vector<std::int64_t> SymmetricSet::restrict_to_window(std::int64_t bound) const {
    if (group_.family != Family::Integers)
        throw std::invalid_argument("restrict_to_window needs a Z descriptor");
    std::vector<std::int64_t> out;
    BaseGroup z = BaseGroup::integers();
    for (std::int64_t i = -bound; i <= bound; ++i)
        if (i != 0 && contains(z.from_int(i))) out.push_back(i);
    return out;
}

bool SymmetricSet::is_empty_set() const {
    switch (kind_) {
        case SetKind::Finite:
            return elements_.empty();
        case SetKind::Periodic:
            return residues_.empty() && residue_vectors_.empty();
        case SetKind::EventuallyPeriodic:
            return window_.empty() && residues_.empty();
        case SetKind::AbPullback:
            return inner_->is_empty_set();
        case SetKind::Unchecked:
            throw std::invalid_argument("cannot decide emptiness of an unchecked descriptor");
    }
    return false;
}

CanonicalZSet canonicalize_z(const SymmetricSet& I) {
    if (!I.structured() || I.group().family != Family::Integers)
        throw std::invalid_argument("canonicalize_z needs a structured Z descriptor");
    BaseGroup z = BaseGroup::integers();
    auto chi = [&](std::int64_t i) { return I.contains(z.from_int(i)); };

    // Tail period and the finite window where descriptor data lives.
    std::int64_t p = 1, reach = 0;
    switch (I.kind()) {
        case SetKind::Finite:
            for (const auto& e : I.elements()) reach = std::max(reach, iabs(e.coords[0]));
            break;
        case SetKind::Periodic:
            p = I.period();
            break;
        case SetKind::EventuallyPeriodic:
            p = I.period();
            reach = I.threshold();
            break;
        default:
            throw std::invalid_argument("canonicalize_z: unsupported descriptor kind");
    }

    // Minimal eventual period: smallest divisor d of p whose shift fixes the
    // tail. (Any period of an eventually p-periodic set divides p eventually.)
    std::int64_t p0 = p;
    for (std::int64_t d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (std::int64_t i = reach + 1; i <= reach + p && ok; ++i)
            if (chi(i) != chi(i + d)) ok = false;
        if (ok) {
            p0 = d;
            break;
        }
    }

    CanonicalZSet c;
    c.period = p0;
    for (std::int64_t r = 0; r < p0; ++r)
        if (chi(reach + 1 + mod_positive(r - (reach + 1), p0))) c.residues.push_back(r);

    // Minimal threshold: last i >= 1 where membership disagrees with the tail.
    std::int64_t K0 = 0;
    for (std::int64_t i = 1; i <= reach + p0; ++i)
        if (chi(i) != std::binary_search(c.residues.begin(), c.residues.end(),
                                         mod_positive(i, p0)))
            K0 = i;
    c.threshold = K0;
    for (std::int64_t i = 1; i <= K0; ++i)
        if (chi(i)) c.window.push_back(i);
    return c;
}

std::string SymmetricSet::to_text() const {
    auto listInts = [](const std::vector<std::int64_t>& v) {
        std::string s = "{";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "}";
    };
    switch (kind_) {
        case SetKind::Finite: {
            std::string s = "finite:{";
            for (size_t i = 0; i < elements_.size(); ++i) {
                if (i) s += ",";
                s += group_.format(elements_[i]);
            }
            return s + "}";
        }
        case SetKind::Periodic: {
            if (group_.family == Family::Lattice) {
                std::string s = "periodic:p=" + std::to_string(period_) + ",r={";
                for (size_t i = 0; i < residue_vectors_.size(); ++i) {
                    if (i) s += ",";
                    s += group_.format(residue_vectors_[i]);
                }
                return s + "}";
            }
            return "periodic:p=" + std::to_string(period_) + ",r=" + listInts(residues_);
        }
        case SetKind::EventuallyPeriodic:
            return "eventually:K=" + std::to_string(threshold_) + ",explicit=" +
                   listInts(window_) + ",p=" + std::to_string(period_) + ",r=" +
                   listInts(residues_);
        case SetKind::AbPullback:
            return "abpull:" + inner_->to_text();
        case SetKind::Unchecked:
            return "unchecked";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Descriptor parsing

namespace {

// Splits "{a,b,(1,0),c}" into top-level comma-separated items.
std::vector<std::string> split_braced_list(const std::string& text, size_t& pos) {
    if (pos >= text.size() || text[pos] != '{')
        throw std::invalid_argument("expected '{' in descriptor at position " +
                                    std::to_string(pos));
    ++pos;
    std::vector<std::string> items;
    std::string cur;
    int depth = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '}' && depth == 0) {
            if (!cur.empty()) items.push_back(cur);
            ++pos;
            return items;
        }
        if (c == ',' && depth == 0) {
            if (!cur.empty()) items.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    throw std::invalid_argument("unterminated '{' in descriptor");
}

std::int64_t parse_labelled_int(const std::string& text, size_t& pos, const std::string& label) {
    if (text.compare(pos, label.size(), label) != 0)
        throw std::invalid_argument("expected '" + label + "' in descriptor");
    pos += label.size();
    size_t used = 0;
    std::int64_t v = std::stoll(text.substr(pos), &used);
    pos += used;
    return v;
}

void expect(const std::string& text, size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw std::invalid_argument(std::string("expected '") + c + "' in descriptor at position " +
                                    std::to_string(pos));
    ++pos;
}

}  // namespace

SymmetricSet parse_symmetric_set(const BaseGroup& group, const std::string& text) {
    if (text.rfind("finite:", 0) == 0) {
        size_t pos = 7;
        auto items = split_braced_list(text, pos);
        std::vector<BaseElement> elems;
        for (const auto& it : items) elems.push_back(group.parse(it));
        return SymmetricSet::finite(group, std::move(elems));
    }
    if (text.rfind("periodic:", 0) == 0) {
        size_t pos = 9;
        std::int64_t p = parse_labelled_int(text, pos, "p=");
        expect(text, pos, ',');
        if (text.compare(pos, 2, "r=") != 0)
            throw std::invalid_argument("expected 'r=' in periodic descriptor");
        pos += 2;
        auto items = split_braced_list(text, pos);
        if (group.family == Family::Lattice) {
            std::vector<BaseElement> residues;
            for (const auto& it : items) residues.push_back(group.parse(it));
            return SymmetricSet::periodic_lattice(group, p, std::move(residues));
        }
        if (group.family != Family::Integers)
            throw std::invalid_argument("periodic descriptors live over Z or Z^d");
        std::vector<std::int64_t> residues;
        for (const auto& it : items) residues.push_back(std::stoll(it));
        return SymmetricSet::periodic(p, std::move(residues));
    }
    if (text.rfind("eventually:", 0) == 0) {
        if (group.family != Family::Integers)
            throw std::invalid_argument("eventually-periodic descriptors live over Z");
        size_t pos = 11;
        std::int64_t K = parse_labelled_int(text, pos, "K=");
        expect(text, pos, ',');
        if (text.compare(pos, 9, "explicit=") != 0)
            throw std::invalid_argument("expected 'explicit=' in descriptor");
        pos += 9;
        auto witems = split_braced_list(text, pos);
        expect(text, pos, ',');
        std::int64_t p = parse_labelled_int(text, pos, "p=");
        expect(text, pos, ',');
        if (text.compare(pos, 2, "r=") != 0)
            throw std::invalid_argument("expected 'r=' in descriptor");
        pos += 2;
        auto ritems = split_braced_list(text, pos);
        std::vector<std::int64_t> window, residues;
        for (const auto& it : witems) window.push_back(std::stoll(it));
        for (const auto& it : ritems) residues.push_back(std::stoll(it));
        return SymmetricSet::eventually_periodic(K, std::move(window), p, std::move(residues));
    }
    if (text.rfind("abpull:", 0) == 0) {
        if (group.family != Family::Free)
            throw std::invalid_argument("abpull descriptors live over F_r");
        SymmetricSet inner =
            parse_symmetric_set(BaseGroup::lattice(group.param), text.substr(7));
        return SymmetricSet::ab_pullback(group.param, std::move(inner));
    }
    throw std::invalid_argument("unknown descriptor syntax: " + text);
}

}  // namespace lce
