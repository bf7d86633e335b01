#include "lce/base_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace lce {

namespace {

constexpr int kMaxFreeRank = 4;
constexpr int kBallCapIntegers = 12;
constexpr int kBallCapFree = 8;

const char kLetterNames[kMaxFreeRank] = {'s', 't', 'u', 'v'};

void check_same(const BaseElement& x, const BaseElement& y) {
    if (x.family != y.family || x.param != y.param)
        throw std::invalid_argument("base elements from different groups");
}

// ShortLex key of a signed letter: s < s^-1 < t < t^-1 < ...
int letter_rank(std::int8_t c) {
    int idx = std::abs(int(c)) - 1;
    return 2 * idx + (c < 0 ? 1 : 0);
}

void free_reduce(std::vector<std::int8_t>& w) {
    std::vector<std::int8_t> out;
    out.reserve(w.size());
    for (std::int8_t c : w) {
        if (!out.empty() && out.back() == -c)
            out.pop_back();
        else
            out.push_back(c);
    }
    w = std::move(out);
}

std::int64_t mod_positive(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

BaseGroup BaseGroup::lattice(int d) {
    if (d < 1) throw std::invalid_argument("lattice dimension must be >= 1");
    return {Family::Lattice, d};
}

BaseGroup BaseGroup::free_group(int r) {
    if (r < 1 || r > kMaxFreeRank)
        throw std::invalid_argument("free rank supported in 1..4");
    return {Family::Free, r};
}

BaseGroup BaseGroup::cyclic(int n) {
    if (n < 1) throw std::invalid_argument("cyclic modulus must be >= 1");
    return {Family::Cyclic, n};
}

BaseElement BaseGroup::identity() const {
    BaseElement e;
    e.family = family;
    e.param = param;
    if (family == Family::Integers || family == Family::Cyclic)
        e.coords = {0};
    else if (family == Family::Lattice)
        e.coords.assign(param, 0);
    return e;
}

BaseElement BaseGroup::from_int(std::int64_t n) const {
    if (family != Family::Integers && family != Family::Cyclic)
        throw std::invalid_argument("from_int needs Z or Z/n");
    BaseElement e = identity();
    e.coords[0] = family == Family::Cyclic ? mod_positive(n, param) : n;
    return e;
}

BaseElement BaseGroup::from_coords(std::vector<std::int64_t> c) const {
    if (family != Family::Lattice || int(c.size()) != param)
        throw std::invalid_argument("coordinate count does not match lattice dimension");
    BaseElement e = identity();
    e.coords = std::move(c);
    return e;
}

BaseElement BaseGroup::from_letters(std::vector<std::int8_t> w) const {
    if (family != Family::Free) throw std::invalid_argument("from_letters needs a free group");
    for (std::int8_t c : w)
        if (c == 0 || std::abs(int(c)) > param)
            throw std::invalid_argument("letter outside free-group alphabet");
    free_reduce(w);
    BaseElement e = identity();
    e.letters = std::move(w);
    return e;
}

std::vector<BaseElement> BaseGroup::generators() const {
    std::vector<BaseElement> gens;
    switch (family) {
        case Family::Integers:
        case Family::Cyclic:
            gens.push_back(from_int(1));
            break;
        case Family::Lattice:
            for (int i = 0; i < param; ++i) {
                std::vector<std::int64_t> c(param, 0);
                c[i] = 1;
                gens.push_back(from_coords(std::move(c)));
            }
            break;
        case Family::Free:
            for (int i = 1; i <= param; ++i)
                gens.push_back(from_letters({std::int8_t(i)}));
            break;
    }
    return gens;
}

BaseElement base_mul(const BaseElement& x, const BaseElement& y) {
    check_same(x, y);
    BaseElement r = x;
    switch (x.family) {
        case Family::Integers:
            r.coords[0] += y.coords[0];
            break;
        case Family::Cyclic:
            r.coords[0] = mod_positive(x.coords[0] + y.coords[0], x.param);
            break;
        case Family::Lattice:
            for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += y.coords[i];
            break;
        case Family::Free:
            r.letters.insert(r.letters.end(), y.letters.begin(), y.letters.end());
            free_reduce(r.letters);
            break;
    }
    return r;
}

BaseElement base_inv(const BaseElement& x) {
    BaseElement r = x;
    switch (x.family) {
        case Family::Integers:
            r.coords[0] = -x.coords[0];
            break;
        case Family::Cyclic:
            r.coords[0] = mod_positive(-x.coords[0], x.param);
            break;
        case Family::Lattice:
            for (auto& c : r.coords) c = -c;
            break;
        case Family::Free:
            r.letters.assign(x.letters.rbegin(), x.letters.rend());
            for (auto& c : r.letters) c = std::int8_t(-c);
            break;
    }
    return r;
}

bool base_is_identity(const BaseElement& x) {
    if (x.family == Family::Free) return x.letters.empty();
    return std::all_of(x.coords.begin(), x.coords.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t base_length(const BaseElement& x) {
    switch (x.family) {
        case Family::Integers:
            return iabs(x.coords[0]);
        case Family::Cyclic: {
            std::int64_t k = x.coords[0];
            return std::min(k, x.param - k);
        }
        case Family::Lattice: {
            std::int64_t s = 0;
            for (auto c : x.coords) s += iabs(c);
            return s;
        }
        case Family::Free:
            return std::int64_t(x.letters.size());
    }
    return 0;
}

std::strong_ordering base_compare(const BaseElement& x, const BaseElement& y) {
    check_same(x, y);
    if (x.family == Family::Free) {
        if (x.letters.size() != y.letters.size())
            return x.letters.size() <=> y.letters.size();
        for (size_t i = 0; i < x.letters.size(); ++i)
            if (x.letters[i] != y.letters[i])
                return letter_rank(x.letters[i]) <=> letter_rank(y.letters[i]);
        return std::strong_ordering::equal;
    }
    for (size_t i = 0; i < x.coords.size(); ++i)
        if (x.coords[i] != y.coords[i]) return x.coords[i] <=> y.coords[i];
    return std::strong_ordering::equal;
}

void append_key(std::string& out, const BaseElement& x) {
    out.push_back(char('0' + int(x.family)));
    if (x.family == Family::Free) {
        for (auto c : x.letters) out.push_back(char('a' + 8 + c));  // letters in [-4,4]
    } else {
        for (auto c : x.coords) {
            out += std::to_string(c);
            out.push_back(',');
        }
    }
    out.push_back(';');
}

std::string base_key(const BaseElement& x) {
    std::string s;
    append_key(s, x);
    return s;
}

std::vector<BaseElement> BaseGroup::ball(int radius) const {
    if (radius < 0) throw std::invalid_argument("negative radius");
    const int cap = family == Family::Free ? kBallCapFree : kBallCapIntegers;
    if (radius > cap) throw limit_error("ball radius exceeds configured cap");

    std::vector<BaseElement> out;
    switch (family) {
        case Family::Integers:
            out.push_back(from_int(0));
            for (int k = 1; k <= radius; ++k) {
                out.push_back(from_int(k));
                out.push_back(from_int(-k));
            }
            break;
        case Family::Cyclic:
            for (int k = 0; k < param; ++k)
                if (base_length(from_int(k)) <= radius) out.push_back(from_int(k));
            break;
        case Family::Lattice: {
            // All vectors with |.|_1 <= radius, built coordinate by coordinate.
            std::vector<std::vector<std::int64_t>> partial = {{}};
            for (int i = 0; i < param; ++i) {
                std::vector<std::vector<std::int64_t>> next;
                for (const auto& p : partial) {
                    std::int64_t used = 0;
                    for (auto c : p) used += iabs(c);
                    for (std::int64_t v = -(radius - used); v <= radius - used; ++v) {
                        auto q = p;
                        q.push_back(v);
                        next.push_back(std::move(q));
                    }
                }
                partial = std::move(next);
            }
            for (auto& p : partial) out.push_back(from_coords(std::move(p)));
            break;
        }
        case Family::Free: {
            std::vector<std::vector<std::int8_t>> layer = {{}};
            out.push_back(identity());
            for (int len = 1; len <= radius; ++len) {
                std::vector<std::vector<std::int8_t>> next;
                for (const auto& w : layer)
                    for (int i = 1; i <= param; ++i)
                        for (std::int8_t c : {std::int8_t(i), std::int8_t(-i)}) {
                            if (!w.empty() && w.back() == -c) continue;
                            auto v = w;
                            v.push_back(c);
                            next.push_back(std::move(v));
                        }
                layer = std::move(next);
                for (auto& w : layer) {
                    BaseElement e = identity();
                    e.letters = w;
                    out.push_back(std::move(e));
                }
            }
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](const BaseElement& a, const BaseElement& b) {
        auto la = base_length(a), lb = base_length(b);
        if (la != lb) return la < lb;
        return base_compare(a, b) == std::strong_ordering::less;
    });
    return out;
}

std::string BaseGroup::format(const BaseElement& x) const {
    switch (family) {
        case Family::Integers:
        case Family::Cyclic:
            return std::to_string(x.coords[0]);
        case Family::Lattice: {
            std::string s = "(";
            for (size_t i = 0; i < x.coords.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(x.coords[i]);
            }
            return s + ")";
        }
        case Family::Free: {
            if (x.letters.empty()) return "e";
            std::string s;
            for (auto c : x.letters) {
                char name = kLetterNames[std::abs(int(c)) - 1];
                s.push_back(c > 0 ? name : char(name - 'a' + 'A'));
            }
            return s;
        }
    }
    return {};
}

BaseElement BaseGroup::parse(const std::string& text) const {
    switch (family) {
        case Family::Integers:
        case Family::Cyclic: {
            size_t pos = 0;
            std::int64_t v = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing junk in integer: " + text);
            return from_int(v);
        }
        case Family::Lattice: {
            if (text.size() < 2 || text.front() != '(' || text.back() != ')')
                throw std::invalid_argument("lattice element must look like (1,0): " + text);
            std::vector<std::int64_t> c;
            std::stringstream ss(text.substr(1, text.size() - 2));
            std::string item;
            while (std::getline(ss, item, ','))
                c.push_back(std::stoll(item));
            return from_coords(std::move(c));
        }
        case Family::Free: {
            std::vector<std::int8_t> w;
            for (char ch : text) {
                if (ch == ' ') continue;
                if (ch == 'e' && text.size() == 1) break;
                bool upper = ch >= 'A' && ch <= 'Z';
                char low = upper ? char(ch - 'A' + 'a') : ch;
                int idx = -1;
                for (int i = 0; i < kMaxFreeRank; ++i)
                    if (kLetterNames[i] == low) idx = i;
                if (idx < 0 || idx >= param)
                    throw std::invalid_argument(std::string("unknown free-group letter: ") + ch);
                w.push_back(std::int8_t(upper ? -(idx + 1) : idx + 1));
            }
            return from_letters(std::move(w));
        }
    }
    throw std::invalid_argument("unreachable");
}

// ---------------------------------------------------------------------------
// Cayley-tree geometry

namespace {

void require_free(const BaseElement& x) {
    if (x.family != Family::Free)
        throw std::invalid_argument("tree geometry is defined for free groups only");
}

bool shortlex_less(const BaseElement& a, const BaseElement& b) {
    auto la = base_length(a), lb = base_length(b);
    if (la != lb) return la < lb;
    return base_compare(a, b) == std::strong_ordering::less;
}

}  // namespace

bool TreeHull::contains(const BaseElement& v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v, shortlex_less);
}

std::int64_t tree_distance(const BaseElement& x, const BaseElement& y) {
    return base_length(base_mul(base_inv(x), y));
}

TreeHull geodesic_segment(const BaseElement& x, const BaseElement& y) {
    require_free(x);
    check_same(x, y);
    // Strip the common prefix, then walk x -> common -> y.
    size_t common = 0;
    while (common < x.letters.size() && common < y.letters.size() &&
           x.letters[common] == y.letters[common])
        ++common;
    TreeHull hull;
    BaseGroup group{Family::Free, x.param};
    std::vector<std::int8_t> cur = x.letters;
    hull.vertices.push_back(x);
    while (cur.size() > common) {
        cur.pop_back();
        BaseElement e = group.identity();
        e.letters = cur;
        hull.vertices.push_back(std::move(e));
    }
    for (size_t i = common; i < y.letters.size(); ++i) {
        cur.push_back(y.letters[i]);
        BaseElement e = group.identity();
        e.letters = cur;
        hull.vertices.push_back(std::move(e));
    }
    std::sort(hull.vertices.begin(), hull.vertices.end(), shortlex_less);
    hull.vertices.erase(std::unique(hull.vertices.begin(), hull.vertices.end()),
                        hull.vertices.end());
    hull.edge_count = hull.vertices.empty() ? 0 : std::int64_t(hull.vertices.size()) - 1;
    return hull;
}

TreeHull steiner_hull(const std::vector<BaseElement>& points) {
    TreeHull hull;
    if (points.empty()) return hull;
    require_free(points.front());
    // The minimal subtree containing X is the union of the geodesics from any
    // fixed member to all others.
    for (const auto& p : points) {
        TreeHull seg = geodesic_segment(points.front(), p);
        hull.vertices.insert(hull.vertices.end(), seg.vertices.begin(), seg.vertices.end());
    }
    std::sort(hull.vertices.begin(), hull.vertices.end(), shortlex_less);
    hull.vertices.erase(std::unique(hull.vertices.begin(), hull.vertices.end()),
                        hull.vertices.end());
    hull.edge_count = hull.vertices.empty() ? 0 : std::int64_t(hull.vertices.size()) - 1;
    return hull;
}

}  // namespace lce
