#include "lce/growth.hpp"

#include <algorithm>
#include <unordered_map>

namespace lce {

void Polynomial::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
    r.trim();
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

RationalSeries::RationalSeries(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    num_.trim();
    den_.trim();
    if (den_.c.empty()) throw std::invalid_argument("zero denominator");
    if (den_.c[0] == -1) {
        for (auto& x : num_.c) x = -x;
        for (auto& x : den_.c) x = -x;
    }
    if (den_.c[0] != 1)
        throw std::invalid_argument("denominator constant term must be a unit");
}

std::int64_t RationalSeries::coefficient(int n) const {
    while (int(taylor_.size()) <= n) {
        size_t k = taylor_.size();
        std::int64_t v = num_.at(k);
        for (size_t j = 1; j < den_.c.size() && j <= k; ++j)
            v -= den_.c[j] * taylor_[k - j];
        taylor_.push_back(v);
    }
    return taylor_[size_t(n)];
}

std::vector<std::int64_t> RationalSeries::coefficients(int upTo) const {
    std::vector<std::int64_t> out;
    for (int i = 0; i <= upTo; ++i) out.push_back(coefficient(i));
    return out;
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalSeries series_c2wrz_sphere_printed() {
    Polynomial onePlus = Polynomial::from({1, 1});
    Polynomial oneMinus = Polynomial::from({1, -1});
    Polynomial quad = Polynomial::from({1, 1, 1});
    Polynomial cubic = Polynomial::from({1, 0, -1, -1});   // 1 - x^2 - x^3
    Polynomial fib = Polynomial::from({1, -1, -1});        // 1 - x - x^2
    Polynomial num = onePlus * onePlus * onePlus * oneMinus * oneMinus * quad;
    Polynomial den = cubic * cubic * fib;
    return {num, den};
}

RationalSeries series_c2wrz() {
    RationalSeries s = series_c2wrz_sphere_printed();
    return {s.numerator(), s.denominator() * Polynomial::from({1, -1})};
}

RationalSeries series_GI_S() {
    // (1 + x^2)/(1 - x) + 2*(ball - 1/(1 - x))
    Polynomial oneMinus = Polynomial::from({1, -1});
    RationalSeries ball = series_c2wrz();
    RationalSeries head{Polynomial::from({1, 0, 1}), oneMinus};
    RationalSeries one{Polynomial::from({1}), oneMinus};
    RationalSeries twiceBall{ball.numerator() * Polynomial::from({2}), ball.denominator()};
    RationalSeries twiceOne{Polynomial::from({2}), oneMinus};
    return head + twiceBall - twiceOne;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Elem, typename Key, typename Mul>
LabelledBall bfs_generic(const std::vector<Elem>& genImages, const Elem& start, Key key, Mul mul,
                         int radius, int cap) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    if (radius > cap) throw limit_error("BFS radius exceeds configured cap");

    LabelledBall ball;
    ball.radius = radius;
    ball.genCount = genImages.size();

    std::vector<Elem> vertices = {start};
    std::unordered_map<std::string, std::int32_t> index;
    index.emplace(key(start), 0);
    std::vector<int> dist = {0};
    ball.beta.assign(size_t(radius) + 1, 0);
    ball.beta[0] = 1;

    for (size_t head = 0; head < vertices.size(); ++head) {
        if (dist[head] == radius) continue;
        for (const auto& g : genImages) {
            Elem next = mul(vertices[head], g);
            std::string k = key(next);
            if (index.emplace(k, std::int32_t(vertices.size())).second) {
                vertices.push_back(std::move(next));
                dist.push_back(dist[head] + 1);
                ball.beta[size_t(dist.back())] += 1;
            }
        }
    }
    for (size_t i = 1; i < ball.beta.size(); ++i) ball.beta[i] += ball.beta[i - 1];

    ball.edges.assign(vertices.size(), std::vector<std::int32_t>(genImages.size(), -1));
    for (size_t v = 0; v < vertices.size(); ++v)
        for (size_t gi = 0; gi < genImages.size(); ++gi) {
            auto it = index.find(key(mul(vertices[v], genImages[gi])));
            if (it != index.end()) ball.edges[v][gi] = it->second;
        }
    return ball;
}

}  // namespace

LabelledBall bfs_ball(const GroupCtx& ctx, const GenSet& gens, int radius, int radiusCap) {
    int cap = radiusCap >= 0 ? radiusCap
                             : (ctx.base.family == Family::Free ? kBfsCapFree : kBfsCapZ);
    const SymmetricSet& I = ctx.set;
    return bfs_generic(
        gens.images, g_identity(ctx.base), [](const GElement& x) { return g_key(x); },
        [&I](const GElement& x, const GElement& y) { return g_mul(x, y, I); }, radius, cap);
}

LabelledBall bfs_ball_wreath(const GenSet& gens, int radius, int radiusCap) {
    int cap = radiusCap >= 0 ? radiusCap
                             : (gens.base.family == Family::Free ? kBfsCapFree : kBfsCapZ);
    std::vector<WreathElement> images;
    images.reserve(gens.images.size());
    for (const auto& g : gens.images) images.push_back(tau(g));
    return bfs_generic(
        images, w_identity(gens.base), [](const WreathElement& x) { return w_key(x); },
        [](const WreathElement& x, const WreathElement& y) { return w_mul(x, y); }, radius, cap);
}

std::vector<std::int32_t> LabelledBall::canonical_code() const {
    std::vector<std::int32_t> code;
    code.reserve(edges.size() * genCount + 2);
    code.push_back(std::int32_t(edges.size()));
    code.push_back(std::int32_t(genCount));
    for (const auto& row : edges) code.insert(code.end(), row.begin(), row.end());
    return code;
}

bool verify_rooted_isomorphic(const LabelledBall& a, const LabelledBall& b) {
    if (a.edges.size() != b.edges.size() || a.genCount != b.genCount) return false;
    const std::int32_t n = std::int32_t(a.edges.size());
    std::vector<std::int32_t> map(size_t(n), -1), rmap(size_t(n), -1);
    map[0] = 0;
    rmap[0] = 0;
    std::vector<std::int32_t> queue = {0};
    for (size_t head = 0; head < queue.size(); ++head) {
        std::int32_t va = queue[head], vb = map[size_t(va)];
        for (size_t gi = 0; gi < a.genCount; ++gi) {
            std::int32_t ta = a.edges[size_t(va)][gi], tb = b.edges[size_t(vb)][gi];
            if ((ta < 0) != (tb < 0)) return false;
            if (ta < 0) continue;
            if (map[size_t(ta)] == -1 && rmap[size_t(tb)] == -1) {
                map[size_t(ta)] = tb;
                rmap[size_t(tb)] = ta;
                queue.push_back(ta);
            } else if (map[size_t(ta)] != tb || rmap[size_t(tb)] != ta) {
                return false;
            }
        }
    }
    // Deterministic labelled graphs reachable from the root: the map above is
    // total iff both balls are root-connected, which Cayley balls are.
    for (std::int32_t v = 0; v < n; ++v)
        if (map[size_t(v)] == -1) return false;
    return true;
}

bool marked_ball_isomorphic(const SymmetricSet& I, const SymmetricSet& J, int r) {
    GroupCtx cI{I.group(), I};
    GroupCtx cJ{J.group(), J};
    GenSet gI = gen_set_sprime(I.group());
    GenSet gJ = gen_set_sprime(J.group());
    LabelledBall bI = bfs_ball(cI, gI, 2 * r + 3);
    LabelledBall bJ = bfs_ball(cJ, gJ, 2 * r + 3);
    return bI.canonical_code() == bJ.canonical_code();
}

BetaOracle beta_oracle_sprime(const SymmetricSet& I) {
    return [I](int n) {
        GroupCtx ctx{I.group(), I};
        GenSet gens = gen_set_sprime(I.group());
        return bfs_ball(ctx, gens, n).beta[size_t(n)];
    };
}

std::vector<std::int64_t> reconstruct_I_from_beta(const BetaOracle& beta, int rmax) {
    BaseGroup z = BaseGroup::integers();
    std::vector<std::int64_t> window;  // positive members found so far
    for (int r = 0; r + 1 <= rmax; ++r) {
        std::vector<BaseElement> elems;
        for (auto i : window) {
            elems.push_back(z.from_int(i));
            elems.push_back(z.from_int(-i));
        }
        SymmetricSet Ir = SymmetricSet::finite(z, std::move(elems));
        std::int64_t simulated = beta_oracle_sprime(Ir)(2 * r + 4);
        std::int64_t actual = beta(2 * r + 4);
        // r+1 in I gives the ball r+2 extra elements: the r+2 word pairs
        // t^-j a t^{r+1} a t^{j-r-1} / t^{r+1-j} a t^{-r-1} a t^j (j = 0..r+1)
        // collapse in G_{I_r} and split by z in G_I.
        if (actual == simulated) {
            // r+1 not in I
        } else if (actual == simulated + (r + 2)) {
            window.push_back(r + 1);
        } else {
            throw std::logic_error("beta oracle matches neither branch at r=" + std::to_string(r));
        }
    }
    std::vector<std::int64_t> out;
    for (auto i : window) out.push_back(-i);
    for (auto i : window) out.push_back(i);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace lce
