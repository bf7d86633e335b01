#include "lce/thurston.hpp"

#include <algorithm>
#include <unordered_map>

namespace lce {

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = std::int32_t(i);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    }
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[size_t(a)] = b;
        return true;
    }
};

/// Inverse of a word over S' = {a, z, t, T}: a and z are involutions, t/T swap.
Word invert_sprime(const GenSet& gens, const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const std::string& n = gens.names[size_t(*it)];
        std::string invName;
        if (n == "a" || n == "z")
            invName = n;
        else if (n == "t")
            invName = "T";
        else if (n == "T")
            invName = "t";
        else
            throw std::invalid_argument("demo supports the S' alphabet over Z");
        out.push_back(gens.find(invName));
    }
    return out;
}

/// Rank of a word among all words of length <= bound (length-then-index order).
size_t word_rank(const Word& w, size_t genCount) {
    // count of words shorter than |w|
    size_t rank = 0, layer = 1;
    for (size_t len = 0; len < w.size(); ++len) {
        rank += layer;
        layer *= genCount;
    }
    size_t offset = 0;
    for (int c : w) offset = offset * genCount + size_t(c);
    return rank + offset;
}

}  // namespace

ThurstonPartition::ThurstonPartition(const GenSet& gens, int n, const SymmetricSet& I,
                                     const std::function<std::int64_t(int)>& beta, int demoCap)
    : n_(n), genCount_(gens.size()) {
    if (gens.base.family != Family::Integers || gens.size() != 4)
        throw std::invalid_argument("the demo runs over (G_I, S') with the Z base");
    if (n > demoCap) throw limit_error("demo word length exceeds the configured cap");

    // defining relators within the support window n: involutions, commuting z,
    // and the lamp commutators [a, t^k a t^-k] z^{chi_I(k)}
    const int a = gens.find("a"), z = gens.find("z"), t = gens.find("t"), T = gens.find("T");
    std::vector<Word> relators = {{a, a}, {z, z}, {t, T}, {T, t}, {a, z, a, z}, {t, z, T, z}};
    BaseGroup zg = BaseGroup::integers();
    for (int k = 1; k <= n; ++k) {
        Word r;
        for (int rep = 0; rep < 2; ++rep) {
            r.push_back(a);
            r.insert(r.end(), size_t(k), t);
            r.push_back(a);
            r.insert(r.end(), size_t(k), T);
        }
        if (I.contains(zg.from_int(k))) r.push_back(z);
        relators.push_back(std::move(r));
    }

    // replacement pairs (p, q) with p q^-1 a cyclic rotation of r^{+-1}
    std::vector<std::pair<Word, Word>> pairs;
    auto addPair = [&](Word p, Word q) {
        if (p == q) return;
        for (auto& existing : pairs)
            if (existing.first == p && existing.second == q) return;
        pairs.emplace_back(std::move(p), std::move(q));
    };
    for (const auto& r0 : relators)
        for (const Word& r : {r0, invert_sprime(gens, r0)})
            for (size_t rot = 0; rot < r.size(); ++rot) {
                Word rr(r.begin() + std::ptrdiff_t(rot), r.end());
                rr.insert(rr.end(), r.begin(), r.begin() + std::ptrdiff_t(rot));
                for (size_t cut = 0; cut <= rr.size(); ++cut) {
                    Word p(rr.begin(), rr.begin() + std::ptrdiff_t(cut));
                    Word qinv(rr.begin() + std::ptrdiff_t(cut), rr.end());
                    addPair(std::move(p), invert_sprime(gens, qinv));
                }
            }

    const std::int64_t target = beta(n);
    const int gcount = int(gens.size());

    for (int bound = n; bound <= n + 6; ++bound) {
        // all words of length <= bound, in rank order
        std::vector<Word> words = {{}};
        {
            std::vector<Word> layer = {{}};
            for (int len = 1; len <= bound; ++len) {
                std::vector<Word> next;
                for (const auto& w : layer)
                    for (int g = 0; g < gcount; ++g) {
                        Word w2 = w;
                        w2.push_back(g);
                        words.push_back(w2);
                        next.push_back(std::move(w2));
                    }
                layer = std::move(next);
            }
        }

        UnionFind uf(words.size());
        std::int64_t merges = 0;
        for (size_t wi = 0; wi < words.size(); ++wi) {
            const Word& w = words[wi];
            for (const auto& [p, q] : pairs) {
                if (p.size() > w.size()) continue;
                if (w.size() - p.size() + q.size() > size_t(bound)) continue;
                for (size_t pos = 0; pos + p.size() <= w.size(); ++pos) {
                    if (!std::equal(p.begin(), p.end(), w.begin() + std::ptrdiff_t(pos))) continue;
                    Word w2(w.begin(), w.begin() + std::ptrdiff_t(pos));
                    w2.insert(w2.end(), q.begin(), q.end());
                    w2.insert(w2.end(), w.begin() + std::ptrdiff_t(pos + p.size()), w.end());
                    if (uf.unite(std::int32_t(wi), std::int32_t(word_rank(w2, genCount_))))
                        ++merges;
                }
            }
        }

        // classes among words of length <= n
        std::unordered_map<std::int32_t, std::int32_t> roots;
        size_t shortWords = 1, layerSize = 1;
        for (int len = 1; len <= n; ++len) {
            layerSize *= genCount_;
            shortWords += layerSize;
        }
        classOf_.assign(shortWords, -1);
        for (size_t wi = 0; wi < shortWords; ++wi) {
            std::int32_t root = uf.find(std::int32_t(wi));
            auto [it, fresh] = roots.try_emplace(root, std::int32_t(roots.size()));
            classOf_[wi] = it->second;
        }
        std::int64_t classes = std::int64_t(roots.size());
        if (classes < target)
            throw std::logic_error("class count fell below beta: inconsistent oracle");
        if (classes == target) {
            classes_ = classes;
            merges_ = merges;
            bound_ = bound;
            return;
        }
    }
    throw limit_error("rewriting bound cap reached before the class count met beta");
}

bool ThurstonPartition::equal(const Word& u, const Word& v) const {
    if (int(u.size()) > n_ || int(v.size()) > n_)
        throw std::invalid_argument("word longer than the partition's n");
    return classOf_[word_rank(u, genCount_)] == classOf_[word_rank(v, genCount_)];
}

ThurstonResult wp_from_growth_demo(const GenSet& gens, const Word& u, const Word& v,
                                   const SymmetricSet& I,
                                   const std::function<std::int64_t(int)>& beta, int demoCap) {
    const int n = int(std::max(u.size(), v.size()));
    ThurstonPartition part(gens, n, I, beta, demoCap);
    return {part.equal(u, v), part.classes(), part.rewriting_bound(), part.relations_used()};
}

}  // namespace lce
