#include "lce/grammar.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <unordered_map>

#include "lce/conjugacy.hpp"

namespace lce {

namespace {

constexpr std::uint64_t kSaturate = std::uint64_t(1) << 62;
constexpr int kEnumerateCap = 8;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return std::min(kSaturate, a + b);
}
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturate / b) return kSaturate;
    return a * b;
}

int inv_letter(int v) { return v ^ 1; }  // signed-letter index: 2i <-> 2i+1

const char kLetterNames[4] = {'s', 't', 'u', 'v'};

}  // namespace

int Grammar::token_count() const {
    return kernelSize == 1 ? terminal_count() : kernelSize * terminal_count() + (kernelSize - 1);
}

int Grammar::variable_count() const { return 1 + 2 * rank + 4 * rank * rank + 2 * rank; }

std::string Grammar::terminal_name(int t) const {
    if (t == 0) return "a";
    int v = t - 1;
    char base = kLetterNames[v / 2];
    return std::string(1, v % 2 == 0 ? base : char(base - 'a' + 'A'));
}

std::string Grammar::token_name(int tok) const {
    if (kernelSize == 1) return terminal_name(tok);
    if (tok == kernel_token()) return "z";
    std::string s = terminal_name(tok / kernelSize);
    if (tok % kernelSize == 1) s += "z";
    return s;
}

std::vector<int> Grammar::tokens_of_terminal(int t) const {
    if (kernelSize == 1) return {t};
    std::vector<int> out;
    for (int f = 0; f < kernelSize; ++f) out.push_back(kernelSize * t + f);
    return out;
}

int Grammar::kernel_token() const { return kernelSize * terminal_count(); }

std::string Grammar::variable_name(int id) const {
    int r2 = 2 * rank;
    if (id == 0) return "S";
    if (id <= r2) return "E_" + terminal_name(id);
    id -= 1 + r2;
    if (id < r2 * r2)
        return "F_{" + terminal_name(1 + id / r2) + "," + terminal_name(1 + id % r2) + "}";
    id -= r2 * r2;
    return "S_" + terminal_name(1 + id);
}

Grammar build_conjgeo_grammar(int rank, GrammarOptions opts) {
    if (rank < 1 || rank > 4) throw std::invalid_argument("grammar rank supported in 1..4");
    Grammar g;
    g.rank = rank;
    g.options = opts;
    const int r2 = 2 * rank;

    auto pool_excluding = [&](std::initializer_list<int> excluded) {
        std::uint16_t mask = 1;  // terminal a
        for (int v = 0; v < r2; ++v) {
            bool out = false;
            for (int e : excluded)
                if (e == v) out = true;
            if (!out) mask |= std::uint16_t(1u << (1 + v));
        }
        return mask;
    };
    auto term = [](int t) { return GrammarPart{GrammarPart::Kind::Terminal, t, 0}; };
    auto var = [](int v) { return GrammarPart{GrammarPart::Kind::Variable, v, 0}; };
    auto choose = [](std::uint16_t pool) {
        return GrammarPart{GrammarPart::Kind::Choose, 0, pool};
    };

    // excursions: E_s <- s X1..Xl s^-1, Xi distinct in {a} ∪ {E_v | v != s^-1}, l >= 1
    for (int s = 0; s < r2; ++s)
        g.schemata.push_back(
            {g.var_E(s), {term(1 + s), choose(pool_excluding({inv_letter(s)})), term(1 + inv_letter(s))}, 1});

    // bridges: F_{s,t} <- s X1..Xl F_{u,t}, u != s^-1, Xi in {a} ∪ {E_v | v != s^-1, u}
    for (int s = 0; s < r2; ++s)
        for (int t = 0; t < r2; ++t)
            for (int u = 0; u < r2; ++u) {
                if (u == inv_letter(s)) continue;
                g.schemata.push_back({g.var_F(s, t),
                                      {term(1 + s), choose(pool_excluding({inv_letter(s), u})),
                                       var(g.var_F(u, t))},
                                      0});
            }
    for (int s = 0; s < r2; ++s) g.schemata.push_back({g.var_F(s, s), {term(1 + s)}, 0});

    // cyclically reduced h: S <- X1..Xk F_{s,t} Y1..Yl, s != t^-1,
    // X,Y jointly distinct in {a} ∪ {E_v | v != s, t^-1}
    for (int s = 0; s < r2; ++s)
        for (int t = 0; t < r2; ++t) {
            if (s == inv_letter(t)) continue;
            std::uint16_t pool = pool_excluding({s, inv_letter(t)});
            g.schemata.push_back(
                {g.var_S(), {choose(pool), var(g.var_F(s, t)), choose(pool)}, 0});
        }

    // non-cyclically-reduced h, descent rules
    for (int t = 0; t < r2; ++t) {
        std::uint16_t pool = pool_excluding({t});
        g.schemata.push_back({g.var_S(),
                              {choose(pool), term(1 + t), var(g.var_Ss(t)),
                               term(1 + inv_letter(t)), choose(pool)},
                              1});
    }
    for (int s = 0; s < r2; ++s)
        for (int t = 0; t < r2; ++t) {
            if (t == inv_letter(s)) continue;  // s != t^-1
            std::uint16_t pool = pool_excluding({inv_letter(s), t});
            g.schemata.push_back({g.var_Ss(s),
                                  {choose(pool), term(1 + t), var(g.var_Ss(t)),
                                   term(1 + inv_letter(t)), choose(pool)},
                                  0});
        }
    for (int s = 0; s < r2; ++s)
        for (int t = 0; t < r2; ++t)
            for (int u = 0; u < r2; ++u) {
                if (t == inv_letter(s)) continue;  // s != t^-1
                if (u == inv_letter(t)) continue;  // t^-1 != u
                if (opts.amendBridgeSeam && u == s) continue;
                std::uint16_t pool = pool_excluding({inv_letter(s), t, inv_letter(u)});
                g.schemata.push_back(
                    {g.var_Ss(s), {choose(pool), var(g.var_F(t, u)), choose(pool)}, 0});
            }

    // h = 1: S <- eps and S <- X1..Xl with l >= 2 over {a} ∪ all E_v
    g.schemata.push_back({g.var_S(), {}, 0});
    g.schemata.push_back({g.var_S(), {choose(pool_excluding({}))}, 2});
    if (opts.amendSingleLamp) g.schemata.push_back({g.var_S(), {term(0)}, 0});

    return g;
}

Grammar lift_grammar(const Grammar& base, int kernelSize) {
    if (base.kernelSize != 1) throw std::invalid_argument("grammar is already lifted");
    if (kernelSize != 2)
        throw std::invalid_argument("only the kernel {1, z} lift is instantiated");
    Grammar g = base;
    g.kernelSize = kernelSize;
    // every nontrivial kernel letter is a one-word production from S
    g.schemata.push_back({g.var_S(), {GrammarPart{GrammarPart::Kind::KernelTerminal, 0, 0}}, 0});
    return g;
}

// ---------------------------------------------------------------------------
// Enumeration by length stratum

namespace {

struct TokenWord {
    std::string bytes;  // token ids as chars

    bool operator==(const TokenWord& o) const = default;
};

struct StateKey {
    std::uint16_t mask;
    std::string word;
    bool operator==(const StateKey& o) const = default;
};

struct StateKeyHash {
    size_t operator()(const StateKey& k) const {
        return std::hash<std::string>()(k.word) * 1315423911u + k.mask;
    }
};

using StateMap = std::unordered_map<StateKey, std::uint64_t, StateKeyHash>;

std::vector<int> to_tokens(const std::string& bytes) {
    std::vector<int> out;
    out.reserve(bytes.size());
    for (char c : bytes) out.push_back(int(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::map<std::vector<int>, std::uint64_t> enumerate_with_counts(const Grammar& g, int maxLen,
                                                                int lengthCap) {
    if (maxLen < 0 || maxLen > (lengthCap >= 0 ? lengthCap : kEnumerateCap))
        throw limit_error("grammar enumeration length exceeds configured cap");
    const int varCount = g.variable_count();
    // lang[v][len]: word -> derivation count
    std::vector<std::vector<std::unordered_map<std::string, std::uint64_t>>> lang(
        size_t(varCount),
        std::vector<std::unordered_map<std::string, std::uint64_t>>(size_t(maxLen) + 1));

    // stratum order: E's and F's (consume before recursing), then S_s, then S
    std::vector<int> varOrder;
    for (int v = 0; v < 2 * g.rank; ++v) varOrder.push_back(g.var_E(v));
    for (int s = 0; s < 2 * g.rank; ++s)
        for (int t = 0; t < 2 * g.rank; ++t) varOrder.push_back(g.var_F(s, t));
    for (int s = 0; s < 2 * g.rank; ++s) varOrder.push_back(g.var_Ss(s));
    varOrder.push_back(g.var_S());

    auto byLhs = std::vector<std::vector<const GrammarSchema*>>(size_t(varCount));
    for (const auto& sch : g.schemata) byLhs[size_t(sch.lhs)].push_back(&sch);

    for (int L = 0; L <= maxLen; ++L) {
        for (int v : varOrder) {
            for (const GrammarSchema* sch : byLhs[size_t(v)]) {
                StateMap states;
                states[{0, std::string{}}] = 1;
                for (const auto& part : sch->parts) {
                    StateMap next;
                    auto addTo = [&](StateKey k, std::uint64_t c) {
                        auto [it, fresh] = next.try_emplace(std::move(k), c);
                        if (!fresh) it->second = sat_add(it->second, c);
                    };
                    switch (part.kind) {
                        case GrammarPart::Kind::Terminal:
                            for (auto& [key, cnt] : states) {
                                if (int(key.word.size()) >= L) continue;
                                for (int tok : g.tokens_of_terminal(part.symbol))
                                    addTo({key.mask, key.word + char(tok)}, cnt);
                            }
                            break;
                        case GrammarPart::Kind::KernelTerminal:
                            for (auto& [key, cnt] : states) {
                                if (int(key.word.size()) >= L) continue;
                                addTo({key.mask, key.word + char(g.kernel_token())}, cnt);
                            }
                            break;
                        case GrammarPart::Kind::Variable:
                            for (auto& [key, cnt] : states) {
                                int room = L - int(key.word.size());
                                for (int l2 = 0; l2 <= room; ++l2)
                                    for (auto& [w2, c2] : lang[size_t(part.symbol)][size_t(l2)])
                                        addTo({key.mask, key.word + w2}, sat_mul(cnt, c2));
                            }
                            break;
                        case GrammarPart::Kind::Choose: {
                            // expand by number of picks; each pick consumes one
                            // unused pool symbol
                            StateMap frontier = states;
                            next = states;  // zero picks allowed at part level
                            while (!frontier.empty()) {
                                StateMap grown;
                                auto growTo = [&](StateKey k, std::uint64_t c) {
                                    auto [it, fresh] = grown.try_emplace(std::move(k), c);
                                    if (!fresh) it->second = sat_add(it->second, c);
                                };
                                for (auto& [key, cnt] : frontier) {
                                    for (int p = 0; p < 1 + 2 * g.rank; ++p) {
                                        if (!(part.pool & (1u << p))) continue;
                                        if (key.mask & (1u << p)) continue;
                                        std::uint16_t m2 = std::uint16_t(key.mask | (1u << p));
                                        if (p == 0) {  // terminal a
                                            if (int(key.word.size()) >= L) continue;
                                            for (int tok : g.tokens_of_terminal(0))
                                                growTo({m2, key.word + char(tok)}, cnt);
                                        } else {
                                            int ev = g.var_E(p - 1);
                                            int room = L - int(key.word.size());
                                            for (int l2 = 1; l2 <= room; ++l2)
                                                for (auto& [w2, c2] :
                                                     lang[size_t(ev)][size_t(l2)])
                                                    growTo({m2, key.word + w2},
                                                           sat_mul(cnt, c2));
                                        }
                                    }
                                }
                                for (auto& [key, cnt] : grown) {
                                    auto [it, fresh] = next.try_emplace(key, cnt);
                                    if (!fresh) it->second = sat_add(it->second, cnt);
                                }
                                frontier = std::move(grown);
                            }
                            break;
                        }
                    }
                    states = std::move(next);
                }
                for (auto& [key, cnt] : states) {
                    if (int(key.word.size()) != L) continue;
                    if (std::popcount(key.mask) < sch->minChooseTotal) continue;
                    auto& slot = lang[size_t(v)][size_t(L)][key.word];
                    slot = sat_add(slot, cnt);
                }
            }
        }
    }

    std::map<std::vector<int>, std::uint64_t> out;
    for (int L = 0; L <= maxLen; ++L)
        for (auto& [w, c] : lang[size_t(g.var_S())][size_t(L)]) out[to_tokens(w)] = c;
    return out;
}

std::vector<std::vector<int>> enumerate_language(const Grammar& g, int maxLen, int lengthCap) {
    std::vector<std::vector<int>> out;
    for (auto& [w, c] : enumerate_with_counts(g, maxLen, lengthCap)) out.push_back(w);
    return out;
}

// ---------------------------------------------------------------------------
// Chart recognition on a single token word

namespace {

struct SpanTable {
    // counts[var][i][j-i]: derivations of word[i..j) from var
    std::vector<std::vector<std::vector<std::uint64_t>>> counts;
};

/// Forward DP through one schema on word[i..j); returns the table
/// ways[part][pos][mask] (pos relative to i).
std::vector<std::vector<std::vector<std::uint64_t>>> schema_forward(
    const Grammar& g, const GrammarSchema& sch, const std::vector<int>& word, int i, int j,
    const SpanTable& spans) {
    const int n = j - i;
    const int maskCount = 1 << (1 + 2 * g.rank);
    std::vector<std::vector<std::vector<std::uint64_t>>> ways(
        sch.parts.size() + 1,
        std::vector<std::vector<std::uint64_t>>(size_t(n) + 1,
                                                std::vector<std::uint64_t>(size_t(maskCount), 0)));
    ways[0][0][0] = 1;
    for (size_t p = 0; p < sch.parts.size(); ++p) {
        const auto& part = sch.parts[p];
        switch (part.kind) {
            case GrammarPart::Kind::Terminal:
                for (int pos = 0; pos < n; ++pos)
                    for (int m = 0; m < maskCount; ++m) {
                        std::uint64_t c = ways[p][size_t(pos)][size_t(m)];
                        if (!c) continue;
                        for (int tok : g.tokens_of_terminal(part.symbol))
                            if (word[size_t(i + pos)] == tok)
                                ways[p + 1][size_t(pos) + 1][size_t(m)] =
                                    sat_add(ways[p + 1][size_t(pos) + 1][size_t(m)], c);
                    }
                break;
            case GrammarPart::Kind::KernelTerminal:
                for (int pos = 0; pos < n; ++pos)
                    for (int m = 0; m < maskCount; ++m) {
                        std::uint64_t c = ways[p][size_t(pos)][size_t(m)];
                        if (!c) continue;
                        if (word[size_t(i + pos)] == g.kernel_token())
                            ways[p + 1][size_t(pos) + 1][size_t(m)] =
                                sat_add(ways[p + 1][size_t(pos) + 1][size_t(m)], c);
                    }
                break;
            case GrammarPart::Kind::Variable:
                for (int pos = 0; pos <= n; ++pos)
                    for (int m = 0; m < maskCount; ++m) {
                        std::uint64_t c = ways[p][size_t(pos)][size_t(m)];
                        if (!c) continue;
                        for (int end = pos; end <= n; ++end) {
                            std::uint64_t sub =
                                spans.counts[size_t(part.symbol)][size_t(i + pos)][size_t(end - pos)];
                            if (sub)
                                ways[p + 1][size_t(end)][size_t(m)] = sat_add(
                                    ways[p + 1][size_t(end)][size_t(m)], sat_mul(c, sub));
                        }
                    }
                break;
            case GrammarPart::Kind::Choose: {
                // within-part consumption: masks grow, positions advance
                auto cur = ways[p];
                for (int pos = 0; pos <= n; ++pos)
                    for (int m = 0; m < maskCount; ++m) {
                        std::uint64_t c = cur[size_t(pos)][size_t(m)];
                        if (!c) continue;
                        for (int sym = 0; sym < 1 + 2 * g.rank; ++sym) {
                            if (!(part.pool & (1u << sym))) continue;
                            if (m & (1u << sym)) continue;
                            int m2 = m | (1 << sym);
                            if (sym == 0) {
                                if (pos < n)
                                    for (int tok : g.tokens_of_terminal(0))
                                        if (word[size_t(i + pos)] == tok)
                                            cur[size_t(pos) + 1][size_t(m2)] = sat_add(
                                                cur[size_t(pos) + 1][size_t(m2)], c);
                            } else {
                                int ev = g.var_E(sym - 1);
                                for (int end = pos + 1; end <= n; ++end) {
                                    std::uint64_t sub =
                                        spans.counts[size_t(ev)][size_t(i + pos)][size_t(end - pos)];
                                    if (sub)
                                        cur[size_t(end)][size_t(m2)] = sat_add(
                                            cur[size_t(end)][size_t(m2)], sat_mul(c, sub));
                                }
                            }
                        }
                    }
                ways[p + 1] = std::move(cur);
                break;
            }
        }
    }
    return ways;
}

std::uint64_t schema_count(const Grammar& g, const GrammarSchema& sch, const std::vector<int>& word,
                           int i, int j, const SpanTable& spans) {
    auto ways = schema_forward(g, sch, word, i, j, spans);
    std::uint64_t total = 0;
    const int maskCount = 1 << (1 + 2 * g.rank);
    for (int m = 0; m < maskCount; ++m)
        if (std::popcount(unsigned(m)) >= sch.minChooseTotal)
            total = sat_add(total, ways[sch.parts.size()][size_t(j - i)][size_t(m)]);
    return total;
}

SpanTable build_span_table(const Grammar& g, const std::vector<int>& word) {
    const int n = int(word.size());
    const int varCount = g.variable_count();
    SpanTable spans;
    spans.counts.assign(size_t(varCount),
                        std::vector<std::vector<std::uint64_t>>(
                            size_t(n) + 1, std::vector<std::uint64_t>(size_t(n) + 1, 0)));

    std::vector<int> varOrder;
    for (int v = 0; v < 2 * g.rank; ++v) varOrder.push_back(g.var_E(v));
    for (int s = 0; s < 2 * g.rank; ++s)
        for (int t = 0; t < 2 * g.rank; ++t) varOrder.push_back(g.var_F(s, t));
    for (int s = 0; s < 2 * g.rank; ++s) varOrder.push_back(g.var_Ss(s));
    varOrder.push_back(g.var_S());

    auto byLhs = std::vector<std::vector<const GrammarSchema*>>(size_t(varCount));
    for (const auto& sch : g.schemata) byLhs[size_t(sch.lhs)].push_back(&sch);

    for (int len = 0; len <= n; ++len)
        for (int i = 0; i + len <= n; ++i)
            for (int v : varOrder)
                for (const GrammarSchema* sch : byLhs[size_t(v)])
                    spans.counts[size_t(v)][size_t(i)][size_t(len)] =
                        sat_add(spans.counts[size_t(v)][size_t(i)][size_t(len)],
                                schema_count(g, *sch, word, i, i + len, spans));
    return spans;
}

/// Reconstructs one parse tree (preorder = leftmost derivation). Appends
/// production lines "V -> sym ..." to out.
void derive_one(const Grammar& g, const SpanTable& spans, const std::vector<int>& word, int var,
                int i, int j, std::vector<std::string>& out,
                const std::vector<std::vector<const GrammarSchema*>>& byLhs) {
    for (const GrammarSchema* sch : byLhs[size_t(var)]) {
        if (!schema_count(g, *sch, word, i, j, spans)) continue;
        auto fwd = schema_forward(g, *sch, word, i, j, spans);
        // walk backwards from an accepting state to recover one path
        const int maskCount = 1 << (1 + 2 * g.rank);
        int endMask = -1;
        for (int m = 0; m < maskCount && endMask < 0; ++m)
            if (std::popcount(unsigned(m)) >= sch->minChooseTotal &&
                fwd[sch->parts.size()][size_t(j - i)][size_t(m)])
                endMask = m;
        // forward replay with backtracking over the (small) branching, aiming
        // for the accepting (endPos, endMask) state
        std::vector<std::pair<std::string, std::array<int, 3>>> rhs;  // name + child span
        std::function<bool(size_t, int, int)> walk = [&](size_t p, int pos, int mask) -> bool {
            if (p == sch->parts.size())
                return pos == j - i && mask == endMask;
            const auto& part = sch->parts[p];
            switch (part.kind) {
                case GrammarPart::Kind::Terminal:
                    if (pos < j - i)
                        for (int tok : g.tokens_of_terminal(part.symbol))
                            if (word[size_t(i + pos)] == tok) {
                                rhs.push_back({g.token_name(tok), {-1, 0, 0}});
                                if (walk(p + 1, pos + 1, mask)) return true;
                                rhs.pop_back();
                            }
                    return false;
                case GrammarPart::Kind::KernelTerminal:
                    if (pos < j - i && word[size_t(i + pos)] == g.kernel_token()) {
                        rhs.push_back({g.token_name(g.kernel_token()), {-1, 0, 0}});
                        if (walk(p + 1, pos + 1, mask)) return true;
                        rhs.pop_back();
                    }
                    return false;
                case GrammarPart::Kind::Variable:
                    for (int end = pos; end <= j - i; ++end) {
                        if (!spans.counts[size_t(part.symbol)][size_t(i + pos)][size_t(end - pos)])
                            continue;
                        rhs.push_back(
                            {g.variable_name(part.symbol), {part.symbol, i + pos, i + end}});
                        if (walk(p + 1, end, mask)) return true;
                        rhs.pop_back();
                    }
                    return false;
                case GrammarPart::Kind::Choose: {
                    // option 1: leave the part
                    if (walk(p + 1, pos, mask)) return true;
                    // option 2: consume one more pool symbol
                    for (int sym = 0; sym < 1 + 2 * g.rank; ++sym) {
                        if (!(part.pool & (1u << sym)) || (mask & (1 << sym))) continue;
                        if (sym == 0) {
                            if (pos < j - i)
                                for (int tok : g.tokens_of_terminal(0))
                                    if (word[size_t(i + pos)] == tok) {
                                        rhs.push_back({g.token_name(tok), {-1, 0, 0}});
                                        if (walk(p, pos + 1, mask | 1)) return true;
                                        rhs.pop_back();
                                    }
                        } else {
                            int ev = g.var_E(sym - 1);
                            for (int end = pos + 1; end <= j - i; ++end) {
                                if (!spans.counts[size_t(ev)][size_t(i + pos)][size_t(end - pos)])
                                    continue;
                                rhs.push_back({g.variable_name(ev), {ev, i + pos, i + end}});
                                if (walk(p, end, mask | (1 << sym))) return true;
                                rhs.pop_back();
                            }
                        }
                    }
                    return false;
                }
            }
            return false;
        };
        if (!walk(0, 0, 0)) continue;
        std::string line = g.variable_name(var) + " ->";
        if (rhs.empty()) line += " eps";
        for (auto& [name, child] : rhs) line += " " + name;
        out.push_back(line);
        for (auto& [name, child] : rhs)
            if (child[0] >= 0) derive_one(g, spans, word, child[0], child[1], child[2], out, byLhs);
        return;
    }
    throw std::logic_error("derive_one called on an underivable span");
}

}  // namespace

ParseResult recognize(const Grammar& g, const std::vector<int>& tokens) {
    for (int t : tokens)
        if (t < 0 || t >= g.token_count()) throw std::invalid_argument("unknown token id");
    SpanTable spans = build_span_table(g, tokens);
    ParseResult res;
    res.derivations = spans.counts[size_t(g.var_S())][0][tokens.size()];
    res.accepted = res.derivations > 0;
    if (res.accepted) {
        auto byLhs = std::vector<std::vector<const GrammarSchema*>>(size_t(g.variable_count()));
        for (const auto& sch : g.schemata) byLhs[size_t(sch.lhs)].push_back(&sch);
        derive_one(g, spans, tokens, g.var_S(), 0, int(tokens.size()), res.derivation, byLhs);
    }
    return res;
}

std::vector<int> parse_tokens(const Grammar& g, const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (pos + 1 == text.size() && text[pos] == 'e' && out.empty() && text.size() == 1) break;
        int best = -1;
        size_t bestLen = 0;
        for (int tok = 0; tok < g.token_count(); ++tok) {
            std::string name = g.token_name(tok);
            if (name.size() > bestLen && text.compare(pos, name.size(), name) == 0) {
                best = tok;
                bestLen = name.size();
            }
        }
        if (best < 0)
            throw std::invalid_argument("cannot tokenize grammar word at position " +
                                        std::to_string(pos));
        out.push_back(best);
        pos += bestLen;
    }
    return out;
}

std::string format_tokens(const Grammar& g, const std::vector<int>& tokens) {
    if (tokens.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) s += " ";
        s += g.token_name(tokens[i]);
    }
    return s;
}

void emit_grammar(const Grammar& g, std::ostream& out, bool schematic) {
    auto poolNames = [&](std::uint16_t pool) {
        std::string s;
        for (int p = 0; p < 1 + 2 * g.rank; ++p)
            if (pool & (1u << p)) {
                if (!s.empty()) s += ",";
                s += p == 0 ? "a" : "E_" + g.terminal_name(p);
            }
        return s;
    };
    for (const auto& sch : g.schemata) {
        if (schematic) {
            std::string line = g.variable_name(sch.lhs) + " ->";
            bool any = false;
            for (const auto& part : sch.parts) {
                any = true;
                switch (part.kind) {
                    case GrammarPart::Kind::Terminal:
                        line += " " + g.terminal_name(part.symbol);
                        break;
                    case GrammarPart::Kind::KernelTerminal:
                        line += " z";
                        break;
                    case GrammarPart::Kind::Variable:
                        line += " " + g.variable_name(part.symbol);
                        break;
                    case GrammarPart::Kind::Choose:
                        line += " {distinct* of " + poolNames(part.pool) + "}";
                        break;
                }
            }
            if (!any) line += " eps";
            if (sch.minChooseTotal > 0)
                line += "   [choose >= " + std::to_string(sch.minChooseTotal) + "]";
            out << line << "\n";
            continue;
        }
        // expand all admissible ordered selections
        std::vector<std::string> rhs;
        std::function<void(size_t, std::uint16_t, int)> expand = [&](size_t p, std::uint16_t mask,
                                                                     int chosen) {
            if (p == sch.parts.size()) {
                if (chosen < sch.minChooseTotal) return;
                std::string line = g.variable_name(sch.lhs) + " ->";
                if (rhs.empty()) line += " eps";
                for (auto& r : rhs) line += " " + r;
                out << line << "\n";
                return;
            }
            const auto& part = sch.parts[p];
            switch (part.kind) {
                case GrammarPart::Kind::Terminal:
                    rhs.push_back(g.terminal_name(part.symbol));
                    expand(p + 1, mask, chosen);
                    rhs.pop_back();
                    break;
                case GrammarPart::Kind::KernelTerminal:
                    rhs.push_back("z");
                    expand(p + 1, mask, chosen);
                    rhs.pop_back();
                    break;
                case GrammarPart::Kind::Variable:
                    rhs.push_back(g.variable_name(part.symbol));
                    expand(p + 1, mask, chosen);
                    rhs.pop_back();
                    break;
                case GrammarPart::Kind::Choose: {
                    expand(p + 1, mask, chosen);  // stop choosing, move on
                    for (int sym = 0; sym < 1 + 2 * g.rank; ++sym) {
                        if (!(part.pool & (1u << sym)) || (mask & (1u << sym))) continue;
                        rhs.push_back(sym == 0 ? "a" : "E_" + g.terminal_name(sym));
                        expand(p, std::uint16_t(mask | (1u << sym)), chosen + 1);
                        rhs.pop_back();
                    }
                    break;
                }
            }
        };
        expand(0, 0, 0);
    }
}

// ---------------------------------------------------------------------------
// Brute-force oracle

WreathElement evaluate_tokens_wreath(const std::vector<int>& tokens, int rank) {
    BaseGroup f = BaseGroup::free_group(rank);
    WreathElement acc = w_identity(f);
    for (int t : tokens) {
        if (t == 0)
            acc = w_mul(acc, w_lamp(f, f.identity()));
        else {
            int v = t - 1;
            int letter = v / 2 + 1;
            acc = w_mul(acc, w_shift(f.from_letters(
                                 {std::int8_t(v % 2 == 0 ? letter : -letter)})));
        }
    }
    return acc;
}

std::vector<std::vector<int>> conjgeo_oracle(int maxLen, int rank) {
    if (maxLen > 7 || rank > 2) throw limit_error("conjgeo oracle capped at maxLen 7, rank 2");
    BaseGroup f = BaseGroup::free_group(rank);
    std::unordered_map<std::string, std::int64_t> minLen;
    std::vector<std::vector<int>> out;
    std::vector<int> word;
    const int tokenCount = 1 + 2 * rank;

    std::function<void(const WreathElement&)> walk = [&](const WreathElement& cur) {
        std::string key = w_key(cur);
        auto it = minLen.find(key);
        if (it == minLen.end()) it = minLen.emplace(key, wreath_conj_min_length_Fr(cur)).first;
        if (std::int64_t(word.size()) == it->second) out.push_back(word);
        if (int(word.size()) == maxLen) return;
        for (int t = 0; t < tokenCount; ++t) {
            word.push_back(t);
            WreathElement next =
                t == 0 ? w_mul(cur, w_lamp(f, f.identity()))
                       : w_mul(cur, w_shift(f.from_letters({std::int8_t(
                                  (t - 1) % 2 == 0 ? (t - 1) / 2 + 1 : -((t - 1) / 2 + 1))})));
            walk(next);
            word.pop_back();
        }
    };
    walk(w_identity(f));
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace lce
