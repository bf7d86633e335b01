#pragma once

#include <cstdint>
#include <map>
#include <ostream>

#include "lce/elements.hpp"

namespace lce {

/// Production schema part. Choose parts pick an ordered sequence of pairwise
/// distinct symbols from a pool; all Choose parts of one schema share the
/// spent-set, so distinctness is joint across them (this is how the
/// "X_i, Y_j are distinct elements of ..." families are materialized without
/// expanding every ordering into its own production).
struct GrammarPart {
    enum class Kind : std::uint8_t { Terminal, Variable, Choose, KernelTerminal };
    Kind kind = Kind::Terminal;
    int symbol = 0;           // terminal id or variable id
    std::uint16_t pool = 0;   // Choose: bit 0 = terminal a, bit 1+v = E_v
};

struct GrammarSchema {
    int lhs = 0;
    std::vector<GrammarPart> parts;
    int minChooseTotal = 0;  // lower bound on the joint number of chosen symbols
};

struct GrammarOptions {
    /// Adds S <- a. The strict h=1 rule demands >= 2 factors, which excludes
    /// the single lamp at the origin even though it is conjugacy-minimal; the
    /// oracle comparison pins this down, see the README notes.
    bool amendSingleLamp = true;
    /// Adds u != s to the S_s <- X.. F_{t,u} ..Y family. Without it the
    /// non-reduced seam w c w^-1 with c ending in s slips through.
    bool amendBridgeSeam = true;
};

/// Instantiated grammar for ConjGeo(C2 wr F_r, T) (rank 1..4), or its lift to
/// G(F_r, I) generating sets (kernelSize 2 splits every terminal into the two
/// z-coset preimages and adds the kernel letter as a one-word production).
class Grammar {
public:
    int rank = 2;
    int kernelSize = 1;  // 1 = plain wreath alphabet; 2 = lifted by {1, z}
    GrammarOptions options;
    std::vector<GrammarSchema> schemata;

    int terminal_count() const { return 1 + 2 * rank; }
    int token_count() const;
    int variable_count() const;

    // variable ids: S = 0, E_v = 1+v, F_{s,t} = 1+2r + s*2r + t,
    //               S_s = 1+2r+4r^2 + s, for signed letters v,s,t in [0, 2r)
    int var_S() const { return 0; }
    int var_E(int v) const { return 1 + v; }
    int var_F(int s, int t) const { return 1 + 2 * rank + s * 2 * rank + t; }
    int var_Ss(int s) const { return 1 + 2 * rank + 4 * rank * rank + s; }

    std::string variable_name(int id) const;
    std::string terminal_name(int t) const;  // a, s, S, t, T, ...
    std::string token_name(int tok) const;   // lifted adds az, sz, ..., z

    /// Tokens of one terminal (1 or kernelSize of them); kernel token id.
    std::vector<int> tokens_of_terminal(int t) const;
    int kernel_token() const;
};

Grammar build_conjgeo_grammar(int rank, GrammarOptions opts = {});

/// Finite-kernel lift (the short-exact-sequence lemma): terminals split into
/// their tau-preimages, the nontrivial kernel letters join as one-letter
/// words. Only kernel size 2 (the {1, z} center) is instantiated here.
Grammar lift_grammar(const Grammar& base, int kernelSize);

struct ParseResult {
    bool accepted = false;
    std::uint64_t derivations = 0;          // exact, saturating far above 2
    std::vector<std::string> derivation;    // one leftmost derivation if accepted
};

/// Chart recognition over token sequences; counts leftmost derivations exactly
/// as the fully expanded grammar would (orderings and splits included).
ParseResult recognize(const Grammar& g, const std::vector<int>& tokens);

/// L(S) ∩ tokens^{<= maxLen} with derivation counts, built bottom-up by
/// length stratum. Throws limit_error beyond the cap (default 8, overridable).
std::map<std::vector<int>, std::uint64_t> enumerate_with_counts(const Grammar& g, int maxLen,
                                                                int lengthCap = -1);
std::vector<std::vector<int>> enumerate_language(const Grammar& g, int maxLen,
                                                 int lengthCap = -1);

std::vector<int> parse_tokens(const Grammar& g, const std::string& text);
std::string format_tokens(const Grammar& g, const std::vector<int>& tokens);

/// One production per line; expanded lists every admissible ordered selection,
/// schematic prints the compact pool form.
void emit_grammar(const Grammar& g, std::ostream& out, bool schematic);

/// Brute-force ConjGeo(C2 wr F_r, T) ∩ T^{<= maxLen}: a word is kept iff its
/// length equals the descent minimum over the conjugacy class. maxLen <= 7,
/// rank <= 2.
std::vector<std::vector<int>> conjgeo_oracle(int maxLen, int rank);

/// Evaluates an unlifted token word in C2 wr F_r.
WreathElement evaluate_tokens_wreath(const std::vector<int>& tokens, int rank);

}  // namespace lce
