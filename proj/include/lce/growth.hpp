#pragma once

#include <functional>

#include "lce/words.hpp"

namespace lce {

/// Integer polynomial, coefficients ascending.
struct Polynomial {
    std::vector<std::int64_t> c;

    static Polynomial from(std::initializer_list<std::int64_t> v) { return {v}; }
    std::int64_t at(size_t i) const { return i < c.size() ? c[i] : 0; }
    void trim();
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Ratio of integer polynomials with exact Taylor extraction via the linear
/// recurrence from the denominator (constant term must be a unit).
class RationalSeries {
public:
    RationalSeries(Polynomial numerator, Polynomial denominator);

    std::int64_t coefficient(int n) const;
    std::vector<std::int64_t> coefficients(int upTo) const;

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    RationalSeries operator+(const RationalSeries& other) const;
    RationalSeries operator-(const RationalSeries& other) const;

private:
    Polynomial num_, den_;
    mutable std::vector<std::int64_t> taylor_;
};

/// The classical closed form for (C2 wr Z, T); its coefficients count
/// spheres (verified against BFS: 1, 3, 6, 12, ...).
RationalSeries series_c2wrz_sphere_printed();

/// Ball-count series of (C2 wr Z, T): the printed form divided by (1-x), so
/// coefficient n equals beta(n) = #ball(n) (1, 4, 10, 22, ...).
RationalSeries series_c2wrz();

/// Ball-count series of (G_I, S): beta_S(n) = 1 + [n>=2] + 2(beta_T(n) - 1),
/// which is the displayed identity read at count level; independent of I.
RationalSeries series_GI_S();

// ---------------------------------------------------------------------------

/// Labelled Cayley ball: vertices in deterministic BFS discovery order, one
/// out-edge slot per generator (-1 when the target leaves the ball), and the
/// cumulative counts beta[0..radius].
struct LabelledBall {
    int radius = 0;
    size_t genCount = 0;
    std::vector<std::int64_t> beta;
    std::vector<std::vector<std::int32_t>> edges;  // [vertex][generator] -> vertex or -1

    /// Flattened edge table; equal codes == rooted labelled isomorphism
    /// (the graphs are deterministic, so BFS numbering is canonical).
    std::vector<std::int32_t> canonical_code() const;
};

inline constexpr int kBfsCapZ = 10;
inline constexpr int kBfsCapFree = 7;

/// Exact ball of (G(H,I), gens); dedup via canonical element keys.
LabelledBall bfs_ball(const GroupCtx& ctx, const GenSet& gens, int radius,
                      int radiusCap = -1);

/// Exact ball of (C2 wr H, gens) at the wreath level.
LabelledBall bfs_ball_wreath(const GenSet& gens, int radius, int radiusCap = -1);

/// Backtracking-free direct matcher: rebuilds the root-preserving label map by
/// parallel BFS and validates every edge both ways. Guards the canonical-code
/// comparison against root-stabilizer subtleties.
bool verify_rooted_isomorphic(const LabelledBall& a, const LabelledBall& b);

/// Lemma 3.3 check: labelled balls of radius 2r+3 of (G_I, S') and (G_J, S').
bool marked_ball_isomorphic(const SymmetricSet& I, const SymmetricSet& J, int r);

using BetaOracle = std::function<std::int64_t(int)>;

/// beta oracle backed by a BFS of (G_I, S').
BetaOracle beta_oracle_sprime(const SymmetricSet& I);

/// Recovers I ∩ [-rmax, rmax] from ball sizes of (G_I, S') via the
/// beta(2r+4) comparison with the internally simulated G_{I_r}; throws
/// std::logic_error when the oracle matches neither branch.
std::vector<std::int64_t> reconstruct_I_from_beta(const BetaOracle& beta, int rmax);

}  // namespace lce
