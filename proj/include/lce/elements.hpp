#pragma once

#include "lce/symmetric_set.hpp"

namespace lce {

/// Element of N(H,I) in the explicit realization: a finite lamp support
/// (stored ascending in the fixed total order) and the central bit. The pair
/// (support, center) IS the canonical form a_{h1}...a_{hl} z^eps with
/// h1 > ... > hl, so no extra normalization pass exists anywhere.
struct NElement {
    std::vector<BaseElement> support;  // ascending, unique
    bool center = false;

    bool operator==(const NElement&) const = default;
};

/// Element of G(H,I) = N(H,I) x| H, denoting
/// (prod over support, descending) a_g . z^center . shift.
struct GElement {
    std::vector<BaseElement> support;  // ascending, unique
    bool center = false;
    BaseElement shift;

    bool operator==(const GElement&) const = default;
};

/// Element (u, h) of the plain wreath product C2 wr H (the tau image).
struct WreathElement {
    std::vector<BaseElement> support;  // ascending, unique
    BaseElement shift;

    bool operator==(const WreathElement&) const = default;
};

/// Everything element arithmetic needs: the base group and the descriptor.
struct GroupCtx {
    BaseGroup base;
    SymmetricSet set;

    GroupCtx(BaseGroup b, SymmetricSet s) : base(b), set(std::move(s)) {
        if (!(set.group() == base))
            throw std::invalid_argument("descriptor group does not match base group");
    }
};

// -- cocycle and N(H,I) arithmetic --------------------------------------------

/// omega_I(u, v) = sum over g in u, h in v with g < h of chi_I(g^-1 h), mod 2.
bool omega(const std::vector<BaseElement>& u, const std::vector<BaseElement>& v,
           const SymmetricSet& I, const TotalOrder& ord = {});

NElement n_identity();
NElement n_lamp(const BaseElement& position);             // a_h
NElement n_mul(const NElement& x, const NElement& y, const SymmetricSet& I);
NElement n_inv(const NElement& x, const SymmetricSet& I);

/// Image of x under the automorphism a_g -> a_{kg}, z -> z. The center
/// correction is the re-sorting cost of the canonical descending product:
/// delta = sum over pairs g > g' in supp with kg < kg' of chi_I(g^-1 g').
/// For H = Z it vanishes (translations preserve the order).
NElement n_translate(const BaseElement& k, const NElement& x, const SymmetricSet& I);

/// Central commutator bit of Cor 1.2: eps = sum_{g in supp x} sum_{h in supp y}
/// chi_I(g^-1 h) mod 2, so that [x, y] = z^eps.
bool commutator_central(const NElement& x, const NElement& y, const SymmetricSet& I);

// -- G(H,I) arithmetic ---------------------------------------------------------

GElement g_identity(const BaseGroup& base);
GElement g_lamp(const BaseGroup& base, const BaseElement& position);  // a_h
GElement g_center(const BaseGroup& base);                             // z
GElement g_shift(const BaseElement& translation);                     // h
GElement g_from_n(const NElement& n, const BaseGroup& base);

GElement g_mul(const GElement& x, const GElement& y, const SymmetricSet& I);
GElement g_inv(const GElement& x, const SymmetricSet& I);
GElement g_conjugate(const GElement& c, const GElement& x, const SymmetricSet& I);
bool g_is_identity(const GElement& x);

NElement g_lamp_part(const GElement& x);   // the N-part (support and bit)
const BaseElement& g_pi(const GElement& x);  // pi: projection to H

/// tau: G(H,I) -> C2 wr H, drops the center bit.
WreathElement tau(const GElement& x);

// -- C2 wr H arithmetic --------------------------------------------------------

WreathElement w_identity(const BaseGroup& base);
WreathElement w_lamp(const BaseGroup& base, const BaseElement& position);
WreathElement w_shift(const BaseElement& translation);
WreathElement w_mul(const WreathElement& x, const WreathElement& y);
WreathElement w_inv(const WreathElement& x);
WreathElement w_conjugate(const WreathElement& c, const WreathElement& x);
bool w_is_identity(const WreathElement& x);

// -- keys and rendering --------------------------------------------------------

std::string g_key(const GElement& x);
std::string w_key(const WreathElement& x);

/// Canonical rendering: "a(h)" factors in descending order, then "z", then the
/// translation ("t(k)" over Z and Z/n, "w(st)" over F_r, "v(1,0)" over Z^d);
/// parts joined by ".", the identity rendered as "e".
std::string g_format(const GElement& x, const BaseGroup& base);

/// Inverse of g_format: re-parses a canonical rendering to the element.
GElement g_parse_canonical(const std::string& text, const BaseGroup& base,
                           const SymmetricSet& I);

}  // namespace lce
