#pragma once

#include <optional>

#include "lce/elements.hpp"

namespace lce {

struct WreathCertificate {
    WreathElement conjugator;
    bool verified = false;
};

struct ConjugacyCertificate {
    GElement conjugator;
    bool verified = false;
};

/// Conjugacy in C2 wr Z. Shift parts must agree; for shift 0 the supports must
/// be translates, for shift k != 0 the per-coset lamp parities mod |k| must
/// agree up to a cyclic shift. Certificates are always verified by explicit
/// conjugation before being returned.
std::optional<WreathCertificate> wreath_conjugate_decide_Z(const WreathElement& g,
                                                           const WreathElement& h);

/// Lemma 6.1 criterion: x ~ xz iff some g in H sees an odd overlap
/// |g^-1 supp(x) ∩ I|. Requires pi(x) = 0 and a structured descriptor;
/// dispatches on the descriptor class (periodic scan / aperiodic shortcut /
/// abelianized window search).
bool is_conj_z_twist(const GElement& x, const SymmetricSet& I);

/// Exhibits the witness position g (complete finite scan; exists whenever
/// is_conj_z_twist holds, and for aperiodic descriptors whenever the support
/// is nonempty).
std::optional<BaseElement> find_twist_witness(const NElement& x, const SymmetricSet& I);

/// Full h ~ hz subroutine, any h in G_I (the pi(h) != 0 case is never
/// conjugate by the cyclic-centralizer argument).
bool h_sim_hz(const GElement& h, const SymmetricSet& I);

/// The conjugacy decision in G_I over Z: decide at the tau level, lift a
/// conjugator, then settle the z ambiguity with h ~ hz.
std::optional<ConjugacyCertificate> conjugate_decide_GI(const GElement& g, const GElement& h,
                                                        const SymmetricSet& I);

/// Word length in (C2 wr F_r, T):
/// |supp| + 2 E(Conv(supp ∪ {1,h})) - d(1,h).
std::int64_t wreath_length_Fr(const WreathElement& g);

/// Minimal length over the conjugacy class: strict-descent (with plateau
/// exploration) over letter conjugations and lamp transfers (x, hx).
std::int64_t wreath_conj_min_length_Fr(const WreathElement& g);

/// Prop A.1 conditions (1)-(4) for h != 1; Prop A.2 (u = 0 or 1 in Conv(supp))
/// for h = 1.
bool is_conjugacy_minimal_Fr(const WreathElement& g);

}  // namespace lce
