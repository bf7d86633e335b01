#pragma once

#include <functional>

#include "lce/elements.hpp"

namespace lce {

/// Supported injections H' -> H for Cor 1.3(a):
/// Z -> Z, n |-> d*n (d != 0), and Z -> F_r, n |-> t^n (r >= 2).
std::function<BaseElement(const BaseElement&)> iota_scale(std::int64_t d);
std::function<BaseElement(const BaseElement&)> iota_power_t(int rank);

/// Image of g under the embedding induced by iota: a_h -> a_{iota(h)},
/// z -> z, h -> iota(h). The center bit picks up the canonical-form
/// re-sorting cost (same shape as the translate_n correction), computed
/// from the source descriptor.
GElement induced_embedding(const std::function<BaseElement(const BaseElement&)>& iota,
                           const SymmetricSet& sourceSet, const GElement& g);

/// Pushforward descriptor along n |-> d*n: J = d*I as a Z-descriptor.
SymmetricSet pushforward_scale(const SymmetricSet& I, std::int64_t d);

/// The residue image J of a periodic I under Z ->> Z/n (requires period | n).
SymmetricSet quotient_set(std::int64_t n, const SymmetricSet& I);

/// Image of g under G(Z,I) ->> G(Z/n, J) (Cor 1.3(b)); evaluates the canonical
/// word of g inside the finite group, so z maps to the nontrivial central
/// element.
GElement induced_quotient(std::int64_t n, const SymmetricSet& I, const GElement& g);

}  // namespace lce
