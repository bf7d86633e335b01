#pragma once

#include <optional>

#include "lce/elements.hpp"

namespace lce {

/// Finite quotient G(Z/n, J) with its full multiplication data; z maps to a
/// nonidentity central element and |G| = 2^{n+1} * n.
struct FiniteQuotientWitness {
    std::int64_t modulus = 1;
    SymmetricSet imageSet;             // J over Z/n
    std::vector<GElement> elements;    // all 2^{n+1} * n elements
    std::vector<std::vector<std::int32_t>> table;  // product indices

    std::int32_t index_of(const GElement& g) const;
};

FiniteQuotientWitness build_finite_quotient(std::int64_t n, const SymmetricSet& J);

struct ResidualFiniteness {
    bool residually_finite = false;
    std::optional<FiniteQuotientWitness> witness;  // built when the modulus is small
    std::int64_t witness_modulus = 0;              // 0 when not residually finite
};

/// Prop 5.1 specialized over Z: residually finite iff the descriptor denotes a
/// (globally) periodic set; the witness is the quotient at the minimal period.
ResidualFiniteness is_residually_finite_GI(const SymmetricSet& I,
                                           std::int64_t witnessCap = 6);

/// G_I ~ G_J iff I = J as sets (Aut(Z) = {+-1} and both sets are symmetric);
/// decided on canonical descriptor forms.
bool iso_GI(const SymmetricSet& I, const SymmetricSet& J);

struct PeriodicityClass {
    bool periodic = false;       // globally periodic
    std::int64_t period = 1;     // minimal (eventual) period
    std::int64_t threshold = 0;  // minimal K; 0 when periodic
};

PeriodicityClass eventual_periodicity(const SymmetricSet& I);

/// The experiment behind the "smallest quotient witnessing z != 1" question:
/// all normal subgroups of the witness avoiding z, with quotient orders.
struct QuotientExperimentRow {
    size_t subgroup_order;
    size_t quotient_order;
};
std::vector<QuotientExperimentRow> quotient_experiment(const FiniteQuotientWitness& w);

}  // namespace lce
