#pragma once

#include <optional>

#include "lce/laurent.hpp"
#include "lce/words.hpp"

namespace lce {

/// A word in the generators of a subgroup/submonoid: (generator index,
/// exponent +-1) pairs.
using GenWord = std::vector<std::pair<int, int>>;

/// Finitely generated subgroup of C2 wr Z, reduced to module data: d = gcd of
/// the projections, and the lamp parts of the pi-trivialized generators as a
/// row-reduced basis over F2[t^{+-d}] (split into d residue components).
class WreathSubgroupData {
public:
    explicit WreathSubgroupData(std::vector<WreathElement> generators);

    std::int64_t projection_index() const { return d_; }
    const std::vector<WreathElement>& generators() const { return gens_; }
    const std::vector<LaurentF2>& module_generators() const { return moduleGens_; }
    size_t basis_rank() const { return rows_.size(); }

    /// Membership with an explicit generator word on success (verified).
    std::optional<GenWord> membership(const WreathElement& target) const;

private:
    struct Row {
        std::vector<LaurentF2> comps;  // d components (x = t^d); d=0: 1 component
        std::vector<LaurentF2> expr;   // coefficients over the module generators
    };
    void strip_units(Row& row) const;
    void insert_row(Row row);
    std::optional<std::vector<LaurentF2>> reduce(std::vector<LaurentF2> comps) const;

    std::vector<WreathElement> gens_;
    std::int64_t d_ = 0;
    GenWord h0_;                          // word with projection d (empty if d = 0)
    std::vector<GenWord> gammaWords_;     // per generator: g_i h0^{-k_i/d}
    std::vector<LaurentF2> moduleGens_;   // lamp parts of the gammas
    std::vector<Row> rows_;               // echelon basis
};

WreathElement evaluate_gen_word(const std::vector<WreathElement>& gens, const GenWord& word);
GElement evaluate_gen_word_G(const std::vector<GElement>& gens, const GenWord& word,
                             const SymmetricSet& I);

/// tau-level membership (Romanovskii black box made concrete); yes-answers
/// come with a verified generator expression.
std::optional<GenWord> wreath_membership(const WreathElement& target,
                                         const WreathSubgroupData& sub);

enum class ZStatusKind : std::uint8_t { ContainsZ, NotContainsZ, Unknown };

struct ZStatus {
    ZStatusKind kind = ZStatusKind::Unknown;
    GenWord witness;      // evaluates to z when ContainsZ
    std::string reason;   // proof class/explanation
};

struct SubgroupHandle {
    std::vector<GElement> generators;
    ZStatus z_status;
};

/// Decides z in <generators>: the <a, t^n> family via the descriptor
/// (exists i in I with n | i), pi-trivial generator sets by exhaustive finite
/// closure, a structural NotContainsZ certificate (all lamp-position
/// difference classes mod d miss I and no generator carries the center bit),
/// and otherwise bounded search / Unknown.
ZStatus resolve_z_status(const std::vector<GElement>& generators, const SymmetricSet& I,
                         size_t searchBound = 4096);

struct MembershipAnswer {
    bool member = false;
    GenWord witness;  // expression over the subgroup generators when member
};

/// Subgroup membership in G_I over Z (z-in and z-out branches); requires a
/// resolved z_status and a structured descriptor.
MembershipAnswer subgroup_membership_GI(const GElement& target, const SubgroupHandle& sub,
                                        const SymmetricSet& I);

/// Submonoid membership: mixed projection signs collapse to the subgroup
/// case; otherwise bounded alternation search h0 k1 h1 ... with at most
/// |pi(target)| projection-nontrivial factors.
MembershipAnswer submonoid_membership(const GElement& target,
                                      const std::vector<GElement>& generators,
                                      const SymmetricSet& I, size_t stateCap = 1 << 16);

/// Descriptor of J = { j : n*j in I } for the subgroup <a, t^n, z> ~ G_J.
SymmetricSet subgroup_as_GJ(std::int64_t n, const SymmetricSet& I);

}  // namespace lce
