#pragma once

#include <functional>
#include <memory>

#include "lce/base_group.hpp"

namespace lce {

enum class SetKind : std::uint8_t {
    Finite,
    Periodic,             // over Z (residues mod p) or Z^d (residue vectors mod p)
    EventuallyPeriodic,   // over Z: explicit window on [-K,K], periodic tail
    AbPullback,           // over F_r: preimage of a set over Z^r under abelianization
    Unchecked,            // opaque membership callback, no structure guarantees
};

/// Decidable descriptor of a symmetric subset I of H with I = I^-1 and 1 not
/// in I. Construction validates both invariants for structured variants and
/// rejects violations instead of silently symmetrizing.
class SymmetricSet {
public:
    static SymmetricSet empty_set(BaseGroup group);
    static SymmetricSet finite(BaseGroup group, std::vector<BaseElement> elements);
    /// Over Z: i in I iff (i mod p) in residues; residues in [1, p-1].
    static SymmetricSet periodic(std::int64_t period, std::vector<std::int64_t> residues);
    /// Over Z^d: membership by componentwise residues mod p.
    static SymmetricSet periodic_lattice(BaseGroup group, std::int64_t period,
                                         std::vector<BaseElement> residues);
    /// Over Z: explicit on [-threshold, threshold], (i mod p) in residues beyond.
    static SymmetricSet eventually_periodic(std::int64_t threshold,
                                            std::vector<std::int64_t> window,
                                            std::int64_t period,
                                            std::vector<std::int64_t> residues);
    /// Over F_r: I = ab^-1(inner) with inner over Z^r.
    static SymmetricSet ab_pullback(int rank, SymmetricSet inner);
    /// Opaque predicate; symmetry and 1-freeness are the caller's problem, and
    /// every procedure needing structure will reject this descriptor.
    static SymmetricSet unchecked(BaseGroup group,
                                  std::function<bool(const BaseElement&)> predicate);

    bool contains(const BaseElement& g) const;
    const BaseGroup& group() const { return group_; }
    SetKind kind() const { return kind_; }
    bool structured() const { return kind_ != SetKind::Unchecked; }

    // accessors for the structured fields (meaning depends on kind)
    const std::vector<BaseElement>& elements() const { return elements_; }
    std::int64_t period() const { return period_; }
    const std::vector<std::int64_t>& residues() const { return residues_; }
    const std::vector<BaseElement>& residue_vectors() const { return residue_vectors_; }
    std::int64_t threshold() const { return threshold_; }
    const std::vector<std::int64_t>& window() const { return window_; }
    const SymmetricSet& inner() const;

    /// Explicit list of I ∩ [-bound, bound] (Z-based descriptors).
    std::vector<std::int64_t> restrict_to_window(std::int64_t bound) const;

    /// Does the descriptor denote the empty set? (structured Z descriptors)
    bool is_empty_set() const;

    std::string to_text() const;

private:
    SymmetricSet() = default;

    SetKind kind_ = SetKind::Finite;
    BaseGroup group_;
    std::vector<BaseElement> elements_;        // Finite, sorted by base_compare
    std::int64_t period_ = 0;
    std::vector<std::int64_t> residues_;       // Periodic/EvPeriodic over Z, sorted
    std::vector<BaseElement> residue_vectors_; // Periodic over Z^d, sorted
    std::int64_t threshold_ = 0;
    std::vector<std::int64_t> window_;         // EvPeriodic explicit part, sorted
    std::shared_ptr<SymmetricSet> inner_;      // AbPullback
    std::function<bool(const BaseElement&)> predicate_;
};

/// Canonical form of a Z-descriptor: minimal eventual period, canonical tail
/// residues, minimal threshold and the explicit window up to it. Two
/// structured descriptors denote the same set iff their canonical forms agree.
struct CanonicalZSet {
    std::int64_t period = 1;                 // minimal eventual period
    std::vector<std::int64_t> residues;      // tail residues in [0, period)
    std::int64_t threshold = 0;              // minimal K (0 = globally periodic)
    std::vector<std::int64_t> window;        // I ∩ [1, threshold]

    bool operator==(const CanonicalZSet&) const = default;
    bool globally_periodic() const { return threshold == 0; }
};

/// Computes the canonical form; throws std::invalid_argument for descriptors
/// that are not structured Z descriptors.
CanonicalZSet canonicalize_z(const SymmetricSet& I);

/// Exponent-sum vector of a free-group element (abelianization F_r -> Z^r).
BaseElement abelianize(const BaseElement& freeElement);

/// Parses the textual descriptor format, e.g. "finite:{1,-1}",
/// "periodic:p=4,r={1,3}", "eventually:K=5,explicit={2,-2},p=3,r={1,2}",
/// "abpull:finite:{(1,0),(-1,0)}".
SymmetricSet parse_symmetric_set(const BaseGroup& group, const std::string& text);

}  // namespace lce
