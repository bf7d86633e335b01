#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lce {

inline std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

/// The base-group families H a central extension G(H,I) can be built over.
/// Cyclic covers the finite quotients Z/n used by the residual-finiteness
/// witnesses; the other three are the families from the construction.
enum class Family : std::uint8_t { Integers, Lattice, Free, Cyclic };

/// One element of a base group. Self-describing: carries its family and the
/// family parameter (d for Lattice, r for Free, n for Cyclic, 1 for Integers).
/// Free-group words are stored as signed letters (+1..+r, -1..-r) and are kept
/// freely reduced at all times.
struct BaseElement {
    Family family = Family::Integers;
    std::int32_t param = 1;
    std::vector<std::int64_t> coords;  // Integers/Lattice/Cyclic
    std::vector<std::int8_t> letters;  // Free

    bool operator==(const BaseElement&) const = default;
};

/// Handle for a base group H: family plus rank/dimension/modulus.
struct BaseGroup {
    Family family = Family::Integers;
    std::int32_t param = 1;

    static BaseGroup integers() { return {Family::Integers, 1}; }
    static BaseGroup lattice(int d);
    static BaseGroup free_group(int r);
    static BaseGroup cyclic(int n);

    bool operator==(const BaseGroup&) const = default;

    BaseElement identity() const;
    BaseElement from_int(std::int64_t n) const;              // Integers/Cyclic
    BaseElement from_coords(std::vector<std::int64_t>) const; // Lattice
    BaseElement from_letters(std::vector<std::int8_t>) const; // Free (reduces)

    /// Standard generators: t for Z; e_1..e_d for Z^d; s,t,u,v for F_r; t for Z/n.
    std::vector<BaseElement> generators() const;

    /// All elements of word length <= radius, ShortLex order, each once.
    /// Throws lce::limit_error beyond the configured cap (12 for Z/Z^d-like,
    /// 8 for free groups).
    std::vector<BaseElement> ball(int radius) const;

    std::string format(const BaseElement& x) const;
    BaseElement parse(const std::string& text) const;
};

//-- group operations (throw std::invalid_argument on family/param mismatch) --

BaseElement base_mul(const BaseElement& x, const BaseElement& y);
BaseElement base_inv(const BaseElement& x);
bool base_is_identity(const BaseElement& x);

/// Word length w.r.t. the standard generators.
std::int64_t base_length(const BaseElement& x);

/// The fixed total order of the artifact: natural order on Z, lexicographic on
/// Z^d, ShortLex on F_r with s < s^-1 < t < t^-1 < ..., natural on {0..n-1}.
std::strong_ordering base_compare(const BaseElement& x, const BaseElement& y);

/// Function-object form, for APIs that take the order explicitly.
struct TotalOrder {
    std::strong_ordering operator()(const BaseElement& x, const BaseElement& y) const {
        return base_compare(x, y);
    }
    bool less(const BaseElement& x, const BaseElement& y) const {
        return base_compare(x, y) == std::strong_ordering::less;
    }
};

/// Compact stable serialization, used as a hash/dedup key.
void append_key(std::string& out, const BaseElement& x);
std::string base_key(const BaseElement& x);

// -- tree geometry of the Cayley tree of F_r ---------------------------------

/// Steiner hull of a vertex set in the Cayley tree: the smallest subtree
/// containing all of X. Vertices listed ShortLex-sorted; edge_count is
/// |vertices| - #components (0 or 1 components here).
struct TreeHull {
    std::vector<BaseElement> vertices;  // ShortLex sorted, unique
    std::int64_t edge_count = 0;

    bool contains(const BaseElement& v) const;
};

TreeHull steiner_hull(const std::vector<BaseElement>& points);
TreeHull geodesic_segment(const BaseElement& x, const BaseElement& y);

/// Distance in the Cayley tree (= word length of x^-1 y).
std::int64_t tree_distance(const BaseElement& x, const BaseElement& y);

/// Thrown when an enumeration bound or configured limit is exceeded; the CLI
/// maps it to exit code 2.
struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lce
