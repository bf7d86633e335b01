#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lce {

/// Laurent polynomial over the two-element field: bit coefficients with an
/// offset exponent. Normalized so the lowest and highest stored bits are set
/// (or the polynomial is zero).
class LaurentF2 {
public:
    LaurentF2() = default;
    static LaurentF2 monomial(std::int64_t exponent);
    static LaurentF2 from_exponents(const std::vector<std::int64_t>& exponents);

    bool is_zero() const { return bits_.empty(); }
    std::int64_t low() const { return low_; }                      // valuation
    std::int64_t high() const { return low_ + std::int64_t(bits_.size()) - 1; }
    bool bit(std::int64_t exponent) const;
    std::vector<std::int64_t> exponents() const;

    /// Units of F2[t^+-1] are exactly the monomials.
    bool is_unit() const { return bits_.size() == 1; }

    void add_in(const LaurentF2& other);          // self ^= other
    LaurentF2 shifted(std::int64_t by) const;     // * t^by
    LaurentF2 times(const LaurentF2& other) const;

    bool operator==(const LaurentF2&) const = default;

    std::string to_string() const;  // e.g. "t^-1 + 1 + t^3"

private:
    void normalize();
    std::int64_t low_ = 0;
    std::vector<std::uint8_t> bits_;  // bits_[i] = coefficient of t^(low_+i)
};

/// Quotient and remainder of plain-polynomial division (both inputs must have
/// valuation >= 0; deg rem < deg divisor).
struct LaurentDivMod {
    LaurentF2 quotient;
    LaurentF2 remainder;
};
LaurentDivMod divmod_poly(const LaurentF2& a, const LaurentF2& b);

}  // namespace lce
