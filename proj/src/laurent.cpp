#include "lce/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace lce {

void LaurentF2::normalize() {
    size_t lead = 0;
    while (lead < bits_.size() && bits_[lead] == 0) ++lead;
    if (lead == bits_.size()) {
        bits_.clear();
        low_ = 0;
        return;
    }
    bits_.erase(bits_.begin(), bits_.begin() + std::ptrdiff_t(lead));
    low_ += std::int64_t(lead);
    while (!bits_.empty() && bits_.back() == 0) bits_.pop_back();
}

LaurentF2 LaurentF2::monomial(std::int64_t exponent) {
    LaurentF2 p;
    p.low_ = exponent;
    p.bits_ = {1};
    return p;
}

LaurentF2 LaurentF2::from_exponents(const std::vector<std::int64_t>& exponents) {
    LaurentF2 p;
    for (auto e : exponents) p.add_in(monomial(e));
    return p;
}

bool LaurentF2::bit(std::int64_t exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return false;
    return bits_[size_t(exponent - low_)] != 0;
}

std::vector<std::int64_t> LaurentF2::exponents() const {
    std::vector<std::int64_t> out;
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(low_ + std::int64_t(i));
    return out;
}

void LaurentF2::add_in(const LaurentF2& other) {
    if (other.is_zero()) return;
    if (is_zero()) {
        *this = other;
        return;
    }
    std::int64_t newLow = std::min(low_, other.low_);
    std::int64_t newHigh = std::max(high(), other.high());
    std::vector<std::uint8_t> merged(size_t(newHigh - newLow + 1), 0);
    for (size_t i = 0; i < bits_.size(); ++i) merged[size_t(low_ - newLow) + i] ^= bits_[i];
    for (size_t i = 0; i < other.bits_.size(); ++i)
        merged[size_t(other.low_ - newLow) + i] ^= other.bits_[i];
    low_ = newLow;
    bits_ = std::move(merged);
    normalize();
}

LaurentF2 LaurentF2::shifted(std::int64_t by) const {
    LaurentF2 p = *this;
    if (!p.is_zero()) p.low_ += by;
    return p;
}

LaurentF2 LaurentF2::times(const LaurentF2& other) const {
    LaurentF2 r;
    if (is_zero() || other.is_zero()) return r;
    r.low_ = low_ + other.low_;
    r.bits_.assign(bits_.size() + other.bits_.size() - 1, 0);
    for (size_t i = 0; i < bits_.size(); ++i) {
        if (!bits_[i]) continue;
        for (size_t j = 0; j < other.bits_.size(); ++j) r.bits_[i + j] ^= other.bits_[j];
    }
    r.normalize();
    return r;
}

std::string LaurentF2::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto e : exponents()) {
        if (!s.empty()) s += " + ";
        if (e == 0)
            s += "1";
        else if (e == 1)
            s += "t";
        else
            s += "t^" + std::to_string(e);
    }
    return s;
}

LaurentDivMod divmod_poly(const LaurentF2& a, const LaurentF2& b) {
    if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    if (a.low() < 0 || b.low() < 0)
        throw std::invalid_argument("divmod_poly expects valuation >= 0");
    LaurentDivMod r;
    r.remainder = a;
    while (!r.remainder.is_zero() && r.remainder.high() >= b.high()) {
        std::int64_t shift = r.remainder.high() - b.high();
        r.quotient.add_in(LaurentF2::monomial(shift));
        r.remainder.add_in(b.shifted(shift));
    }
    return r;
}

}  // namespace lce
