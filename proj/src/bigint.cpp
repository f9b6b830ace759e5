#include "faber/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace faber {

BigUint::BigUint(unsigned long long v) {
    while (v) {
        limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffULL));
        v >>= 32;
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigUint: empty decimal string");
    BigUint out;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigUint: bad digit in decimal string");
        // out = out*10 + digit
        std::uint64_t carry = static_cast<std::uint64_t>(c - '0');
        for (auto& limb : out.limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * 10 + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        while (carry) {
            out.limbs_.push_back(static_cast<std::uint32_t>(carry & 0xffffffffULL));
            carry >>= 32;
        }
    }
    return out;
}

std::uint32_t BigUint::divmod_small(std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::string BigUint::to_decimal() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.divmod_small(1000000000u);
        bool last = tmp.is_zero();
        for (int i = 0; i < 9 && (!last || chunk); ++i) {
            out.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

BigUint& BigUint::operator+=(const BigUint& other) {
    size_t n = std::max(limbs_.size(), other.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        std::uint64_t cur = carry + limbs_[i] + (i < other.limbs_.size() ? other.limbs_[i] : 0u);
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint BigUint::operator*(const BigUint& other) const {
    if (is_zero() || other.is_zero()) return {};
    BigUint out;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < other.limbs_.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * other.limbs_[j] +
                                out.limbs_[i + j] + carry;
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        size_t pos = i + other.limbs_.size();
        while (carry) {
            std::uint64_t cur = out.limbs_[pos] + carry;
            out.limbs_[pos] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            ++pos;
        }
    }
    out.trim();
    return out;
}

BigUint BigUint::pow(unsigned long long base, unsigned long long exponent) {
    BigUint result(1ULL), b(base);
    while (exponent) {
        if (exponent & 1ULL) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

int BigUint::compare(const BigUint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i]) return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

size_t BigUint::bit_length() const {
    if (is_zero()) return 0;
    size_t bits = (limbs_.size() - 1) * 32;
    std::uint32_t top = limbs_.back();
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

double BigUint::log2() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    size_t bits = bit_length();
    // mantissa from the top <= 64 bits
    double mant = 0.0;
    size_t take = std::min<size_t>(bits, 64);
    for (size_t i = 0; i < take; ++i) {
        size_t bit = bits - 1 - i;
        bool set = (limbs_[bit / 32] >> (bit % 32)) & 1u;
        mant = mant * 2.0 + (set ? 1.0 : 0.0);
    }
    return std::log2(mant) + static_cast<double>(bits - take);
}

} // namespace faber
