#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace faber {

/// Arbitrary-precision unsigned integer, base 2^32 limbs. Covers the
/// combinatorial budget formulas (powers of 3 with dyadic exponents)
/// that overflow any fixed-width type.
class BigUint {
  public:
    BigUint() = default;
    BigUint(unsigned long long v);

    static BigUint from_decimal(const std::string& s);
    std::string to_decimal() const;

    BigUint& operator+=(const BigUint& other);
    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    BigUint operator*(const BigUint& other) const;
    BigUint& operator*=(const BigUint& other) { return *this = *this * other; }

    static BigUint pow(unsigned long long base, unsigned long long exponent);

    int compare(const BigUint& other) const; // -1, 0, +1
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return a.compare(b) >= 0; }

    bool is_zero() const { return limbs_.empty(); }
    size_t bit_length() const;
    /// log2 with ~15 significant digits (top bits as mantissa); -inf for 0.
    double log2() const;

  private:
    std::vector<std::uint32_t> limbs_; // little-endian, no trailing zeros
    void trim();
    std::uint32_t divmod_small(std::uint32_t divisor); // in place, returns remainder
};

} // namespace faber
