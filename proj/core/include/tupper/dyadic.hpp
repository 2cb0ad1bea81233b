#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "tupper/bigint.hpp"

namespace tupper {

// Exact dyadic rational: value = mantissa * 2^exponent.
//
// Every quantity in the plotted formulas is an integer times a power of two,
// so dyadics are closed under all the arithmetic the evaluator needs: sums,
// products, scaling by 2^t, floor, and mod by a positive integer.
//
// Canonical form: mantissa odd, or zero with exponent 0. Normalizing after
// every step keeps mantissas as small as the value allows; the huge 2^E
// factors of the formulas live entirely in the exponent.
class Dyadic {
public:
    Dyadic() = default;  // zero
    explicit Dyadic(BigInt integer);
    Dyadic(BigInt mantissa, std::int64_t exponent);

    // Parses a binary-terminating decimal such as "6.5", "-0.25", "20".
    // Decimals with any other fractional part (e.g. "0.1") are rejected with
    // std::invalid_argument, as are malformed strings.
    static Dyadic from_decimal(std::string_view text);

    const BigInt& mantissa() const { return mantissa_; }
    std::int64_t exponent() const { return exponent_; }
    bool is_zero() const { return mantissa_.is_zero(); }
    int sign() const { return mantissa_.sign(); }

    Dyadic scaled_pow2(std::int64_t shift) const;  // value * 2^shift

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const;

    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) = default;

    // Exact decimal rendering ("1.25", "-0.5", "6"); fractional digits
    // terminate because the value is dyadic.
    std::string to_decimal() const;

private:
    void normalize();

    BigInt mantissa_ = 0;
    std::int64_t exponent_ = 0;
};

// Greatest integer <= v, exact for either sign.
BigInt floor_dyadic(const Dyadic& v);

// floor(v / d) for integer d >= 1, computed by splitting d into its odd part
// and power of two so only small-divisor division is ever needed.
BigInt floor_div_dyadic(const Dyadic& v, const BigInt& d);

// v - d*floor(v/d), exact, in [0, d). This is the real-argument mod used by
// the formulas; it accepts fractional v (e.g. mod(33.25, 2) = 1.25).
Dyadic mod_real(const Dyadic& v, const BigInt& d);

// Builds alpha = sum of 2^e over the given exponents and evaluates the
// parity probe 1/2 < floor(mod(alpha, 2)) through the dyadic path. Equals
// membership of 0 in the exponent set; duplicates are rejected with
// std::invalid_argument.
bool bit_extract(std::span<const std::int64_t> exponents);

}  // namespace tupper
