#include "tupper/dyadic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace tupper {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    if ((b > 0 && a > std::numeric_limits<std::int64_t>::max() - b) ||
        (b < 0 && a < std::numeric_limits<std::int64_t>::min() - b)) {
        throw std::overflow_error("dyadic exponent overflow");
    }
    return a + b;
}

// Shift counts are bounded by the bit spans of values that already live in
// memory, so the narrowing is safe once the range is checked.
std::uint64_t checked_shift(std::int64_t amount) {
    if (amount < 0) {
        throw std::logic_error("negative shift amount");
    }
    return static_cast<std::uint64_t>(amount);
}

}  // namespace

Dyadic::Dyadic(BigInt integer) : mantissa_(std::move(integer)), exponent_(0) {
    normalize();
}

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
    normalize();
}

void Dyadic::normalize() {
    if (mantissa_.is_zero()) {
        exponent_ = 0;
        return;
    }
    const BigInt magnitude = abs(mantissa_);
    const std::uint64_t trailing = boost::multiprecision::lsb(magnitude);
    if (trailing > 0) {
        mantissa_ >>= trailing;
        exponent_ = checked_add(exponent_, static_cast<std::int64_t>(trailing));
    }
}

Dyadic Dyadic::scaled_pow2(std::int64_t shift) const {
    if (is_zero()) {
        return {};
    }
    Dyadic result = *this;
    result.exponent_ = checked_add(result.exponent_, shift);
    return result;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t exponent = std::min(a.exponent_, b.exponent_);
    BigInt sum = (a.mantissa_ << checked_shift(a.exponent_ - exponent)) +
                 (b.mantissa_ << checked_shift(b.exponent_ - exponent));
    return Dyadic(std::move(sum), exponent);
}

Dyadic Dyadic::operator-() const {
    Dyadic result = *this;
    result.mantissa_ = -result.mantissa_;
    return result;
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    return a + (-b);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return Dyadic(a.mantissa_ * b.mantissa_, checked_add(a.exponent_, b.exponent_));
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) {
        return sa <=> sb;
    }
    if (sa == 0) {
        return std::strong_ordering::equal;
    }
    // Same sign: compare mantissas scaled to the smaller exponent.
    const std::int64_t exponent = std::min(a.exponent_, b.exponent_);
    const BigInt lhs = a.mantissa_ << checked_shift(a.exponent_ - exponent);
    const BigInt rhs = b.mantissa_ << checked_shift(b.exponent_ - exponent);
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Dyadic Dyadic::from_decimal(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }

    BigInt digits = 0;
    std::int64_t fraction_len = 0;
    bool any_digit = false;
    bool seen_dot = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '.') {
            if (seen_dot) {
                throw std::invalid_argument("coordinate has two decimal points: '" +
                                            std::string(text) + "'");
            }
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') {
            throw std::invalid_argument("invalid coordinate character '" + std::string(1, c) +
                                        "' in '" + std::string(text) + "'");
        }
        digits = digits * 10 + (c - '0');
        any_digit = true;
        if (seen_dot) {
            ++fraction_len;
        }
    }
    if (!any_digit) {
        throw std::invalid_argument("empty coordinate: '" + std::string(text) + "'");
    }

    // value = digits / 10^L = digits / (2^L * 5^L); binary-terminating means
    // the 5^L part divides out exactly.
    for (std::int64_t i = 0; i < fraction_len; ++i) {
        if (!(digits % 5).is_zero()) {
            throw std::invalid_argument("coordinate '" + std::string(text) +
                                        "' is not binary-terminating (denominator has a factor 5)");
        }
        digits /= 5;
    }
    if (negative) {
        digits = -digits;
    }
    return Dyadic(std::move(digits), -fraction_len);
}

std::string Dyadic::to_decimal() const {
    if (is_zero()) {
        return "0";
    }
    if (exponent_ >= 0) {
        return BigInt(mantissa_ << checked_shift(exponent_)).str();
    }
    // |mantissa| * 5^L gives the digit string of |value| * 10^L.
    const std::uint64_t fraction_len = checked_shift(-exponent_);
    BigInt scaled = abs(mantissa_);
    for (std::uint64_t i = 0; i < fraction_len; ++i) {
        scaled *= 5;
    }
    std::string digits = scaled.str();
    if (digits.size() <= fraction_len) {
        digits.insert(0, static_cast<std::size_t>(fraction_len) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(fraction_len), ".");
    return (sign() < 0 ? "-" : "") + digits;
}

BigInt floor_dyadic(const Dyadic& v) {
    if (v.exponent() >= 0) {
        return v.mantissa() << checked_shift(v.exponent());
    }
    return floor_shift_right(v.mantissa(), checked_shift(-v.exponent()));
}

BigInt floor_div_dyadic(const Dyadic& v, const BigInt& d) {
    if (d < 1) {
        throw std::invalid_argument("floor_div_dyadic: divisor must be >= 1");
    }
    if (v.is_zero()) {
        return 0;
    }
    // Split d = odd * 2^t; then floor(v/d) = floor(floor(m * 2^(e-t)) / odd),
    // so the power-of-two part is a shift and the division stays small.
    const std::uint64_t twos = boost::multiprecision::lsb(d);
    const BigInt odd = d >> twos;
    const std::int64_t shift = checked_add(v.exponent(), -static_cast<std::int64_t>(twos));

    BigInt scaled;
    if (shift >= 0) {
        scaled = v.mantissa() << checked_shift(shift);
    } else {
        scaled = floor_shift_right(v.mantissa(), checked_shift(-shift));
    }
    return odd == 1 ? scaled : floor_div(scaled, odd);
}

Dyadic mod_real(const Dyadic& v, const BigInt& d) {
    if (d < 1) {
        throw std::invalid_argument("mod_real: modulus must be >= 1");
    }
    const BigInt whole = floor_div_dyadic(v, d);
    return v - Dyadic(whole * d);
}

bool bit_extract(std::span<const std::int64_t> exponents) {
    if (exponents.empty()) {
        throw std::invalid_argument("bit_extract: need at least one exponent");
    }
    std::unordered_set<std::int64_t> seen(exponents.begin(), exponents.end());
    if (seen.size() != exponents.size()) {
        throw std::invalid_argument("bit_extract: exponents must be pairwise distinct");
    }

    const std::int64_t lowest = *std::min_element(exponents.begin(), exponents.end());
    BigInt mantissa = 0;
    for (const std::int64_t e : exponents) {
        const BigInt offset = BigInt(e) - lowest;
        if (offset > std::numeric_limits<unsigned>::max()) {
            throw std::length_error("bit_extract: exponent spread too large to materialize");
        }
        // Distinct exponents means no carries; the sum is exactly these bits.
        boost::multiprecision::bit_set(mantissa, static_cast<unsigned>(offset));
    }
    const Dyadic alpha(std::move(mantissa), lowest);

    const BigInt parity = floor_dyadic(mod_real(alpha, 2));
    return Dyadic(parity) > Dyadic(1, -1);
}

}  // namespace tupper
