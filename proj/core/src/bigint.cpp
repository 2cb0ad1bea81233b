#include "tupper/bigint.hpp"

#include <stdexcept>

namespace tupper {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) {
        throw std::invalid_argument("floor_div: divisor must be positive");
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (!r.is_zero() && a.sign() < 0) {
        --q;
    }
    return q;
}

BigInt floor_shift_right(const BigInt& a, std::uint64_t shift) {
    if (shift == 0 || a.is_zero()) {
        return a;
    }
    if (a.sign() > 0) {
        return a >> shift;
    }
    // floor(-b / 2^s) = -((b - 1) >> s) - 1 for b > 0.
    BigInt b = -a;
    --b;
    return -(b >> shift) - 1;
}

}  // namespace tupper
