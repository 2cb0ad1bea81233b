#include "tupper/eval.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "tupper/classic.hpp"

namespace tupper {

namespace {

std::int64_t checked_exponent(const BigInt& e) {
    if (e > std::numeric_limits<std::int64_t>::max() ||
        e < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("formula exponent exceeds the representable range");
    }
    return static_cast<std::int64_t>(e);
}

// Integer mod with result in [0, d), either sign of a.
BigInt mod_euclid(const BigInt& a, const BigInt& d) {
    return a - d * floor_div(a, d);
}

// When R | k and x_n - k lies in [0, A_n), the formula's two x_n-derived
// quantities collapse to k-independent forms; recheck them on every literal
// evaluation that qualifies.
void check_window_identities(const BigInt& k,
                             const BigInt& radix,
                             const BigInt& window_extent,
                             const Dyadic& xn,
                             const BigInt& mantissa,
                             const BigInt& xn_mod) {
    if (k.sign() < 0 || !(k % radix).is_zero()) {
        return;
    }
    const Dyadic relative = xn - Dyadic(k);
    if (relative.sign() < 0 || !(relative < Dyadic(window_extent))) {
        return;
    }
    if (mantissa != k / radix) {
        throw std::logic_error("window identity violated: floor(x_n/R) != k/R");
    }
    if (xn_mod != floor_dyadic(relative)) {
        throw std::logic_error("window identity violated: mod(floor(x_n),R) != floor(x_n-k)");
    }
}

}  // namespace

bool painted(const Dyadic& value) {
    return value > Dyadic(1, -1);
}

Dyadic eval_f(const EncodedNumber& enc, const SamplePoint& point, int color) {
    const GridParams& params = enc.params;
    if (point.coords.size() != static_cast<std::size_t>(params.rank)) {
        throw std::invalid_argument("sample point has " + std::to_string(point.coords.size()) +
                                    " coordinates, expected " + std::to_string(params.rank));
    }
    if (color < 1 || color > params.colors) {
        throw std::out_of_range("colour index " + std::to_string(color) + " outside {1..." +
                                std::to_string(params.colors) + "}");
    }

    const BigInt& radix = params.radix;
    const Dyadic& xn = point.coords.back();

    const BigInt mantissa = floor_div_dyadic(xn, radix);
    const BigInt xn_mod = mod_euclid(floor_dyadic(xn), radix);

    // E = -R^n*floor(x_1) - ... - R^2*floor(x_(n-1)) - R*mod(floor(x_n),R) - i
    BigInt exponent = -radix * xn_mod - color;
    BigInt power = radix * radix;
    for (std::size_t axis = static_cast<std::size_t>(params.rank) - 1; axis-- > 0;) {
        exponent -= power * floor_dyadic(point.coords[axis]);
        power *= radix;
    }

    check_window_identities(enc.k, radix, BigInt(params.dims.back()), xn, mantissa, xn_mod);

    const Dyadic t = Dyadic(mantissa).scaled_pow2(checked_exponent(exponent));
    return Dyadic(floor_dyadic(mod_real(t, 2)));
}

Dyadic eval_classic(const BigInt& k, const Dyadic& x, const Dyadic& y) {
    const BigInt radix = classic_radix;

    const BigInt mantissa = floor_div_dyadic(y, radix);
    const BigInt y_mod = mod_euclid(floor_dyadic(y), radix);
    const BigInt exponent = -radix * floor_dyadic(x) - y_mod;

    check_window_identities(k, radix, BigInt(classic_height), y, mantissa, y_mod);

    const Dyadic t = Dyadic(mantissa).scaled_pow2(checked_exponent(exponent));
    return Dyadic(floor_dyadic(mod_real(t, 2)));
}

}  // namespace tupper
