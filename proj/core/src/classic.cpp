#include "tupper/classic.hpp"

#include <stdexcept>
#include <string>

namespace tupper {

std::size_t ClassicBitmap::index(int x, int y) {
    if (x < 0 || x >= classic_width || y < 0 || y >= classic_height) {
        throw std::out_of_range("classic pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") outside the 106x17 grid");
    }
    // Flat order matches the packing layout 17*x + y.
    return static_cast<std::size_t>(x) * classic_height + static_cast<std::size_t>(y);
}

BigInt classic_encode(const ClassicBitmap& bitmap) {
    BigInt quotient = 0;
    for (int x = 0; x < classic_width; ++x) {
        for (int y = 0; y < classic_height; ++y) {
            if (bitmap.at(x, y)) {
                boost::multiprecision::bit_set(
                    quotient, static_cast<unsigned>(classic_radix * x + y));
            }
        }
    }
    return quotient * classic_radix;
}

ClassicBitmap classic_decode(const BigInt& k) {
    if (k.sign() < 0) {
        throw std::invalid_argument("classic_decode: k must be nonnegative");
    }
    ClassicBitmap bitmap;
    const BigInt quotient = floor_div(k, classic_radix);
    if (quotient.is_zero()) {
        return bitmap;
    }
    const std::uint64_t top_bit = boost::multiprecision::msb(quotient);
    for (int x = 0; x < classic_width; ++x) {
        for (int y = 0; y < classic_height; ++y) {
            const unsigned position = static_cast<unsigned>(classic_radix * x + y);
            if (position <= top_bit && boost::multiprecision::bit_test(quotient, position)) {
                bitmap.set(x, y, true);
            }
        }
    }
    return bitmap;
}

}  // namespace tupper
