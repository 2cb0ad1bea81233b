#pragma once

#include <bitset>
#include <cstdint>

#include "tupper/bigint.hpp"

namespace tupper {

// The classic monochrome instance is its own codec: a 106x17 bitmap packed
// with divisor 17 and bit layout 17*x + y. It is not a special case of the
// general construction (n=2, m=1, dims 106x17 would give radix 124, not 17).
inline constexpr int classic_width = 106;
inline constexpr int classic_height = 17;
inline constexpr int classic_radix = 17;

class ClassicBitmap {
public:
    // (x, y) with x in [0,106), y in [0,17); y grows upward.
    bool at(int x, int y) const { return bits_[index(x, y)]; }
    void set(int x, int y, bool painted) { bits_[index(x, y)] = painted; }

    bool none() const { return bits_.none(); }

    friend bool operator==(const ClassicBitmap&, const ClassicBitmap&) = default;

private:
    static std::size_t index(int x, int y);

    std::bitset<static_cast<std::size_t>(classic_width) * classic_height> bits_;
};

// k = 17 * sum over painted (x, y) of 2^(17x + y).
BigInt classic_encode(const ClassicBitmap& bitmap);

// Bit-test decode of floor(k/17); accepts arbitrary nonnegative k.
ClassicBitmap classic_decode(const BigInt& k);

}  // namespace tupper
