#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace tupper {

// Arbitrary-precision integer. Codec quantities (k, k/R, bit indices) are
// nonnegative; evaluator intermediates may be negative.
using BigInt = boost::multiprecision::cpp_int;

// floor(a / b) for b > 0. cpp_int division truncates toward zero, so the
// quotient is adjusted for negative a with a nonzero remainder.
BigInt floor_div(const BigInt& a, const BigInt& b);

// floor(a / 2^s), exact for negative a as well.
BigInt floor_shift_right(const BigInt& a, std::uint64_t shift);

}  // namespace tupper
