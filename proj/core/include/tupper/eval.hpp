#pragma once

#include <vector>

#include "tupper/codec.hpp"
#include "tupper/dyadic.hpp"

namespace tupper {

// A real-valued point (x_1, ..., x_n) with exact dyadic coordinates.
struct SamplePoint {
    std::vector<Dyadic> coords;
};

// Literal evaluation of the colour-i formula at a point:
//
//   floor(mod(floor(x_n/R) * 2^E, 2))
//   E = -R^n*floor(x_1) - ... - R^2*floor(x_(n-1)) - R*mod(floor(x_n),R) - i
//
// computed entirely in exact dyadic arithmetic; the result is always the
// dyadic 0 or 1. Points outside the plotting window are evaluated as
// written. This is the slow, independent counterpart of decode_cell: the
// two must agree on every in-window point when R | k.
//
// When R | k and x_n - k lands in [0, A_n), the window identities
// floor(x_n/R) = k/R and mod(floor(x_n), R) = floor(x_n - k) are rechecked
// internally; a violation throws std::logic_error.
Dyadic eval_f(const EncodedNumber& enc, const SamplePoint& point, int color);

// The plotted predicate 1/2 < value.
bool painted(const Dyadic& value);

// Literal evaluation of the classic 106x17 monochrome formula
// floor(mod(floor(y/17) * 2^(-17*floor(x) - mod(floor(y),17)), 2)).
// k plays the same window-identity role as in eval_f.
Dyadic eval_classic(const BigInt& k, const Dyadic& x, const Dyadic& y);

}  // namespace tupper
