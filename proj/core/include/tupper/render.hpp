#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tupper/codec.hpp"
#include "tupper/palette.hpp"
#include "tupper/pnm.hpp"

namespace tupper {

enum class Evaluator {
    fast,     // bit tests on floor(k/R)
    literal,  // exact formula evaluation at cell centers
};

// For rank > 2, fixes rank-2 axes at given coordinates (0-based axis ids).
struct SliceSpec {
    std::vector<std::pair<int, std::int64_t>> fixed;
};

struct RenderRequest {
    EncodedNumber enc;
    Palette palette;
    int scale = 1;
    SliceSpec slice;
    Evaluator evaluator = Evaluator::fast;
    MultiColorPolicy multi = MultiColorPolicy::strict;
};

// Rasterizes the two free axes of the plotting window: each lattice cell
// becomes a scale x scale block painted with its decoded colour (background
// when unpainted). The lower free axis runs rightward, the higher one
// upward. Under the strict policy the first multi-colour cell (scanning
// rows bottom-up, columns left to right) aborts with MultiColorError; such
// cells can only arise for k values not produced by encode().
//
// Both evaluators must produce identical rasters for encode() output; the
// literal evaluator samples the centre of each cell with the last axis
// offset by k.
PnmImage render_slice(const RenderRequest& request);

// 106x17-cell monochrome raster of the classic formula's graph over the
// window at height k, each cell evaluated literally at its centre.
PnmImage render_classic(const BigInt& k, int scale);

}  // namespace tupper
