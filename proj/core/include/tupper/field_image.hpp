#pragma once

#include "tupper/field.hpp"
#include "tupper/palette.hpp"
#include "tupper/pnm.hpp"

namespace tupper {

// 2-D image <-> ColorField conversion. Image files store the top row first;
// the lattice's second axis grows upward, so cell (m1, m2) corresponds to
// pixel column m1, image row A_2-1-m2. Every pixel must match a palette
// entry exactly; an unknown RGB reports the offending pixel coordinates.
ColorField pixels_to_field(const PnmImage& image,
                           const Palette& palette,
                           const GridParams& params);

// Inverse of pixels_to_field on valid fields (rank must be 2).
PnmImage field_to_pixels(const ColorField& field, const Palette& palette);

}  // namespace tupper
