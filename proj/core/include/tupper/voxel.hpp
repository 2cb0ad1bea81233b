#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tupper/field.hpp"

namespace tupper {

// n-dimensional voxel container, the on-disk form of a ColorField:
//
//   magic "NVOX" | version byte 0x01 | ASCII line "n m A_1 ... A_n\n" |
//   one byte per cell, row-major, first axis slowest
//
// parse(emit(F)) == F byte-exactly; trailing bytes, short payloads, bad
// magic/version and colour bytes above m are each distinct ParseErrors.
std::vector<std::uint8_t> emit_voxels(const ColorField& field);
ColorField parse_voxels(std::span<const std::uint8_t> bytes);

}  // namespace tupper
