#pragma once

#include <cstdint>
#include <vector>

#include "tupper/bigint.hpp"

namespace tupper {

// Geometry of one encoding instance: n lattice axes of extents A_1..A_n and
// m colour classes. The packing radix R = A_1 + ... + A_n + m is derived
// here and nowhere else; it is never accepted from callers or files.
struct GridParams {
    int rank = 0;                    // n, number of axes; >= 2
    int colors = 0;                  // m, number of paint colours; 1..255
    std::vector<std::int64_t> dims;  // A_1..A_n, each >= 1
    BigInt radix;                    // R

    friend bool operator==(const GridParams&, const GridParams&) = default;
};

// Builds GridParams and checks the construction's hypotheses: rank >= 2,
// colors >= 1, every extent positive, dims.size() == rank. Colour indices
// are stored one per byte, which caps colors at 255.
// Throws std::invalid_argument on violation.
GridParams make_params(int rank, int colors, std::vector<std::int64_t> dims);

}  // namespace tupper
