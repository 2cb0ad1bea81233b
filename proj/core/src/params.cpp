#include "tupper/params.hpp"

#include <stdexcept>
#include <string>

namespace tupper {

GridParams make_params(int rank, int colors, std::vector<std::int64_t> dims) {
    if (rank < 2) {
        throw std::invalid_argument("make_params: the construction requires at least 2 axes, got " +
                                    std::to_string(rank));
    }
    if (colors < 1) {
        throw std::invalid_argument("make_params: need at least one colour, got " +
                                    std::to_string(colors));
    }
    if (colors > 255) {
        throw std::invalid_argument("make_params: colour indices are stored in one byte, so at most "
                                    "255 colours are supported, got " +
                                    std::to_string(colors));
    }
    if (dims.size() != static_cast<std::size_t>(rank)) {
        throw std::invalid_argument("make_params: expected " + std::to_string(rank) +
                                    " extents, got " + std::to_string(dims.size()));
    }
    BigInt radix = colors;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1) {
            throw std::invalid_argument("make_params: extent of axis " + std::to_string(i + 1) +
                                        " must be positive, got " + std::to_string(dims[i]));
        }
        radix += dims[i];
    }
    return GridParams{rank, colors, std::move(dims), std::move(radix)};
}

}  // namespace tupper
