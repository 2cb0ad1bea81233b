#include "tupper/field_image.hpp"

#include <stdexcept>
#include <string>

#include "tupper/errors.hpp"

namespace tupper {

namespace {

void check_palette_size(const Palette& palette, const GridParams& params) {
    if (palette.colors() != params.colors) {
        throw std::invalid_argument("palette has " + std::to_string(palette.colors()) +
                                    " colours plus background, grid expects " +
                                    std::to_string(params.colors));
    }
}

}  // namespace

ColorField pixels_to_field(const PnmImage& image,
                           const Palette& palette,
                           const GridParams& params) {
    if (params.rank != 2) {
        throw std::invalid_argument("image ingestion requires a 2-axis grid");
    }
    check_palette_size(palette, params);
    if (image.width != params.dims[0] || image.height != params.dims[1]) {
        throw std::invalid_argument("image is " + std::to_string(image.width) + "x" +
                                    std::to_string(image.height) + ", grid expects " +
                                    std::to_string(params.dims[0]) + "x" +
                                    std::to_string(params.dims[1]));
    }

    ColorField field{params};
    for (std::int64_t m1 = 0; m1 < params.dims[0]; ++m1) {
        for (std::int64_t m2 = 0; m2 < params.dims[1]; ++m2) {
            // Row 0 of the file is the top; lattice row 0 is the bottom.
            const Rgb value = image.at(m1, params.dims[1] - 1 - m2);
            const auto index = palette_index(palette, value);
            if (!index) {
                throw ParseError("pixel at column " + std::to_string(m1) + ", file row " +
                                 std::to_string(params.dims[1] - 1 - m2) + " has RGB (" +
                                 std::to_string(value.r) + ", " + std::to_string(value.g) +
                                 ", " + std::to_string(value.b) + ") not present in the palette");
            }
            const std::int64_t cell[] = {m1, m2};
            field.set(cell, static_cast<std::uint8_t>(*index));
        }
    }
    return field;
}

PnmImage field_to_pixels(const ColorField& field, const Palette& palette) {
    const GridParams& params = field.params();
    if (params.rank != 2) {
        throw std::invalid_argument("image emission requires a 2-axis grid");
    }
    check_palette_size(palette, params);

    PnmImage image = make_image(params.dims[0], params.dims[1], /*bitmap=*/false,
                                palette.background());
    for (std::int64_t m1 = 0; m1 < params.dims[0]; ++m1) {
        for (std::int64_t m2 = 0; m2 < params.dims[1]; ++m2) {
            const std::int64_t cell[] = {m1, m2};
            image.set(m1, params.dims[1] - 1 - m2, palette.color(field.at(cell)));
        }
    }
    return image;
}

}  // namespace tupper
