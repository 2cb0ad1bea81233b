#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tupper {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend auto operator<=>(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb rgb_black{0, 0, 0};
inline constexpr Rgb rgb_white{255, 255, 255};

enum class PnmFormat { p1, p3, p4, p6 };

// Decoded portable-anymap image. Pixels are row-major with the TOP row
// first, the usual image-file order; lattice ingestion flips rows so that
// the plot's y axis grows upward. Bitmap pixels are stored as pure
// black (painted) / white (clear), which round-trips P1/P4 losslessly.
struct PnmImage {
    bool is_bitmap = false;  // true for P1/P4 sources
    std::int64_t width = 0;
    std::int64_t height = 0;
    std::vector<Rgb> pixels;

    Rgb at(std::int64_t x, std::int64_t y) const;
    void set(std::int64_t x, std::int64_t y, Rgb value);

    friend bool operator==(const PnmImage&, const PnmImage&) = default;
};

// Blank (all-white / all-background) image.
PnmImage make_image(std::int64_t width, std::int64_t height, bool bitmap,
                    Rgb fill = rgb_white);

// Parses P1/P4 bitmaps and P3/P6 pixmaps. Header comments are honoured,
// maxval must be 255, and payloads are checked against the buffer before
// anything is allocated, so truncated or hostile headers fail cleanly with
// ParseError.
PnmImage parse_pnm(std::span<const std::uint8_t> bytes);

// Serializes in the requested format. Bitmap formats require a bitmap image
// (every pixel pure black or white); P4 rows are padded to whole bytes.
std::vector<std::uint8_t> emit_pnm(const PnmImage& image, PnmFormat format);

}  // namespace tupper
