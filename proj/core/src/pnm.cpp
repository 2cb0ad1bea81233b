#include "tupper/pnm.hpp"

#include <stdexcept>
#include <string>

#include "tupper/errors.hpp"

namespace tupper {

namespace {

constexpr std::int64_t max_extent = 1 << 30;

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

bool is_digit(std::uint8_t c) {
    return c >= '0' && c <= '9';
}

struct Scanner {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }
    std::size_t remaining() const { return bytes.size() - pos; }

    // Whitespace and '#' comments separate header tokens.
    void skip_separators() {
        while (!eof()) {
            const std::uint8_t c = bytes[pos];
            if (is_pnm_space(c)) {
                ++pos;
            } else if (c == '#') {
                while (!eof() && bytes[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    std::int64_t next_number(const char* what) {
        skip_separators();
        if (eof()) {
            throw ParseError(std::string("anymap: unexpected end of input while reading ") + what);
        }
        if (!is_digit(bytes[pos])) {
            throw ParseError(std::string("anymap: expected a number for ") + what + ", found byte " +
                             std::to_string(int(bytes[pos])));
        }
        std::int64_t value = 0;
        while (!eof() && is_digit(bytes[pos])) {
            value = value * 10 + (bytes[pos] - '0');
            if (value > max_extent) {
                throw ParseError(std::string("anymap: ") + what + " is unreasonably large");
            }
            ++pos;
        }
        return value;
    }

    // Binary payloads begin after exactly one whitespace byte.
    void expect_payload_separator() {
        if (eof() || !is_pnm_space(bytes[pos])) {
            throw ParseError("anymap: missing whitespace between header and payload");
        }
        ++pos;
    }

    void expect_end(const char* format) {
        skip_separators();
        if (!eof()) {
            throw ParseError(std::string("anymap: trailing data after ") + format + " payload");
        }
    }
};

std::pair<std::int64_t, std::int64_t> read_dimensions(Scanner& scanner) {
    const std::int64_t width = scanner.next_number("width");
    const std::int64_t height = scanner.next_number("height");
    if (width < 1 || height < 1) {
        throw ParseError("anymap: dimensions must be positive, got " + std::to_string(width) +
                         "x" + std::to_string(height));
    }
    return {width, height};
}

void read_maxval(Scanner& scanner) {
    const std::int64_t maxval = scanner.next_number("maxval");
    if (maxval != 255) {
        throw ParseError("anymap: unsupported maxval " + std::to_string(maxval) +
                         " (only 255 is supported)");
    }
}

PnmImage parse_p1(Scanner& scanner) {
    const auto [width, height] = read_dimensions(scanner);
    // Each digit takes at least one byte; a shorter buffer cannot possibly
    // hold the raster, so reject before allocating.
    if (static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height) >
        scanner.remaining()) {
        throw ParseError("anymap: truncated P1 payload");
    }
    PnmImage image = make_image(width, height, /*bitmap=*/true);
    for (std::int64_t y = 0; y < height; ++y) {
        for (std::int64_t x = 0; x < width; ++x) {
            scanner.skip_separators();
            if (scanner.eof()) {
                throw ParseError("anymap: truncated P1 payload");
            }
            const std::uint8_t c = scanner.bytes[scanner.pos++];
            if (c == '1') {
                image.set(x, y, rgb_black);
            } else if (c != '0') {
                throw ParseError("anymap: invalid P1 digit byte " + std::to_string(int(c)));
            }
        }
    }
    scanner.expect_end("P1");
    return image;
}

PnmImage parse_p4(Scanner& scanner) {
    const auto [width, height] = read_dimensions(scanner);
    scanner.expect_payload_separator();
    const std::uint64_t row_bytes = (static_cast<std::uint64_t>(width) + 7) / 8;
    const std::uint64_t needed = row_bytes * static_cast<std::uint64_t>(height);
    if (needed > scanner.remaining()) {
        throw ParseError("anymap: truncated P4 payload");
    }
    if (needed < scanner.remaining()) {
        throw ParseError("anymap: trailing data after P4 payload");
    }
    PnmImage image = make_image(width, height, /*bitmap=*/true);
    for (std::int64_t y = 0; y < height; ++y) {
        const std::size_t row_start = scanner.pos + static_cast<std::size_t>(y * row_bytes);
        for (std::int64_t x = 0; x < width; ++x) {
            // Most significant bit is the leftmost pixel; 1 = black.
            const std::uint8_t byte = scanner.bytes[row_start + static_cast<std::size_t>(x / 8)];
            if (byte >> (7 - x % 8) & 1) {
                image.set(x, y, rgb_black);
            }
        }
    }
    return image;
}

PnmImage parse_p3(Scanner& scanner) {
    const auto [width, height] = read_dimensions(scanner);
    read_maxval(scanner);
    const std::uint64_t samples =
        3 * static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    if (samples > scanner.remaining()) {
        throw ParseError("anymap: truncated P3 payload");
    }
    PnmImage image = make_image(width, height, /*bitmap=*/false);
    for (std::int64_t y = 0; y < height; ++y) {
        for (std::int64_t x = 0; x < width; ++x) {
            Rgb value;
            for (std::uint8_t* channel : {&value.r, &value.g, &value.b}) {
                const std::int64_t sample = scanner.next_number("P3 sample");
                if (sample > 255) {
                    throw ParseError("anymap: P3 sample " + std::to_string(sample) +
                                     " exceeds maxval 255");
                }
                *channel = static_cast<std::uint8_t>(sample);
            }
            image.set(x, y, value);
        }
    }
    scanner.expect_end("P3");
    return image;
}

PnmImage parse_p6(Scanner& scanner) {
    const auto [width, height] = read_dimensions(scanner);
    read_maxval(scanner);
    scanner.expect_payload_separator();
    const std::uint64_t needed =
        3 * static_cast<std::uint64_t>(width) * static_cast<std::uint64_t>(height);
    if (needed > scanner.remaining()) {
        throw ParseError("anymap: truncated P6 payload");
    }
    if (needed < scanner.remaining()) {
        throw ParseError("anymap: trailing data after P6 payload");
    }
    PnmImage image = make_image(width, height, /*bitmap=*/false);
    const std::uint8_t* sample = scanner.bytes.data() + scanner.pos;
    for (std::int64_t y = 0; y < height; ++y) {
        for (std::int64_t x = 0; x < width; ++x) {
            const Rgb value{sample[0], sample[1], sample[2]};
            sample += 3;
            image.set(x, y, value);
        }
    }
    return image;
}

bool is_mono(Rgb value) {
    return value == rgb_black || value == rgb_white;
}

void check_emittable(const PnmImage& image, bool bitmap_format) {
    if (image.width < 1 || image.height < 1 ||
        image.pixels.size() != static_cast<std::size_t>(image.width * image.height)) {
        throw std::invalid_argument("emit_pnm: image buffer does not match its dimensions");
    }
    if (bitmap_format) {
        for (const Rgb value : image.pixels) {
            if (!is_mono(value)) {
                throw std::invalid_argument(
                    "emit_pnm: bitmap formats need pure black/white pixels");
            }
        }
    }
}

}  // namespace

Rgb PnmImage::at(std::int64_t x, std::int64_t y) const {
    if (x < 0 || x >= width || y < 0 || y >= height) {
        throw std::out_of_range("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") outside image");
    }
    return pixels[static_cast<std::size_t>(y * width + x)];
}

void PnmImage::set(std::int64_t x, std::int64_t y, Rgb value) {
    if (x < 0 || x >= width || y < 0 || y >= height) {
        throw std::out_of_range("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") outside image");
    }
    pixels[static_cast<std::size_t>(y * width + x)] = value;
}

PnmImage make_image(std::int64_t width, std::int64_t height, bool bitmap, Rgb fill) {
    if (width < 1 || height < 1 || width > max_extent || height > max_extent) {
        throw std::invalid_argument("image dimensions out of range");
    }
    PnmImage image;
    image.is_bitmap = bitmap;
    image.width = width;
    image.height = height;
    image.pixels.assign(static_cast<std::size_t>(width * height), fill);
    return image;
}

PnmImage parse_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw ParseError("anymap: missing P? magic");
    }
    Scanner scanner{bytes, 2};
    switch (bytes[1]) {
        case '1': return parse_p1(scanner);
        case '3': return parse_p3(scanner);
        case '4': return parse_p4(scanner);
        case '6': return parse_p6(scanner);
        case '2':
        case '5':
            throw ParseError("anymap: graymaps (P2/P5) are not supported");
        default:
            throw ParseError("anymap: unknown format P" + std::string(1, char(bytes[1])));
    }
}

std::vector<std::uint8_t> emit_pnm(const PnmImage& image, PnmFormat format) {
    const bool bitmap_format = format == PnmFormat::p1 || format == PnmFormat::p4;
    check_emittable(image, bitmap_format);

    std::string header = "P";
    switch (format) {
        case PnmFormat::p1: header += '1'; break;
        case PnmFormat::p3: header += '3'; break;
        case PnmFormat::p4: header += '4'; break;
        case PnmFormat::p6: header += '6'; break;
    }
    header += '\n' + std::to_string(image.width) + ' ' + std::to_string(image.height) + '\n';
    if (!bitmap_format) {
        header += "255\n";
    }

    std::vector<std::uint8_t> out(header.begin(), header.end());
    switch (format) {
        case PnmFormat::p1:
            for (std::int64_t y = 0; y < image.height; ++y) {
                for (std::int64_t x = 0; x < image.width; ++x) {
                    out.push_back(image.at(x, y) == rgb_black ? '1' : '0');
                }
                out.push_back('\n');
            }
            break;
        case PnmFormat::p4:
            for (std::int64_t y = 0; y < image.height; ++y) {
                std::uint8_t byte = 0;
                int filled = 0;
                for (std::int64_t x = 0; x < image.width; ++x) {
                    byte = static_cast<std::uint8_t>(byte << 1 | (image.at(x, y) == rgb_black));
                    if (++filled == 8) {
                        out.push_back(byte);
                        byte = 0;
                        filled = 0;
                    }
                }
                if (filled > 0) {
                    out.push_back(static_cast<std::uint8_t>(byte << (8 - filled)));
                }
            }
            break;
        case PnmFormat::p3:
            for (std::int64_t y = 0; y < image.height; ++y) {
                std::string line;
                for (std::int64_t x = 0; x < image.width; ++x) {
                    const Rgb value = image.at(x, y);
                    if (x) line += ' ';
                    line += std::to_string(value.r) + ' ' + std::to_string(value.g) + ' ' +
                            std::to_string(value.b);
                }
                line += '\n';
                out.insert(out.end(), line.begin(), line.end());
            }
            break;
        case PnmFormat::p6:
            for (const Rgb value : image.pixels) {
                out.push_back(value.r);
                out.push_back(value.g);
                out.push_back(value.b);
            }
            break;
    }
    return out;
}

}  // namespace tupper
