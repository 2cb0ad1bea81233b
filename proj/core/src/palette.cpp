#include "tupper/palette.hpp"

#include <sstream>

#include "tupper/errors.hpp"

namespace tupper {

std::optional<int> palette_index(const Palette& palette, Rgb value) {
    for (std::size_t i = 0; i < palette.entries.size(); ++i) {
        if (palette.entries[i] == value) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

Palette parse_palette(std::string_view text) {
    Palette palette;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;  // blank line
        }
        std::istringstream fields(line);
        long long index = -1, r = -1, g = -1, b = -1;
        std::string extra;
        if (!(fields >> index >> r >> g >> b) || (fields >> extra)) {
            throw ParseError("palette line " + std::to_string(line_no) +
                             ": expected 'index R G B'");
        }
        if (index != static_cast<long long>(palette.entries.size())) {
            throw ParseError("palette line " + std::to_string(line_no) + ": expected index " +
                             std::to_string(palette.entries.size()) + ", got " +
                             std::to_string(index));
        }
        for (long long channel : {r, g, b}) {
            if (channel < 0 || channel > 255) {
                throw ParseError("palette line " + std::to_string(line_no) +
                                 ": channel value " + std::to_string(channel) +
                                 " outside 0..255");
            }
        }
        const Rgb value{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                        static_cast<std::uint8_t>(b)};
        if (palette_index(palette, value)) {
            throw ParseError("palette line " + std::to_string(line_no) +
                             ": duplicate RGB value; entries must be pairwise distinct");
        }
        palette.entries.push_back(value);
    }
    if (palette.entries.empty()) {
        throw ParseError("palette: no entries");
    }
    return palette;
}

std::string emit_palette(const Palette& palette) {
    std::string out;
    for (std::size_t i = 0; i < palette.entries.size(); ++i) {
        const Rgb value = palette.entries[i];
        out += std::to_string(i) + ' ' + std::to_string(value.r) + ' ' +
               std::to_string(value.g) + ' ' + std::to_string(value.b) + '\n';
    }
    return out;
}

}  // namespace tupper
