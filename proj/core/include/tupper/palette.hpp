#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tupper/pnm.hpp"

namespace tupper {

// Concrete RGB values for colour indices 0..m; entry 0 is the background.
// Entries must be pairwise distinct or image ingestion would be ambiguous.
struct Palette {
    std::vector<Rgb> entries;

    int colors() const { return static_cast<int>(entries.size()) - 1; }
    Rgb background() const { return entries.front(); }
    Rgb color(int index) const { return entries.at(static_cast<std::size_t>(index)); }

    friend bool operator==(const Palette&, const Palette&) = default;
};

// Index whose RGB matches exactly, or nullopt. No nearest-colour matching.
std::optional<int> palette_index(const Palette& palette, Rgb value);

// Text format: one "index R G B" line per entry, index 0 first, indices
// consecutive. Throws ParseError on malformed text or duplicate RGB values.
Palette parse_palette(std::string_view text);
std::string emit_palette(const Palette& palette);

}  // namespace tupper
