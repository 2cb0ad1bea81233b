#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tupper/params.hpp"

namespace tupper {

// An n-dimensional array of colour indices over [0,A_1) x ... x [0,A_n).
// Index 0 is background (unpainted); 1..m assign the cell to colour class j.
// Storage is row-major with the first axis slowest-varying, so storage order
// and bit-significance order of the encoding coincide.
class ColorField {
public:
    // All-background field of the given geometry.
    explicit ColorField(GridParams params);

    const GridParams& params() const { return params_; }
    std::size_t cell_count() const { return cells_.size(); }

    std::uint8_t at(std::span<const std::int64_t> cell) const;
    void set(std::span<const std::int64_t> cell, std::uint8_t color);

    std::uint8_t at_flat(std::size_t index) const { return cells_.at(index); }
    void set_flat(std::size_t index, std::uint8_t color);

    // Row-major payload, one byte per cell.
    std::span<const std::uint8_t> raw() const { return cells_; }

    // Bounds-checked conversion from a cell tuple to the flat storage index.
    std::size_t flat_index(std::span<const std::int64_t> cell) const;

    friend bool operator==(const ColorField&, const ColorField&) = default;

private:
    GridParams params_;
    std::vector<std::uint8_t> cells_;
};

// Odometer step through the lattice, last axis fastest. `cell` must hold a
// valid tuple; returns false once it wraps back to the origin.
bool next_cell(std::span<std::int64_t> cell, std::span<const std::int64_t> dims);

}  // namespace tupper
