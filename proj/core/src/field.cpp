#include "tupper/field.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace tupper {

namespace {

std::size_t checked_cell_count(const GridParams& params) {
    std::size_t total = 1;
    for (std::int64_t extent : params.dims) {
        const auto e = static_cast<std::uint64_t>(extent);
        if (e != 0 && total > std::numeric_limits<std::size_t>::max() / e) {
            throw std::invalid_argument("ColorField: grid has too many cells to hold in memory");
        }
        total *= static_cast<std::size_t>(e);
    }
    return total;
}

}  // namespace

ColorField::ColorField(GridParams params)
    : params_(std::move(params)), cells_(checked_cell_count(params_), 0) {}

std::size_t ColorField::flat_index(std::span<const std::int64_t> cell) const {
    if (cell.size() != params_.dims.size()) {
        throw std::out_of_range("ColorField: cell tuple has wrong length");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (cell[i] < 0 || cell[i] >= params_.dims[i]) {
            throw std::out_of_range("ColorField: coordinate " + std::to_string(cell[i]) +
                                    " outside [0, " + std::to_string(params_.dims[i]) +
                                    ") on axis " + std::to_string(i + 1));
        }
        index = index * static_cast<std::size_t>(params_.dims[i]) + static_cast<std::size_t>(cell[i]);
    }
    return index;
}

std::uint8_t ColorField::at(std::span<const std::int64_t> cell) const {
    return cells_[flat_index(cell)];
}

void ColorField::set(std::span<const std::int64_t> cell, std::uint8_t color) {
    const std::size_t index = flat_index(cell);
    if (color > params_.colors) {
        throw std::out_of_range("ColorField: colour index " + std::to_string(color) +
                                " exceeds colour count " + std::to_string(params_.colors));
    }
    cells_[index] = color;
}

void ColorField::set_flat(std::size_t index, std::uint8_t color) {
    if (color > params_.colors) {
        throw std::out_of_range("ColorField: colour index " + std::to_string(color) +
                                " exceeds colour count " + std::to_string(params_.colors));
    }
    cells_.at(index) = color;
}

bool next_cell(std::span<std::int64_t> cell, std::span<const std::int64_t> dims) {
    for (std::size_t i = cell.size(); i-- > 0;) {
        if (++cell[i] < dims[i]) {
            return true;
        }
        cell[i] = 0;
    }
    return false;
}

}  // namespace tupper
