#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tupper {

// Malformed on-disk input: anymap image, voxel container, palette, or k text.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A cell decoded to more than one colour while a single-colour view was
// required. Only reachable for k values that were not produced by encode().
class MultiColorError : public std::runtime_error {
public:
    MultiColorError(std::vector<std::int64_t> cell, std::vector<int> colors)
        : std::runtime_error(describe(cell, colors)),
          cell_(std::move(cell)),
          colors_(std::move(colors)) {}

    const std::vector<std::int64_t>& cell() const { return cell_; }
    const std::vector<int>& colors() const { return colors_; }

private:
    static std::string describe(const std::vector<std::int64_t>& cell,
                                const std::vector<int>& colors);

    std::vector<std::int64_t> cell_;
    std::vector<int> colors_;
};

}  // namespace tupper
