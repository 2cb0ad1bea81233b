#include "tupper/voxel.hpp"

#include <string>

#include "tupper/errors.hpp"

namespace tupper {

namespace {

constexpr char magic[4] = {'N', 'V', 'O', 'X'};
constexpr std::uint8_t format_version = 1;

std::int64_t parse_header_number(std::span<const std::uint8_t> bytes, std::size_t& pos,
                                 const char* what) {
    while (pos < bytes.size() && bytes[pos] == ' ') ++pos;
    if (pos >= bytes.size() || bytes[pos] < '0' || bytes[pos] > '9') {
        throw ParseError(std::string("voxel container: expected a number for ") + what);
    }
    std::int64_t value = 0;
    while (pos < bytes.size() && bytes[pos] >= '0' && bytes[pos] <= '9') {
        value = value * 10 + (bytes[pos] - '0');
        if (value > (std::int64_t(1) << 40)) {
            throw ParseError(std::string("voxel container: ") + what + " is unreasonably large");
        }
        ++pos;
    }
    return value;
}

}  // namespace

std::vector<std::uint8_t> emit_voxels(const ColorField& field) {
    const GridParams& params = field.params();
    std::string header(magic, sizeof magic);
    header += char(format_version);
    header += std::to_string(params.rank) + ' ' + std::to_string(params.colors);
    for (std::int64_t extent : params.dims) {
        header += ' ' + std::to_string(extent);
    }
    header += '\n';

    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), field.raw().begin(), field.raw().end());
    return out;
}

ColorField parse_voxels(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < sizeof magic || !std::equal(magic, magic + sizeof magic, bytes.begin())) {
        throw ParseError("voxel container: missing NVOX magic");
    }
    if (bytes.size() < sizeof magic + 1) {
        throw ParseError("voxel container: truncated before version byte");
    }
    if (bytes[sizeof magic] != format_version) {
        throw ParseError("voxel container: unsupported version " +
                         std::to_string(int(bytes[sizeof magic])));
    }

    std::size_t pos = sizeof magic + 1;
    const std::int64_t rank = parse_header_number(bytes, pos, "axis count");
    if (rank > 64) {
        throw ParseError("voxel container: axis count " + std::to_string(rank) + " is too large");
    }
    const std::int64_t colors = parse_header_number(bytes, pos, "colour count");
    std::vector<std::int64_t> dims;
    std::uint64_t payload = 1;
    for (std::int64_t i = 0; i < rank; ++i) {
        const std::int64_t extent = parse_header_number(bytes, pos, "axis extent");
        // Keeps the running product well under overflow; the exact payload
        // check below enforces the real bound.
        if (extent > 0 && payload > (std::uint64_t(1) << 40) / static_cast<std::uint64_t>(extent)) {
            throw ParseError("voxel container: grid is unreasonably large");
        }
        payload *= static_cast<std::uint64_t>(extent);
        dims.push_back(extent);
    }
    if (pos >= bytes.size() || bytes[pos] != '\n') {
        throw ParseError("voxel container: header line not terminated");
    }
    ++pos;

    GridParams params;
    try {
        params = make_params(static_cast<int>(rank), static_cast<int>(colors), std::move(dims));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("voxel container: ") + e.what());
    }

    const std::size_t available = bytes.size() - pos;
    if (available < payload) {
        throw ParseError("voxel container: payload has " + std::to_string(available) +
                         " bytes, header promises " + std::to_string(payload));
    }
    if (available > payload) {
        throw ParseError("voxel container: trailing data after payload");
    }

    ColorField field{params};
    for (std::size_t i = 0; i < payload; ++i) {
        const std::uint8_t color = bytes[pos + i];
        if (color > params.colors) {
            throw ParseError("voxel container: cell byte " + std::to_string(int(color)) +
                             " exceeds colour count " + std::to_string(params.colors));
        }
        field.set_flat(i, color);
    }
    return field;
}

}  // namespace tupper
